#include <cstdio>
#include <fstream>

#include <catch2/catch_amalgamated.hpp>

#include "heckelab/runner.hpp"

using namespace heckelab;

TEST_CASE("config parsing") {
  CHECK(parse_suites("all").size() == 4);
  CHECK(parse_suites("serre") == std::vector<Suite>{Suite::serre});
  CHECK(parse_suites("braid,hecke") == std::vector<Suite>{Suite::braid, Suite::hecke});
  CHECK_THROWS_AS(parse_suites("nope"), ParseError);

  CHECK(parse_parabolics("all", 2) == std::vector<GenMask>{0, 1, 2, 3});
  CHECK(parse_parabolics("none;1;1,2", 2) == std::vector<GenMask>{0, 1, 3});
  CHECK_THROWS_AS(parse_parabolics("5", 2), ParseError);
  CHECK_THROWS_AS(parse_parabolics("zzz", 2), ParseError);
}

TEST_CASE("datum files") {
  auto sys = system_from_datum_text(R"({"name":"my-a2","bond_matrix":[[1,3],[3,1]]})");
  CHECK(sys->name() == "my-a2");
  CHECK(sys->group_order() == 6);
  CHECK_THROWS_AS(system_from_datum_text("{"), MalformedMatrix);
  CHECK_THROWS_AS(system_from_datum_text(R"({"bond_matrix":[[1,5],[5,1]]})"), MalformedMatrix);
  CHECK_THROWS_AS(system_from_datum_text(R"({"name":"x"})"), MalformedMatrix);
  CHECK_THROWS_AS(system_from_datum_file("/nonexistent/path.json"), MalformedMatrix);

  std::string path = "datum_test_b2.json";
  {
    std::ofstream out(path);
    out << R"({"name":"B2-from-file","bond_matrix":[[1,4],[4,1]]})";
  }
  auto b2 = resolve_system("./" + path);
  CHECK(b2->group_order() == 8);
  std::remove(path.c_str());
}

TEST_CASE("A1 full run: counts and statuses") {
  SuiteConfig config;
  config.systems = {"A1"};
  config.seed = 7;
  RunResult r = run_suites(config);
  CHECK(r.failures == 0);
  // combinatorics 2 + 4*2, braid 3 + 2, hecke 3, serre 6*2 + 2 hook entries
  CHECK(r.expected_entries == 10 + 5 + 3 + 14);
  CHECK(r.report.entries.size() == r.expected_entries);
  std::size_t hooks = 0;
  for (const auto& e : r.report.entries)
    if (e.check == "hook_levi_scenario") ++hooks;
  CHECK(hooks == 2);  // r = 1, 2
}

TEST_CASE("reports are deterministic and independent of the job count") {
  SuiteConfig config;
  config.systems = {"A2", "B2"};
  config.seed = 12345;
  RunResult a = run_suites(config);
  RunResult b = run_suites(config);
  CHECK(report_json(a.report) == report_json(b.report));
  CHECK(report_markdown(a.report) == report_markdown(b.report));
  config.jobs = 4;
  RunResult c = run_suites(config);
  CHECK(report_json(a.report) == report_json(c.report));
}

TEST_CASE("the length probe reports its counterexamples verbatim") {
  SuiteConfig config;
  config.systems = {"A2"};
  config.suites = {Suite::combinatorics};
  RunResult r = run_suites(config);
  const ReportEntry* probe = nullptr;
  for (const auto& e : r.report.entries)
    if (e.check == "bruhat_length_probe") probe = &e;
  REQUIRE(probe != nullptr);
  CHECK(probe->status == "findings");
  // s2 < s1 s2 but l(s2 * s1 s2) = 3 != 1
  CHECK(probe->detail.find("x=[2] y=[1 2]") != std::string::npos);
  CHECK(probe->detail.find("x=[1] y=[2 1]") != std::string::npos);
  CHECK(r.failures == 0);  // findings are not failures
}

TEST_CASE("suite selection limits the run") {
  SuiteConfig config;
  config.systems = {"A2"};
  config.suites = {Suite::hecke};
  RunResult r = run_suites(config);
  CHECK(r.report.entries.size() == 3);
  for (const auto& e : r.report.entries) CHECK(e.suite == "hecke");
}

TEST_CASE("explicit parabolic subsets") {
  SuiteConfig config;
  config.systems = {"A2"};
  config.parabolics = "1";
  config.suites = {Suite::serre};
  RunResult r = run_suites(config);
  // one subset: 6 serre checks + hook entry for I={s1} (r=2)
  CHECK(r.report.entries.size() == 7);
  for (const auto& e : r.report.entries) CHECK(e.parabolic == "{1}");
}

TEST_CASE("json report shape") {
  SuiteConfig config;
  config.systems = {"A1"};
  config.suites = {Suite::hecke};
  config.seed = 3;
  RunResult r = run_suites(config);
  auto j = nlohmann::json::parse(report_json(r.report));
  CHECK(j["header"]["seed"] == 3);
  CHECK(j["header"]["version"] == std::string(kVersion));
  CHECK(j["header"]["roster"] == nlohmann::json::array({"A1"}));
  REQUIRE(j["entries"].is_array());
  CHECK(j["entries"].size() == 3);
  for (const auto& e : j["entries"]) {
    CHECK(e.contains("system"));
    CHECK(e.contains("parabolic"));
    CHECK(e.contains("suite"));
    CHECK(e.contains("check"));
    CHECK(e.contains("case"));
    CHECK(e.contains("status"));
    CHECK(e.contains("detail"));
  }
}

TEST_CASE("failure counting drives the exit contract") {
  Report r;
  r.entries.push_back({"X", "-", "hecke", "c", "", "pass", ""});
  r.entries.push_back({"X", "-", "hecke", "c", "", "findings", "probe output"});
  CHECK(r.failure_count() == 0);
  r.entries.push_back({"X", "-", "hecke", "c", "", "fail", "counterexample"});
  CHECK(r.failure_count() == 1);
}

TEST_CASE("group order cap propagates through the runner") {
  SuiteConfig config;
  config.systems = {"A3"};
  config.max_group_order = 5;
  CHECK_THROWS_AS(run_suites(config), GroupOrderExceedsCap);
}

TEST_CASE("default roster") {
  auto roster = default_roster(false);
  CHECK(roster == std::vector<std::string>{"A1", "A2", "A3", "A1xA1", "B2", "B3", "G2", "A4",
                                           "D4"});
  CHECK(default_roster(true).back() == "F4");
}
