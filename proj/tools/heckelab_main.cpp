// Command-line front end: verification suites, Garside normal forms and
// Hecke classes of braid words, and the built-in system roster.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "heckelab/heckelab.hpp"

namespace {

using namespace heckelab;

int write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return 2;
  }
  out << text;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification workbench for Weyl groups, spherical braid "
               "groups and Iwahori-Hecke algebras"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run verification suites and emit a report");
  std::string systems_arg, parabolics = "all", suites_arg = "all";
  std::string format = "json", output;
  std::uint64_t seed = 0;
  int jobs = 1;
  bool with_f4 = false;
  std::size_t max_group_order = 1200000;
  verify->add_option("--systems", systems_arg,
                     "comma-separated type names or datum files (default roster if omitted)");
  verify->add_option("--parabolics", parabolics,
                     "'all' or semicolon-separated subsets of 1-based indices, e.g. 'none;1;1,2'");
  verify->add_option("--suites", suites_arg, "comma list of combinatorics,braid,hecke,serre,all");
  verify->add_option("--seed", seed, "seed for randomized property checks");
  verify->add_option("--format", format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}));
  verify->add_option("--output", output, "report file (stdout if omitted)");
  verify->add_option("--jobs", jobs, "worker threads (report is identical for any value)");
  verify->add_option("--max-group-order", max_group_order, "enumeration safety cap");
  verify->add_flag("--with-f4", with_f4, "add F4 to the default roster");

  // nf
  auto* nf = app.add_subcommand("nf", "Garside normal form of a braid word");
  std::string nf_system, nf_word;
  nf->add_option("system", nf_system, "type name or datum file")->required();
  nf->add_option("word", nf_word, "signed 1-based letters, e.g. '1 2 -1'")->required();

  // hecke-class
  auto* hc = app.add_subcommand("hecke-class", "Hecke algebra class of a braid word");
  std::string hc_system, hc_word;
  hc->add_option("system", hc_system, "type name or datum file")->required();
  hc->add_option("word", hc_word, "signed 1-based letters, e.g. '1 1'")->required();

  // list-systems
  auto* ls = app.add_subcommand("list-systems", "show the built-in roster");
  bool ls_f4 = false;
  ls->add_flag("--with-f4", ls_f4, "include F4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) {
      SuiteConfig config;
      if (!systems_arg.empty()) {
        std::stringstream ss(systems_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) config.systems.push_back(tok);
      }
      config.parabolics = parabolics;
      config.suites = parse_suites(suites_arg);
      config.seed = seed;
      config.jobs = jobs;
      config.with_f4 = with_f4;
      config.max_group_order = max_group_order;
      RunResult result = run_suites(config);
      std::string text =
          format == "json" ? report_json(result.report) : report_markdown(result.report);
      int rc = write_output(text, output);
      if (rc != 0) return rc;
      std::cerr << result.report.entries.size() << " checks, " << result.failures
                << " failures\n";
      return result.failures == 0 ? 0 : 1;
    }
    if (*nf) {
      SystemPtr sys = resolve_system(nf_system);
      GarsideNF form = nf_from_word(sys, parse_braid_word(nf_word));
      std::cout << nf_str(form) << "\n";
      return 0;
    }
    if (*hc) {
      SystemPtr sys = resolve_system(hc_system);
      HeckeElt h = eval_braid(sys, parse_braid_word(hc_word));
      std::cout << hecke_str(h) << "\n";
      return 0;
    }
    if (*ls) {
      std::cout << "name      rank  |W|      l(w0)  positive roots\n";
      for (const auto& name : default_roster(ls_f4)) {
        SystemPtr sys = CoxeterSystem::named(name);
        std::ostringstream line;
        line.width(10);
        line << std::left << name;
        line.width(6);
        line << sys->rank();
        line.width(9);
        line << sys->group_order();
        line.width(7);
        line << sys->longest_element().length();
        line << sys->positive_roots().size();
        std::cout << line.str() << "\n";
      }
      std::cout << "\nname grammar: A<n>, B<n>, D<n>, G2, F4 and products joined by 'x' "
                   "(e.g. A2xA1);\na datum file {\"name\":..., \"bond_matrix\":[[...]]} is "
                   "accepted wherever a name is.\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const MalformedMatrix& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NonSpherical& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GroupOrderExceedsCap& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidGenerator& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
