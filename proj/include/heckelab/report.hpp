#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace heckelab {

inline constexpr const char* kVersion = "0.1.0";

struct ReportEntry {
  std::string system;
  std::string parabolic;  // "{1,2}" or "-" for per-system checks
  std::string suite;
  std::string check;
  std::string case_label;
  std::string status;  // "pass" | "fail" | "findings"
  std::string detail;
};

struct Report {
  std::string version = kVersion;
  std::uint64_t seed = 0;
  std::vector<std::string> roster;
  std::vector<ReportEntry> entries;

  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& e : entries)
      if (e.status == "fail") ++n;
    return n;
  }
};

inline std::string report_json(const Report& r) {
  nlohmann::ordered_json j;
  j["header"] = {{"version", r.version}, {"seed", r.seed}, {"roster", r.roster}};
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : r.entries) {
    j["entries"].push_back({{"system", e.system},
                            {"parabolic", e.parabolic},
                            {"suite", e.suite},
                            {"check", e.check},
                            {"case", e.case_label},
                            {"status", e.status},
                            {"detail", e.detail}});
  }
  return j.dump(2) + "\n";
}

inline std::string report_markdown(const Report& r) {
  auto escape = [](std::string s) {
    std::string out;
    for (char c : s) {
      if (c == '|') out += "\\|";
      else if (c == '\n') out += "<br>";
      else out += c;
    }
    return out;
  };
  std::string out;
  out += "# Verification report\n\n";
  out += "- version: " + r.version + "\n";
  out += "- seed: " + std::to_string(r.seed) + "\n";
  out += "- roster:";
  for (const auto& s : r.roster) out += " " + s;
  out += "\n- failures: " + std::to_string(r.failure_count()) + "\n\n";
  out += "| system | parabolic | suite | check | case | status | detail |\n";
  out += "|---|---|---|---|---|---|---|\n";
  for (const auto& e : r.entries) {
    out += "| " + escape(e.system) + " | " + escape(e.parabolic) + " | " + escape(e.suite) +
           " | " + escape(e.check) + " | " + escape(e.case_label) + " | " + escape(e.status) +
           " | " + escape(e.detail) + " |\n";
  }
  return out;
}

}  // namespace heckelab
