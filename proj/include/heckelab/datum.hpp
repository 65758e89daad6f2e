#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "heckelab/coxeter.hpp"

namespace heckelab {

/// Coxeter datum document: {"name": "...", "bond_matrix": [[1,3],[3,1]]}.
inline SystemPtr system_from_datum_text(const std::string& text,
                                        CoxeterSystem::Options opt = {}) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MalformedMatrix(std::string("datum parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("bond_matrix") || !j["bond_matrix"].is_array())
    throw MalformedMatrix("datum must be an object with a 'bond_matrix' array");
  Bonds bonds;
  for (const auto& row : j["bond_matrix"]) {
    if (!row.is_array()) throw MalformedMatrix("bond_matrix rows must be arrays");
    std::vector<int> r;
    for (const auto& x : row) {
      if (!x.is_number_integer()) throw MalformedMatrix("bond entries must be integers");
      r.push_back(x.get<int>());
    }
    bonds.push_back(std::move(r));
  }
  std::string name = j.value("name", std::string("custom"));
  return CoxeterSystem::build(bonds, name, opt);
}

inline SystemPtr system_from_datum_file(const std::string& path,
                                        CoxeterSystem::Options opt = {}) {
  std::ifstream in(path);
  if (!in) throw MalformedMatrix("cannot open datum file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return system_from_datum_text(ss.str(), opt);
}

/// Resolve a system argument: a datum file path (contains '/' or ends in
/// ".json") or a built-in type name.
inline SystemPtr resolve_system(const std::string& name_or_path, CoxeterSystem::Options opt = {}) {
  if (name_or_path.find('/') != std::string::npos ||
      (name_or_path.size() > 5 && name_or_path.substr(name_or_path.size() - 5) == ".json"))
    return system_from_datum_file(name_or_path, opt);
  return CoxeterSystem::named(name_or_path, opt);
}

}  // namespace heckelab
