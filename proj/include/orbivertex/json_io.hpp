#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orbivertex/partition.hpp"
#include "orbivertex/series.hpp"

namespace orbivertex {

using nlohmann::json;

inline json partition_to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array of integers");
  return Partition(j.get<std::vector<int>>());
}

/// Series dump: variables, window, and terms sorted lexicographically by
/// exponent vector, with decimal-string coefficients.
inline json series_to_json(const Series& s) {
  json j;
  j["vars"] = json::array();
  for (int i = 0; i < s.registry()->size(); ++i) j["vars"].push_back(s.registry()->var(i).name);
  j["window"] = {{"q", s.q_window()}, {"v", s.v_window()}};
  j["terms"] = json::array();
  for (const auto& [m, c] : s.terms()) {  // std::map iterates in lex order
    json t;
    t["exp"] = m;
    t["coeff"] = c.str();
    j["terms"].push_back(std::move(t));
  }
  return j;
}

inline Rat rat_from_string(const std::string& str) { return Rat(str); }

inline Series series_from_json(const json& j, const RegistryPtr& reg) {
  Series s(reg, j.at("window").at("q").get<long long>(), j.at("window").at("v").get<long long>());
  for (const auto& t : j.at("terms")) {
    Mono m = t.at("exp").get<std::vector<int>>();
    if (static_cast<int>(m.size()) != reg->size())
      throw std::invalid_argument("series JSON: exponent arity mismatch");
    s.add_term(m, rat_from_string(t.at("coeff").get<std::string>()));
  }
  s.tighten_floors();
  return s;
}

/// Parse a comma-separated partition like "3,1" (empty string = empty partition).
inline Partition partition_from_string(const std::string& str) {
  std::vector<int> parts;
  std::string cur;
  for (char ch : str) {
    if (ch == ',') {
      if (!cur.empty()) parts.push_back(std::stoi(cur));
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(ch))) {
      cur += ch;
    }
  }
  if (!cur.empty()) parts.push_back(std::stoi(cur));
  return Partition(parts);
}

}  // namespace orbivertex
