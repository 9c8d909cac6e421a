// Copyright 2026 The Hyperpart Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON schema for PlantedModelSpec (see docs/schemas.md):
//
//   {
//     "n": 12, "k": 2, "part_sizes": [6, 6], "M": 3,
//     "alpha": {"3": 1.0},
//     "rule": {"variant": "TwoParam", "p": 0.5, "q": 0.2}
//   }
//
// Other rule variants:
//   {"variant": "ThreeUniform", "p1": .., "p2": .., "p3": ..}
//   {"variant": "PlantedClique"}
//   {"variant": "CustomTable", "entries": [{"m": 3, "labels": [1,1,2], "probability": 0.3}, ...]}
//
// "n" and "k" are redundant with "part_sizes" and checked against it.

#ifndef HYPERPART_MODEL_JSON_HPP
#define HYPERPART_MODEL_JSON_HPP

#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

#include "hyperpart/error.hpp"
#include "hyperpart/planted_model.hpp"

namespace hyperpart {

using Json = nlohmann::ordered_json;

inline Json RuleToJson(const ProbabilityRule& rule) {
  Json j;
  j["variant"] = RuleName(rule);
  std::visit(
      [&](const auto& r) {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, TwoParam>) {
          j["p"] = r.p;
          j["q"] = r.q;
        } else if constexpr (std::is_same_v<R, ThreeUniform>) {
          j["p1"] = r.p1;
          j["p2"] = r.p2;
          j["p3"] = r.p3;
        } else if constexpr (std::is_same_v<R, CustomTable>) {
          Json entries = Json::array();
          for (const auto& [key, prob] : r.entries) {
            entries.push_back({{"m", key.first}, {"labels", key.second}, {"probability", prob}});
          }
          j["entries"] = std::move(entries);
        }
      },
      rule);
  return j;
}

inline Json SpecToJson(const PlantedModelSpec& spec) {
  Json j;
  j["n"] = spec.n();
  j["k"] = spec.k();
  j["part_sizes"] = spec.part_sizes;
  j["M"] = spec.max_edge_size;
  Json alpha = Json::object();
  for (const auto& [m, a] : spec.alpha) alpha[std::to_string(m)] = a;
  j["alpha"] = std::move(alpha);
  j["rule"] = RuleToJson(spec.rule);
  return j;
}

namespace detail {

template <typename T>
T Field(const Json& j, const char* name) {
  Require(j.is_object() && j.contains(name), ErrorKind::kSchema, std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorKind::kSchema, std::string("field '") + name + "': " + e.what());
  }
}

}  // namespace detail

inline ProbabilityRule RuleFromJson(const Json& j) {
  const auto variant = detail::Field<std::string>(j, "variant");
  if (variant == "TwoParam") return TwoParam{detail::Field<double>(j, "p"), detail::Field<double>(j, "q")};
  if (variant == "ThreeUniform") {
    return ThreeUniform{detail::Field<double>(j, "p1"), detail::Field<double>(j, "p2"), detail::Field<double>(j, "p3")};
  }
  if (variant == "PlantedClique") return PlantedClique{};
  if (variant == "CustomTable") {
    CustomTable table;
    const auto entries = detail::Field<Json>(j, "entries");
    Require(entries.is_array(), ErrorKind::kSchema, "'entries' must be an array");
    for (const auto& e : entries) {
      auto labels = detail::Field<std::vector<int>>(e, "labels");
      std::sort(labels.begin(), labels.end());
      table.entries[{detail::Field<int>(e, "m"), labels}] = detail::Field<double>(e, "probability");
    }
    return table;
  }
  Fail(ErrorKind::kSchema, "unknown rule variant '" + variant + "'");
}

inline PlantedModelSpec SpecFromJson(const Json& j) {
  PlantedModelSpec spec;
  spec.part_sizes = detail::Field<std::vector<std::size_t>>(j, "part_sizes");
  spec.max_edge_size = detail::Field<int>(j, "M");
  const auto alpha = detail::Field<Json>(j, "alpha");
  Require(alpha.is_object(), ErrorKind::kSchema, "'alpha' must be an object keyed by edge size");
  for (const auto& [key, value] : alpha.items()) {
    int m = 0;
    try {
      std::size_t used = 0;
      m = std::stoi(key, &used);
      Require(used == key.size(), ErrorKind::kSchema, "bad alpha key '" + key + "'");
    } catch (const std::logic_error&) {
      Fail(ErrorKind::kSchema, "bad alpha key '" + key + "'");
    }
    Require(value.is_number(), ErrorKind::kSchema, "alpha values must be numbers");
    spec.alpha[m] = value.get<double>();
  }
  spec.rule = RuleFromJson(detail::Field<Json>(j, "rule"));
  if (j.contains("n")) {
    Require(detail::Field<std::size_t>(j, "n") == spec.n(), ErrorKind::kSchema, "'n' differs from sum of part_sizes");
  }
  if (j.contains("k")) {
    Require(detail::Field<int>(j, "k") == spec.k(), ErrorKind::kSchema, "'k' differs from number of part_sizes");
  }
  try {
    spec.Validate();
  } catch (const Error& e) {
    Fail(ErrorKind::kSchema, e.detail());
  }
  return spec;
}

inline Json ParseJsonText(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    Fail(ErrorKind::kParse, e.what());
  }
}

inline Json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  Require(static_cast<bool>(in), ErrorKind::kIo, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return ParseJsonText(text);
}

inline Json SummaryToJson(const PopulationSummary& s) {
  Json j;
  j["n"] = s.n;
  j["k"] = s.k;
  Json g = Json::array();
  for (Eigen::Index a = 0; a < s.g.rows(); ++a) {
    Json row = Json::array();
    for (Eigen::Index b = 0; b < s.g.cols(); ++b) row.push_back(s.g(a, b));
    g.push_back(std::move(row));
  }
  j["G"] = std::move(g);
  j["Jtilde"] = s.jtilde;
  j["Dtilde"] = s.dtilde;
  j["d"] = s.d;
  j["lambda_min_G"] = s.lambda_min_g;
  j["delta"] = s.delta;
  j["delta_first_term"] = s.delta_first_term;
  j["delta_second_term"] = s.delta_second_term;
  j["zero_degree_class"] = s.zero_degree_class;
  j["n_1"] = s.largest_part;
  j["n_k"] = s.smallest_part;
  if (s.theorem) {
    const auto& t = *s.theorem;
    Json th;
    th["C"] = t.constant_c;
    th["identifiable"] = t.identifiable;
    th["bound_raw"] = t.bound_raw ? Json(*t.bound_raw) : Json(nullptr);
    th["degree_condition_lhs"] = t.degree_condition_lhs;
    th["degree_condition_rhs"] = t.degree_condition_rhs ? Json(*t.degree_condition_rhs) : Json(nullptr);
    th["degree_condition_met"] = t.degree_condition_met;
    th["deviation_bound"] = t.deviation_bound;
    th["deviation_bound_applies"] = t.deviation_bound_applies;
    j["theorem"] = std::move(th);
  }
  return j;
}

}  // namespace hyperpart

#endif  // HYPERPART_MODEL_JSON_HPP
