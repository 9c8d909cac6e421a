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

#ifndef HYPERPART_SPARSITY_HPP
#define HYPERPART_SPARSITY_HPP

#include <cmath>
#include <map>

#include "hyperpart/hypergraph.hpp"
#include "hyperpart/model_json.hpp"

namespace hyperpart {

// theta_m = |E_m| / (n (ln n)^2), the per-size edge density coefficient.
struct SparsityDiagnostic {
  std::size_t n = 0;
  std::size_t num_edges = 0;
  double scale = 0.0;  // n (ln n)^2
  std::map<int, std::size_t> edges_by_size;
  std::map<int, double> theta;
};

inline SparsityDiagnostic DiagnoseSparsity(const Hypergraph& h) {
  SparsityDiagnostic out;
  out.n = h.num_nodes();
  out.num_edges = h.num_edges();
  const double ln_n = out.n > 0 ? std::log(static_cast<double>(out.n)) : 0.0;
  out.scale = static_cast<double>(out.n) * ln_n * ln_n;
  int largest = 2;
  for (const auto& e : h.edges()) {
    ++out.edges_by_size[static_cast<int>(e.size())];
    largest = std::max(largest, static_cast<int>(e.size()));
  }
  for (int m = 2; m <= largest; ++m) {
    const auto it = out.edges_by_size.find(m);
    const double count = it == out.edges_by_size.end() ? 0.0 : static_cast<double>(it->second);
    out.theta[m] = out.scale > 0.0 ? count / out.scale : 0.0;
  }
  return out;
}

inline Json SparsityToJson(const SparsityDiagnostic& s) {
  Json j;
  j["n"] = s.n;
  j["num_edges"] = s.num_edges;
  j["n_ln2_n"] = s.scale;
  j["edges_over_n_ln2_n"] = s.scale > 0.0 ? Json(static_cast<double>(s.num_edges) / s.scale) : Json(nullptr);
  Json counts = Json::object(), theta = Json::object();
  for (const auto& [m, c] : s.edges_by_size) counts[std::to_string(m)] = c;
  for (const auto& [m, t] : s.theta) theta[std::to_string(m)] = t;
  j["edges_by_size"] = std::move(counts);
  j["theta"] = std::move(theta);
  return j;
}

}  // namespace hyperpart

#endif  // HYPERPART_SPARSITY_HPP
