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

#ifndef HYPERPART_TESTS_TEST_UTIL_HPP
#define HYPERPART_TESTS_TEST_UTIL_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "hyperpart/hyperpart.hpp"

namespace hyperpart::testing {

// Random hypergraph with edge sizes in [2, max_size]; may leave nodes isolated.
inline Hypergraph RandomHypergraph(std::mt19937_64& rng, std::size_t n, std::size_t edges, int max_size) {
  Hypergraph h(n);
  std::uniform_int_distribution<int> size(2, std::max(2, std::min<int>(max_size, static_cast<int>(n))));
  for (std::size_t e = 0; e < edges; ++e) {
    const auto picked = SampleDistinct(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(size(rng)), rng);
    h.AddEdge(Edge(picked.begin(), picked.end()));
  }
  return h;
}

// Random hypergraph in which every node has degree >= 1.
inline Hypergraph RandomCoveredHypergraph(std::mt19937_64& rng, std::size_t n, std::size_t edges, int max_size) {
  Hypergraph h = RandomHypergraph(rng, n, edges, max_size);
  const auto deg = Degrees(h);
  std::uniform_int_distribution<NodeId> other(0, static_cast<NodeId>(n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    if (deg[i] > 0) continue;
    NodeId j = other(rng);
    while (j == i) j = other(rng);
    h.AddEdge({static_cast<NodeId>(i), j});
  }
  return h;
}

inline std::vector<NodeId> RandomPermutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), NodeId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline double MaxAbs(const Eigen::MatrixXd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

// Random spec with n <= max_n, M <= max_m, k <= max_k over all rule variants.
inline PlantedModelSpec RandomSpec(std::mt19937_64& rng, int variant, std::size_t max_n = 12, int max_m = 4,
                                   int max_k = 3) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  PlantedModelSpec spec;
  int k = std::uniform_int_distribution<int>(1, max_k)(rng);
  if (variant == 2) k = 2;
  std::size_t n = std::uniform_int_distribution<std::size_t>(std::max<std::size_t>(4, 2 * static_cast<std::size_t>(k)), max_n)(rng);
  spec.part_sizes.assign(static_cast<std::size_t>(k), 1);
  for (std::size_t extra = static_cast<std::size_t>(k); extra < n; ++extra) {
    ++spec.part_sizes[std::uniform_int_distribution<std::size_t>(0, static_cast<std::size_t>(k - 1))(rng)];
  }
  spec.max_edge_size = std::uniform_int_distribution<int>(2, max_m)(rng);
  if (variant == 1) spec.max_edge_size = 3;
  for (int m = 2; m <= spec.max_edge_size; ++m) {
    if (variant == 1 && m != 3) continue;
    spec.alpha[m] = u(rng) < 0.2 ? 0.0 : u(rng);
  }
  if (variant == 1) spec.alpha[3] = 0.2 + 0.8 * u(rng);
  if (variant == 2) {
    // Clique class is the smaller one.
    std::sort(spec.part_sizes.begin(), spec.part_sizes.end());
  }
  switch (variant) {
    case 0: {
      const double p = u(rng), q = u(rng) * (1.0 - p);
      spec.rule = TwoParam{p, q};
      break;
    }
    case 1:
      spec.rule = ThreeUniform{u(rng), u(rng), u(rng)};
      break;
    case 2:
      spec.rule = PlantedClique{};
      break;
    default:
      spec.rule = MakeTable(k, spec.max_edge_size, [&](int, std::span<const int>) { return u(rng); });
      break;
  }
  return spec;
}

}  // namespace hyperpart::testing

#endif  // HYPERPART_TESTS_TEST_UTIL_HPP
