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

// Err(psi, psi') = min over label bijections sigma of #{i : psi_i != sigma(psi'_i)}.
// Label 0 (unassigned) never matches anything.

#ifndef HYPERPART_MISCLASSIFICATION_HPP
#define HYPERPART_MISCLASSIFICATION_HPP

#include <algorithm>
#include <cstddef>
#include <limits>
#include <numeric>
#include <vector>

#include "hyperpart/error.hpp"
#include "hyperpart/hypergraph.hpp"

namespace hyperpart {

namespace detail {

// Square confusion matrix over labels 1..K, K = largest label in either input.
inline std::vector<std::vector<long long>> Confusion(const std::vector<int>& a, const std::vector<int>& b,
                                                     int classes) {
  std::vector<std::vector<long long>> c(static_cast<std::size_t>(classes),
                                        std::vector<long long>(static_cast<std::size_t>(classes), 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] >= 1 && b[i] >= 1) ++c[static_cast<std::size_t>(a[i] - 1)][static_cast<std::size_t>(b[i] - 1)];
  }
  return c;
}

inline int ClassCount(const PartitionAssignment& a, const PartitionAssignment& b) {
  int classes = std::max(a.k, b.k);
  for (int label : a.labels) classes = std::max(classes, label);
  for (int label : b.labels) classes = std::max(classes, label);
  return std::max(classes, 1);
}

inline void CheckInputs(const PartitionAssignment& psi, const PartitionAssignment& psi_prime) {
  Require(psi.size() == psi_prime.size(), ErrorKind::kLengthMismatch,
          "partitions have " + std::to_string(psi.size()) + " and " + std::to_string(psi_prime.size()) + " nodes");
  for (int label : psi.labels) Require(label >= 0, ErrorKind::kInvalidArgument, "negative label");
  for (int label : psi_prime.labels) Require(label >= 0, ErrorKind::kInvalidArgument, "negative label");
}

// Maximum-weight perfect matching on a square matrix (Hungarian method,
// potentials formulation on the negated weights).
inline long long MaxAssignment(const std::vector<std::vector<long long>>& w) {
  const std::size_t n = w.size();
  if (n == 0) return 0;
  long long top = 0;
  for (const auto& row : w) {
    for (long long v : row) top = std::max(top, v);
  }
  const long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(n + 1, 0), v(n + 1, 0), minv(n + 1);
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = p[j0];
      long long delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const long long cur = (top - w[i0 - 1][j - 1]) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  long long total = 0;
  for (std::size_t j = 1; j <= n; ++j) total += w[p[j] - 1][j - 1];
  return total;
}

inline long long MaxAssignmentBruteForce(const std::vector<std::vector<long long>>& w) {
  std::vector<std::size_t> perm(w.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  long long best = 0;
  do {
    long long total = 0;
    for (std::size_t a = 0; a < perm.size(); ++a) total += w[a][perm[a]];
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

inline std::size_t MisclassificationBruteForce(const PartitionAssignment& psi, const PartitionAssignment& psi_prime) {
  detail::CheckInputs(psi, psi_prime);
  const auto c = detail::Confusion(psi.labels, psi_prime.labels, detail::ClassCount(psi, psi_prime));
  return psi.size() - static_cast<std::size_t>(detail::MaxAssignmentBruteForce(c));
}

inline std::size_t MisclassificationHungarian(const PartitionAssignment& psi, const PartitionAssignment& psi_prime) {
  detail::CheckInputs(psi, psi_prime);
  const auto c = detail::Confusion(psi.labels, psi_prime.labels, detail::ClassCount(psi, psi_prime));
  return psi.size() - static_cast<std::size_t>(detail::MaxAssignment(c));
}

// Brute force over K! bijections for K <= 8, Hungarian beyond.
inline std::size_t Misclassification(const PartitionAssignment& psi, const PartitionAssignment& psi_prime) {
  detail::CheckInputs(psi, psi_prime);
  if (detail::ClassCount(psi, psi_prime) <= 8) return MisclassificationBruteForce(psi, psi_prime);
  return MisclassificationHungarian(psi, psi_prime);
}

}  // namespace hyperpart

#endif  // HYPERPART_MISCLASSIFICATION_HPP
