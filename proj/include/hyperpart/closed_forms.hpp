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

// Closed-form identifiability margins and sparsity thresholds for the
// special model families, plus builders for the matching specs. Each closed
// form is independent of ComputePopulationSummary and is used to cross-check
// it.

#ifndef HYPERPART_CLOSED_FORMS_HPP
#define HYPERPART_CLOSED_FORMS_HPP

#include <cmath>
#include <map>
#include <utility>

#include "hyperpart/combinatorics.hpp"
#include "hyperpart/error.hpp"
#include "hyperpart/planted_model.hpp"

namespace hyperpart {

struct DeltaAndDegree {
  double delta = 0.0;
  double d = 0.0;
};

struct Identifiability {
  bool identifiable = false;
  double margin = 0.0;
};

namespace detail {
inline long long BlockSize(long long n, long long k) {
  Require(k >= 1 && n % k == 0, ErrorKind::kIndivisiblePartition,
          std::to_string(k) + " does not divide n=" + std::to_string(n));
  return n / k;
}
}  // namespace detail

// Balanced r-uniform TwoParam model.
inline DeltaAndDegree DeltaUniform(long long n, long long k, int r, double p, double q, double alpha) {
  const long long s = detail::BlockSize(n, k);
  Require(r >= 2 && r <= s, ErrorKind::kInvalidArgument, "need 2 <= r <= n/k");
  DeltaAndDegree out;
  out.d = p * alpha * Binomial(s - 1, r - 1) + q * alpha * Binomial(n - 1, r - 1);
  if (out.d > 0.0) {
    out.delta = p * alpha * static_cast<double>(n) / (r * static_cast<double>(k) * out.d) * Binomial(s - 2, r - 2);
  }
  return out;
}

// Balanced non-uniform TwoParam model with sparsity factors alpha[m].
inline DeltaAndDegree DeltaBalancedNonuniform(long long n, long long k, double p, double q,
                                              const std::map<int, double>& alpha) {
  const long long s = detail::BlockSize(n, k);
  double lambda = 0.0;
  DeltaAndDegree out;
  for (const auto& [m, a] : alpha) {
    lambda += p * a / m * Binomial(s - 2, m - 2);
    out.d += p * a * Binomial(s - 1, m - 1) + q * a * Binomial(n - 1, m - 1);
  }
  if (out.d > 0.0) out.delta = lambda * static_cast<double>(s) / out.d;
  return out;
}

// Sparsity factor at which the balanced r-uniform model meets the degree
// condition of the consistency theorem for the constant C.
inline double UniformSparsityThreshold(long long n, long long k, int r, double constant_c) {
  Require(n >= r && r >= 2, ErrorKind::kInvalidArgument, "need n >= r >= 2");
  const double ln_n = std::log(static_cast<double>(n));
  return constant_c * std::pow(static_cast<double>(k), 2 * r - 1) * static_cast<double>(n) * ln_n * ln_n /
         Binomial(n, r);
}

// alpha_m = theta_m n^a (ln n)^b / C(n, m).
inline double ThetaSparsity(long long n, int m, double theta, double a, double b) {
  const double ln_n = std::log(static_cast<double>(n));
  return theta * std::pow(static_cast<double>(n), a) * std::pow(ln_n, b) / Binomial(n, m);
}

// Non-uniform balanced regime: sum_{m >= r} m theta_m against
// C n^{a-1} (ln n)^{b-2} / k^{2r-1}, r the smallest size with theta_m > 0.
struct ThetaRegime {
  int smallest_size = 0;
  double weighted_theta = 0.0;
  double limit = 0.0;
  bool satisfied = false;
};

inline ThetaRegime CheckThetaRegime(long long n, long long k, const std::map<int, double>& theta, double a, double b,
                                    double constant_c) {
  ThetaRegime out;
  for (const auto& [m, t] : theta) {
    if (t > 0.0 && out.smallest_size == 0) out.smallest_size = m;
    out.weighted_theta += m * t;
  }
  if (out.smallest_size == 0) return out;
  const double ln_n = std::log(static_cast<double>(n));
  out.limit = constant_c * std::pow(static_cast<double>(n), a - 1) * std::pow(ln_n, b - 2) /
              std::pow(static_cast<double>(k), 2 * out.smallest_size - 1);
  out.satisfied = out.weighted_theta <= out.limit;
  return out;
}

inline double ThreeUniformInner(double p1, double p2, double p3, long long k, long long n) {
  return (p2 - p3) + (p1 - 3 * p2 + 2 * p3) / static_cast<double>(k) - 2 * (p1 - p2) / static_cast<double>(n);
}

// Balanced 3-uniform model with the (p1, p2, p3) rule, k >= 3.
inline Identifiability Identifiable3Uniform(double p1, double p2, double p3, long long k, long long n) {
  detail::BlockSize(n, k);
  Require(k >= 3, ErrorKind::kInvalidArgument, "three-parameter rule needs k >= 3");
  const double margin = ThreeUniformInner(p1, p2, p3, k, n);
  return {margin > 0.0, margin};
}

// Same 3-edges plus every within-class pair as a certain 2-edge.
inline Identifiability Identifiable23(double p1, double p2, double p3, long long k, long long n, double alpha3) {
  detail::BlockSize(n, k);
  Require(k >= 3, ErrorKind::kInvalidArgument, "three-parameter rule needs k >= 3");
  const double margin = 0.5 + static_cast<double>(n) * alpha3 / 3.0 * ThreeUniformInner(p1, p2, p3, k, n);
  return {margin > 0.0, margin};
}

namespace detail {
// Expected number of 3-edges on a fixed node, weighted by the rule.
inline double ThreeUniformDegree(double p1, double p2, double p3, long long k, long long n) {
  const long long s = n / k;
  const double same_pairs = Binomial(s - 1, 2);
  const double two_same = static_cast<double>((s - 1) * (n - s)) + static_cast<double>(k - 1) * Binomial(s, 2);
  const double distinct = Binomial(n - s, 2) - static_cast<double>(k - 1) * Binomial(s, 2);
  return p1 * same_pairs + p2 * two_same + p3 * distinct;
}
}  // namespace detail

// Closed-form delta for the balanced 3-uniform model: lambda_min(G) = G11 - G12.
inline double Delta3Uniform(double p1, double p2, double p3, long long k, long long n, double alpha3) {
  Identifiable3Uniform(p1, p2, p3, k, n);
  const double s = static_cast<double>(n / k);
  const double lambda = alpha3 / 3.0 * static_cast<double>(n) * ThreeUniformInner(p1, p2, p3, k, n);
  const double d = alpha3 * detail::ThreeUniformDegree(p1, p2, p3, k, n);
  return d > 0.0 ? lambda * s / d : 0.0;
}

inline double Delta23(double p1, double p2, double p3, long long k, long long n, double alpha3) {
  Identifiable23(p1, p2, p3, k, n, alpha3);
  const double s = static_cast<double>(n / k);
  const double lambda = 0.5 + alpha3 / 3.0 * static_cast<double>(n) * ThreeUniformInner(p1, p2, p3, k, n);
  const double d = (s - 1.0) + alpha3 * detail::ThreeUniformDegree(p1, p2, p3, k, n);
  return lambda * s / d;
}

// Planted s-clique in an r-uniform hypergraph with background density 1/2.
struct PlantedCliqueQuantities {
  double g11 = 0.0, g12 = 0.0, g22 = 0.0;
  double d1 = 0.0, d2 = 0.0;
  double j1 = 0.0, j2 = 0.0;
  double lambda_min = 0.0;
  double delta = 0.0;
};

inline PlantedCliqueQuantities PlantedCliqueClosedForm(long long n, long long s, int r) {
  Require(r >= 2 && r <= s && s < n - s, ErrorKind::kInvalidArgument, "need 2 <= r <= s < n - s");
  PlantedCliqueQuantities out;
  const double inv2r = 1.0 / (2.0 * r);
  out.g11 = inv2r * Binomial(s - 2, r - 2) + inv2r * Binomial(n - 2, r - 2);
  out.g12 = inv2r * Binomial(n - 2, r - 2);
  out.g22 = out.g12;
  out.d1 = 0.5 * Binomial(s - 1, r - 1) + 0.5 * Binomial(n - 1, r - 1);
  out.d2 = 0.5 * Binomial(n - 1, r - 1);
  out.j1 = -inv2r * Binomial(s - 2, r - 1) - inv2r * Binomial(n - 2, r - 1);
  out.j2 = -inv2r * Binomial(n - 2, r - 1);
  const double trace = out.g11 + out.g22;
  const double det = out.g11 * out.g22 - out.g12 * out.g12;
  const double disc = std::sqrt(std::max(0.0, 0.25 * trace * trace - det));
  // Smaller root via det / larger root avoids cancellation.
  const double larger = 0.5 * trace + disc;
  out.lambda_min = larger > 0.0 ? det / larger : 0.0;
  out.delta = static_cast<double>(s) * out.lambda_min / out.d1 - std::abs(out.j1 / out.d1 - out.j2 / out.d2);
  return out;
}

inline double DeltaPlantedClique(long long n, long long s, int r) { return PlantedCliqueClosedForm(n, s, r).delta; }

// ---------------------------------------------------------------------------
// Spec builders for the same families.

inline std::vector<std::size_t> EqualParts(std::size_t n, int k) {
  std::vector<std::size_t> sizes(static_cast<std::size_t>(k), n / static_cast<std::size_t>(k));
  for (std::size_t j = 0; j < n % static_cast<std::size_t>(k); ++j) ++sizes[j];
  return sizes;
}

inline PlantedModelSpec UniformTwoParamSpec(std::size_t n, int k, int r, double p, double q, double alpha) {
  PlantedModelSpec spec;
  spec.part_sizes = EqualParts(n, k);
  spec.max_edge_size = r;
  spec.alpha[r] = alpha;
  spec.rule = TwoParam{p, q};
  return spec;
}

inline PlantedModelSpec ThreeUniformSpec(std::size_t n, int k, double p1, double p2, double p3, double alpha3) {
  PlantedModelSpec spec;
  spec.part_sizes = EqualParts(n, k);
  spec.max_edge_size = 3;
  spec.alpha[3] = alpha3;
  spec.rule = ThreeUniform{p1, p2, p3};
  return spec;
}

// Certain within-class 2-edges plus the three-parameter 3-edges.
inline PlantedModelSpec TwoThreeSpec(std::size_t n, int k, double p1, double p2, double p3, double alpha3) {
  PlantedModelSpec spec;
  spec.part_sizes = EqualParts(n, k);
  spec.max_edge_size = 3;
  spec.alpha[2] = 1.0;
  spec.alpha[3] = alpha3;
  spec.rule = MakeTable(k, 3, [&](int m, std::span<const int> counts) {
    int largest = 0;
    for (int c : counts) largest = std::max(largest, c);
    if (m == 2) return largest == 2 ? 1.0 : 0.0;
    return largest == 3 ? p1 : (largest == 2 ? p2 : p3);
  });
  return spec;
}

inline PlantedModelSpec PlantedCliqueSpec(std::size_t n, std::size_t s, int r) {
  PlantedModelSpec spec;
  spec.part_sizes = {s, n - s};
  spec.max_edge_size = r;
  spec.alpha[r] = 1.0;
  spec.rule = PlantedClique{};
  return spec;
}

}  // namespace hyperpart

#endif  // HYPERPART_CLOSED_FORMS_HPP
