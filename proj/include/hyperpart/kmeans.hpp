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

// k-means on the rows of a dense matrix.
//
// OrssKMeans seeds with the Ostrovsky-Rabani-Schulman-Swamy scheme (the first
// two centers are a pair sampled with probability proportional to their
// squared distance, later centers by squared distance to the nearest chosen
// center), applies one ball k-means step and then runs Lloyd iterations.
// BruteForceKMeans enumerates every partition and is the test oracle.

#ifndef HYPERPART_KMEANS_HPP
#define HYPERPART_KMEANS_HPP

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "hyperpart/combinatorics.hpp"
#include "hyperpart/error.hpp"

namespace hyperpart {

struct KMeansResult {
  std::vector<int> labels;  // 1..k
  Eigen::MatrixXd centers;  // k x dim
  double objective = 0.0;   // sqrt of the sum of squared distances
  int restarts_used = 0;
  int best_restart = 0;
  int iterations = 0;
  bool monotone = true;     // Lloyd never increased the objective
  std::optional<double> gamma_certificate;
};

struct KMeansOptions {
  int restarts = 10;
  int max_iterations = 100;
  double tolerance = 1e-10;
};

namespace detail {

inline double SquaredDistance(const Eigen::MatrixXd& points, Eigen::Index i, const Eigen::MatrixXd& centers,
                              Eigen::Index j) {
  return (points.row(i) - centers.row(j)).squaredNorm();
}

// Nearest center for every point, ties to the lowest index. Returns the SSE.
inline double Assign(const Eigen::MatrixXd& points, const Eigen::MatrixXd& centers, std::vector<int>& labels,
                     std::vector<double>* dist = nullptr) {
  const auto n = points.rows();
  labels.resize(static_cast<std::size_t>(n));
  if (dist) dist->resize(static_cast<std::size_t>(n));
  double sse = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (Eigen::Index j = 0; j < centers.rows(); ++j) {
      const double dj = SquaredDistance(points, i, centers, j);
      if (dj < best_d) {
        best_d = dj;
        best = static_cast<int>(j);
      }
    }
    labels[static_cast<std::size_t>(i)] = best;
    if (dist) (*dist)[static_cast<std::size_t>(i)] = best_d;
    sse += best_d;
  }
  return sse;
}

inline double SumOfSquares(const Eigen::MatrixXd& points, const std::vector<int>& labels,
                           const Eigen::MatrixXd& centers) {
  double sse = 0.0;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    sse += SquaredDistance(points, i, centers, labels[static_cast<std::size_t>(i)]);
  }
  return sse;
}

// Means of the assigned points. Empty clusters keep their old center and are
// reported through `empty`.
inline void UpdateCenters(const Eigen::MatrixXd& points, const std::vector<int>& labels, Eigen::MatrixXd& centers,
                          std::vector<int>& empty) {
  const auto k = centers.rows();
  Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, points.cols());
  std::vector<std::size_t> counts(static_cast<std::size_t>(k), 0);
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    const int c = labels[static_cast<std::size_t>(i)];
    sums.row(c) += points.row(i);
    ++counts[static_cast<std::size_t>(c)];
  }
  empty.clear();
  for (Eigen::Index j = 0; j < k; ++j) {
    if (counts[static_cast<std::size_t>(j)] == 0) {
      empty.push_back(static_cast<int>(j));
    } else {
      centers.row(j) = sums.row(j) / static_cast<double>(counts[static_cast<std::size_t>(j)]);
    }
  }
}

template <typename Rng>
Eigen::Index SampleIndex(const std::vector<double>& weights, Rng& rng) {
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) {
    std::uniform_int_distribution<std::size_t> pick(0, weights.size() - 1);
    return static_cast<Eigen::Index>(pick(rng));
  }
  std::uniform_real_distribution<double> u(0.0, total);
  const double target = u(rng);
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (target < acc && weights[i] > 0.0) return static_cast<Eigen::Index>(i);
  }
  for (std::size_t i = weights.size(); i-- > 0;) {
    if (weights[i] > 0.0) return static_cast<Eigen::Index>(i);
  }
  return 0;
}

template <typename Rng>
Eigen::MatrixXd OrssSeed(const Eigen::MatrixXd& points, int k, Rng& rng) {
  const auto n = points.rows();
  const auto nu = static_cast<std::size_t>(n);
  Eigen::MatrixXd centers(k, points.cols());
  const Eigen::RowVectorXd mean = points.colwise().mean();
  double spread = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) spread += (points.row(i) - mean).squaredNorm();
  // Marginal of the first point of a pair drawn with P(x, y) ~ |x - y|^2.
  std::vector<double> w(nu);
  for (Eigen::Index i = 0; i < n; ++i) {
    w[static_cast<std::size_t>(i)] = static_cast<double>(n) * (points.row(i) - mean).squaredNorm() + spread;
  }
  centers.row(0) = points.row(SampleIndex(w, rng));
  std::vector<double> nearest(nu, std::numeric_limits<double>::infinity());
  for (int c = 1; c < k; ++c) {
    for (Eigen::Index i = 0; i < n; ++i) {
      auto& d = nearest[static_cast<std::size_t>(i)];
      d = std::min(d, (points.row(i) - centers.row(c - 1)).squaredNorm());
    }
    centers.row(c) = points.row(SampleIndex(nearest, rng));
  }
  return centers;
}

// Each center moves to the mean of the points in its cell that lie within a
// third of the distance to the nearest other center.
inline void BallStep(const Eigen::MatrixXd& points, Eigen::MatrixXd& centers) {
  const auto k = centers.rows();
  if (k < 2) {
    centers.row(0) = points.colwise().mean();
    return;
  }
  std::vector<int> labels;
  std::vector<double> dist;
  Assign(points, centers, labels, &dist);
  Eigen::MatrixXd next = centers;
  for (Eigen::Index j = 0; j < k; ++j) {
    double sep = std::numeric_limits<double>::infinity();
    for (Eigen::Index l = 0; l < k; ++l) {
      if (l != j) sep = std::min(sep, (centers.row(j) - centers.row(l)).squaredNorm());
    }
    const double radius2 = sep / 9.0;
    Eigen::RowVectorXd sum = Eigen::RowVectorXd::Zero(points.cols());
    std::size_t count = 0;
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
      if (labels[static_cast<std::size_t>(i)] == j && dist[static_cast<std::size_t>(i)] <= radius2) {
        sum += points.row(i);
        ++count;
      }
    }
    if (count > 0) next.row(j) = sum / static_cast<double>(count);
  }
  centers = next;
}

struct LloydOutcome {
  std::vector<int> labels;  // 0-based
  Eigen::MatrixXd centers;
  double sse = 0.0;
  int iterations = 0;
  bool monotone = true;
};

inline LloydOutcome Lloyd(const Eigen::MatrixXd& points, Eigen::MatrixXd centers, const KMeansOptions& opt) {
  LloydOutcome out;
  std::vector<double> dist;
  double sse = Assign(points, centers, out.labels, &dist);
  std::vector<int> empty;
  for (int it = 0; it < opt.max_iterations; ++it) {
    UpdateCenters(points, out.labels, centers, empty);
    // Empty clusters restart at the worst-served points, one point per cluster.
    for (int c : empty) {
      Eigen::Index far = 0;
      for (Eigen::Index i = 1; i < points.rows(); ++i) {
        if (dist[static_cast<std::size_t>(i)] > dist[static_cast<std::size_t>(far)]) far = i;
      }
      centers.row(c) = points.row(far);
      dist[static_cast<std::size_t>(far)] = 0.0;
    }
    std::vector<int> labels;
    const double next = Assign(points, centers, labels, &dist);
    out.iterations = it + 1;
    if (next > sse * (1.0 + 1e-12) + 1e-300) out.monotone = false;
    const bool unchanged = labels == out.labels;
    const double improvement = sse - next;
    out.labels = std::move(labels);
    sse = next;
    if (unchanged || improvement <= opt.tolerance * std::max(1.0, sse)) break;
  }
  UpdateCenters(points, out.labels, centers, empty);
  out.centers = std::move(centers);
  out.sse = SumOfSquares(points, out.labels, out.centers);
  return out;
}

}  // namespace detail

inline KMeansResult OrssKMeans(const Eigen::MatrixXd& points, int k, std::uint64_t seed,
                               const KMeansOptions& opt = {}) {
  Require(k >= 1 && points.rows() >= k, ErrorKind::kInvalidArgument, "k-means needs n >= k >= 1");
  Require(opt.restarts >= 1, ErrorKind::kInvalidArgument, "k-means needs at least one restart");
  KMeansResult best;
  best.objective = std::numeric_limits<double>::infinity();
  bool monotone = true;
  for (int r = 0; r < opt.restarts; ++r) {
    std::mt19937_64 rng(DeriveSeed(seed, static_cast<std::uint64_t>(r)));
    Eigen::MatrixXd centers = detail::OrssSeed(points, k, rng);
    detail::BallStep(points, centers);
    auto run = detail::Lloyd(points, centers, opt);
    monotone = monotone && run.monotone;
    const double objective = std::sqrt(run.sse);
    if (objective < best.objective) {
      best.objective = objective;
      best.labels = std::move(run.labels);
      best.centers = std::move(run.centers);
      best.best_restart = r;
      best.iterations = run.iterations;
    }
  }
  for (int& label : best.labels) ++label;
  best.restarts_used = opt.restarts;
  best.monotone = monotone;
  return best;
}

// Exact optimum over all partitions into at most k clusters. Requires
// k^n <= 1e6.
inline KMeansResult BruteForceKMeans(const Eigen::MatrixXd& points, int k) {
  const auto n = static_cast<std::size_t>(points.rows());
  Require(k >= 1 && n >= 1, ErrorKind::kInvalidArgument, "k-means needs n >= 1 and k >= 1");
  Require(std::pow(static_cast<double>(k), static_cast<double>(n)) <= 1e6, ErrorKind::kInfeasibleScale,
          "brute-force k-means needs k^n <= 1e6");
  KMeansResult best;
  best.objective = std::numeric_limits<double>::infinity();
  // Restricted growth strings enumerate each set partition once.
  std::vector<int> labels(n, 0);
  std::vector<int> empty;
  auto evaluate = [&]() {
    Eigen::MatrixXd centers = Eigen::MatrixXd::Zero(k, points.cols());
    detail::UpdateCenters(points, labels, centers, empty);
    const double sse = detail::SumOfSquares(points, labels, centers);
    if (std::sqrt(sse) < best.objective) {
      best.objective = std::sqrt(sse);
      best.labels = labels;
      best.centers = centers;
    }
  };
  auto recurse = [&](auto&& self, std::size_t i, int used) -> void {
    if (i == n) {
      evaluate();
      return;
    }
    for (int c = 0; c <= std::min(used, k - 1); ++c) {
      labels[i] = c;
      self(self, i + 1, std::max(used, c + 1));
    }
  };
  recurse(recurse, 0, 0);
  for (int& label : best.labels) ++label;
  best.restarts_used = 0;
  return best;
}

inline double KMeansObjective(const Eigen::MatrixXd& points, const std::vector<int>& labels,
                              const Eigen::MatrixXd& centers) {
  double sse = 0.0;
  for (Eigen::Index i = 0; i < points.rows(); ++i) {
    sse += (points.row(i) - centers.row(labels[static_cast<std::size_t>(i)] - 1)).squaredNorm();
  }
  return std::sqrt(sse);
}

}  // namespace hyperpart

#endif  // HYPERPART_KMEANS_HPP
