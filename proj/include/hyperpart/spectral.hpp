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

// Leading eigenvectors of the normalized Laplacian (those of the k smallest
// eigenvalues), row normalization, and the separability and deviation
// diagnostics.
//
// Two solvers: Eigen's dense symmetric solver, and a Lanczos iteration with
// full reorthogonalization on the shifted operator 2I - L, whose largest
// eigenvalues are the smallest of L. Lanczos restarts from a fresh random
// vector whenever the Krylov space becomes invariant, so repeated eigenvalues
// (disconnected inputs) are found as long as the space can still grow.

#ifndef HYPERPART_SPECTRAL_HPP
#define HYPERPART_SPECTRAL_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "hyperpart/error.hpp"
#include "hyperpart/hypergraph.hpp"
#include "hyperpart/kmeans.hpp"

namespace hyperpart {

inline constexpr double kDegenerateGap = 1e-10;
inline constexpr double kZeroRowNorm = 1e-12;

struct EigenPairs {
  Eigen::VectorXd values;   // ascending for Smallest, descending for Largest
  Eigen::MatrixXd vectors;  // one column per value
  int krylov_dimension = 0;
  int restarts = 0;
};

struct LanczosOptions {
  double tolerance = 1e-10;  // on the Ritz residual estimate
  std::size_t max_dimension = 1500;
  int check_every = 10;
};

// Flip each column so that its largest-magnitude entry is positive (first
// such entry on ties).
inline void FixSigns(Eigen::MatrixXd& x) {
  for (Eigen::Index c = 0; c < x.cols(); ++c) {
    Eigen::Index arg = 0;
    for (Eigen::Index i = 1; i < x.rows(); ++i) {
      if (std::abs(x(i, c)) > std::abs(x(arg, c)) + 1e-14) arg = i;
    }
    if (x(arg, c) < 0.0) x.col(c) *= -1.0;
  }
}

inline EigenPairs DenseSmallest(const DenseMatrix& l, int count) {
  Require(l.rows() == l.cols(), ErrorKind::kInvalidArgument, "matrix must be square");
  Require(count >= 1 && count <= l.rows(), ErrorKind::kInvalidArgument, "need 1 <= count <= n");
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(l);
  Require(solver.info() == Eigen::Success, ErrorKind::kNoConvergence, "dense eigensolver failed");
  EigenPairs out;
  out.values = solver.eigenvalues().head(count);
  out.vectors = solver.eigenvectors().leftCols(count);
  return out;
}

// Largest `count` eigenpairs of the symmetric operator `apply` (y = B x).
inline EigenPairs LanczosLargest(const std::function<void(const Eigen::VectorXd&, Eigen::VectorXd&)>& apply,
                                 std::size_t n, int count, std::uint64_t seed, const LanczosOptions& opt = {}) {
  Require(count >= 1 && static_cast<std::size_t>(count) <= n, ErrorKind::kInvalidArgument,
          "need 1 <= count <= n");
  const auto ni = static_cast<Eigen::Index>(n);
  const auto cap = static_cast<Eigen::Index>(std::min(n, std::max<std::size_t>(opt.max_dimension,
                                                                                  static_cast<std::size_t>(count))));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXd q(ni, cap);
  std::vector<double> alpha, beta;

  auto orthogonalize = [&](Eigen::VectorXd& w, Eigen::Index cols) {
    for (int pass = 0; pass < 2; ++pass) {
      if (cols > 0) w -= q.leftCols(cols) * (q.leftCols(cols).transpose() * w);
    }
  };
  // Fresh unit vector orthogonal to the current basis; false if none exists.
  auto fresh = [&](Eigen::Index cols, Eigen::VectorXd& v) {
    for (int attempt = 0; attempt < 5; ++attempt) {
      v.resize(ni);
      for (Eigen::Index i = 0; i < ni; ++i) v(i) = normal(rng);
      orthogonalize(v, cols);
      const double norm = v.norm();
      if (norm > 1e-8) {
        v /= norm;
        return true;
      }
    }
    return false;
  };

  EigenPairs out;
  Eigen::VectorXd v, w;
  Require(fresh(0, v), ErrorKind::kNoConvergence, "could not draw a start vector");
  q.col(0) = v;
  Eigen::Index block_start = 0;
  const Eigen::Index min_block = std::min<Eigen::Index>(ni, 2 * count + 10);
  for (Eigen::Index j = 0; j < cap; ++j) {
    apply(q.col(j), w);
    const double a = q.col(j).dot(w);
    orthogonalize(w, j + 1);
    const double b = w.norm();
    alpha.push_back(a);
    const Eigen::Index m = j + 1;
    const bool breakdown = b <= 1e-10 * std::max(1.0, std::abs(a));
    const bool exhausted = m == cap;
    const bool block_long = m - block_start >= min_block || m == ni;
    // An invariant subspace may hide further copies of a repeated eigenvalue,
    // so a breakdown short of n always restarts instead of testing convergence.
    const bool due = m >= count && (m % opt.check_every == 0 || exhausted) && (!breakdown || m == ni);
    if (due && (block_long || exhausted)) {
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
      Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1))
                                  : Eigen::VectorXd();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      Require(tri.info() == Eigen::Success, ErrorKind::kNoConvergence, "tridiagonal eigensolve failed");
      const double residual_scale = m == ni ? 0.0 : b;
      bool converged = true;
      for (int c = 0; c < count; ++c) {
        const Eigen::Index col = m - 1 - c;
        const double estimate = residual_scale * std::abs(tri.eigenvectors()(m - 1, col));
        if (estimate > opt.tolerance * std::max(1.0, std::abs(tri.eigenvalues()(col)))) converged = false;
      }
      if (converged || m == ni) {
        out.values.resize(count);
        out.vectors.resize(ni, count);
        for (int c = 0; c < count; ++c) {
          const Eigen::Index col = m - 1 - c;
          out.values(c) = tri.eigenvalues()(col);
          Eigen::VectorXd y = q.leftCols(m) * tri.eigenvectors().col(col);
          out.vectors.col(c) = y / y.norm();
        }
        // Explicit residual check guards against a lucky estimate.
        double worst = 0.0;
        for (int c = 0; c < count; ++c) {
          Eigen::VectorXd by;
          apply(out.vectors.col(c), by);
          worst = std::max(worst, (by - out.values(c) * out.vectors.col(c)).norm());
        }
        out.krylov_dimension = static_cast<int>(m);
        if (worst <= std::max(1e-8, 100 * opt.tolerance) || m == ni) return out;
      }
    }
    if (m == cap) break;
    if (breakdown) {
      if (!fresh(m, v)) break;
      beta.push_back(0.0);
      q.col(m) = v;
      block_start = m;
      ++out.restarts;
    } else {
      beta.push_back(b);
      q.col(m) = w / b;
    }
  }
  Fail(ErrorKind::kNoConvergence, "Lanczos did not converge within " + std::to_string(cap) + " vectors");
}

// Smallest `count` eigenpairs of L via the largest of 2I - L.
template <typename Operator>
EigenPairs LanczosSmallest(const Operator& op, int count, std::uint64_t seed, const LanczosOptions& opt = {}) {
  auto shifted = [&op](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    op.Apply(x, y);
    y = 2.0 * x - y;
  };
  auto pairs = LanczosLargest(shifted, op.size(), count, seed, opt);
  pairs.values = (2.0 - pairs.values.array()).matrix();
  return pairs;
}

struct SpectralEmbedding {
  DenseMatrix x;                  // n x k, orthonormal columns
  DenseMatrix xbar;               // n x k, unit rows
  std::vector<double> eigenvalues;  // k smallest, ascending
  std::optional<double> eigengap;   // lambda_{k+1} - lambda_k
  bool degenerate_gap = false;
  std::string solver;
  int krylov_dimension = 0;
};

inline DenseMatrix RowNormalize(const DenseMatrix& x) {
  DenseMatrix out = x;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const double norm = x.row(i).norm();
    Require(norm >= kZeroRowNorm, ErrorKind::kZeroRow, "row " + std::to_string(i + 1) + " of X is zero");
    out.row(i) /= norm;
  }
  return out;
}

namespace detail {

inline SpectralEmbedding EmbeddingFromPairs(EigenPairs pairs, int k, std::string solver) {
  SpectralEmbedding emb;
  emb.solver = std::move(solver);
  emb.krylov_dimension = pairs.krylov_dimension;
  emb.x = pairs.vectors.leftCols(k);
  FixSigns(emb.x);
  for (int c = 0; c < k; ++c) emb.eigenvalues.push_back(pairs.values(c));
  if (pairs.values.size() > k) {
    emb.eigengap = pairs.values(k) - pairs.values(k - 1);
    emb.degenerate_gap = *emb.eigengap < kDegenerateGap;
  }
  emb.xbar = RowNormalize(emb.x);
  return emb;
}

}  // namespace detail

inline SpectralEmbedding LeadingEigenvectors(const DenseMatrix& l, int k) {
  Require(k >= 1 && k <= l.rows(), ErrorKind::kInvalidArgument, "need 1 <= k <= n");
  const int count = static_cast<int>(std::min<Eigen::Index>(k + 1, l.rows()));
  return detail::EmbeddingFromPairs(DenseSmallest(l, count), k, "dense");
}

template <typename Operator>
SpectralEmbedding LeadingEigenvectorsIterative(const Operator& op, int k, std::uint64_t seed,
                                               const LanczosOptions& opt = {}) {
  const auto n = static_cast<int>(op.size());
  Require(k >= 1 && k <= n, ErrorKind::kInvalidArgument, "need 1 <= k <= n");
  const int count = std::min(k + 1, n);
  return detail::EmbeddingFromPairs(LanczosSmallest(op, count, seed, opt), k, "lanczos");
}

struct SeparabilityReport {
  double eta_k = 0.0;       // best k-means objective with k centers
  double eta_km1 = 0.0;     // best k-means objective with k - 1 centers
  double ratio = 0.0;       // eta_k / eta_km1, 0/0 -> 0
  double sigma_k = 0.0;     // k-th singular value of Xbar, a lower bound on eta_{k-1}
  double certified_ratio = 0.0;  // eta_k / sigma_k, an upper bound on the true ratio up to k-means error in eta_k
};

namespace detail {
inline double SafeRatio(double num, double den) {
  if (num <= 0.0) return 0.0;
  if (den <= 0.0) return std::numeric_limits<double>::infinity();
  return num / den;
}
}  // namespace detail

inline SeparabilityReport Separability(const DenseMatrix& xbar, int k, std::uint64_t seed,
                                       const KMeansOptions& opt = {}) {
  Require(k >= 2 && xbar.rows() >= k, ErrorKind::kInvalidArgument, "separability needs 2 <= k <= n");
  SeparabilityReport out;
  out.eta_k = OrssKMeans(xbar, k, DeriveSeed(seed, 1), opt).objective;
  out.eta_km1 = OrssKMeans(xbar, k - 1, DeriveSeed(seed, 2), opt).objective;
  out.ratio = detail::SafeRatio(out.eta_k, out.eta_km1);
  Eigen::JacobiSVD<DenseMatrix> svd(xbar);
  const auto& sv = svd.singularValues();
  out.sigma_k = sv.size() >= k ? sv(k - 1) : 0.0;
  out.certified_ratio = detail::SafeRatio(out.eta_k, out.sigma_k);
  return out;
}

// ||A - B||_2 from the largest eigenvalue of (A - B)^2, found by Lanczos and
// certified by an explicit residual check.
inline double SpectralNormDeviation(const DenseMatrix& a, const DenseMatrix& b, std::uint64_t seed = 0) {
  Require(a.rows() == b.rows() && a.cols() == b.cols() && a.rows() == a.cols(), ErrorKind::kInvalidArgument,
          "matrices must be square and of equal shape");
  const DenseMatrix diff = a - b;
  if (diff.cwiseAbs().maxCoeff() == 0.0) return 0.0;
  auto square = [&diff](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
    const Eigen::VectorXd t = diff * x;
    y.noalias() = diff * t;
  };
  LanczosOptions opt;
  opt.tolerance = 1e-9;
  const auto pairs = LanczosLargest(square, static_cast<std::size_t>(diff.rows()), 1, seed, opt);
  return std::sqrt(std::max(0.0, pairs.values(0)));
}

}  // namespace hyperpart

#endif  // HYPERPART_SPECTRAL_HPP
