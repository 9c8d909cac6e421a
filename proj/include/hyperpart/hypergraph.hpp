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

// Hypergraph storage, degree accounting, normalized hypergraph cut and the
// two graph reductions used for spectral partitioning:
//
//   star expansion   A(i,j) = sum_{e ∋ i,j} 1/|e|        (diagonal included)
//   clique expansion A'(i,j) = #{e : i,j ∈ e},  i != j   (zero diagonal)
//
// Node ids are zero-based in memory. The .hgr reader/writer converts to the
// one-based ids used on disk. The incidence matrix is never materialized;
// every product is accumulated edge by edge.

#ifndef HYPERPART_HYPERGRAPH_HPP
#define HYPERPART_HYPERGRAPH_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperpart/error.hpp"

namespace hyperpart {

using NodeId = std::uint32_t;
using Edge = std::vector<NodeId>;
using DenseMatrix = Eigen::MatrixXd;
using SparseMatrix = Eigen::SparseMatrix<double>;

// Kahan-Babuska (Neumaier) compensated accumulator.
class CompensatedSum {
 public:
  void Add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }
  double Value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

class Hypergraph {
 public:
  Hypergraph() = default;
  explicit Hypergraph(std::size_t num_nodes) : num_nodes_(num_nodes) {}
  Hypergraph(std::size_t num_nodes, std::vector<Edge> edges) : num_nodes_(num_nodes) {
    edges_.reserve(edges.size());
    for (auto& e : edges) AddEdge(std::move(e));
  }

  // Sorts the node ids of `edge`; rejects repeated nodes, out-of-range ids and
  // edges with fewer than two nodes. Duplicate edges are kept.
  void AddEdge(Edge edge) {
    std::sort(edge.begin(), edge.end());
    Require(edge.size() >= 2, ErrorKind::kInvalidArgument, "edge with fewer than two nodes");
    Require(std::adjacent_find(edge.begin(), edge.end()) == edge.end(),
            ErrorKind::kInvalidArgument, "edge repeats a node");
    Require(edge.back() < num_nodes_, ErrorKind::kInvalidArgument,
            "edge node id " + std::to_string(edge.back() + 1) + " exceeds n=" +
                std::to_string(num_nodes_));
    edges_.push_back(std::move(edge));
  }

  std::size_t num_nodes() const { return num_nodes_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  std::size_t num_pins() const {
    std::size_t pins = 0;
    for (const auto& e : edges_) pins += e.size();
    return pins;
  }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

 private:
  std::size_t num_nodes_ = 0;
  std::vector<Edge> edges_;
};

// Labels are 1..k; label 0 marks a node that was left unassigned.
struct PartitionAssignment {
  std::vector<int> labels;
  int k = 1;

  std::size_t size() const { return labels.size(); }

  void Validate(bool allow_unassigned = false) const {
    Require(k >= 1, ErrorKind::kInvalidArgument, "partition needs k >= 1");
    for (int label : labels) {
      const int lo = allow_unassigned ? 0 : 1;
      Require(label >= lo && label <= k, ErrorKind::kInvalidArgument,
              "label " + std::to_string(label) + " outside [" + std::to_string(lo) + ", " +
                  std::to_string(k) + "]");
    }
  }

  std::vector<std::size_t> PartSizes() const {
    std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
    for (int label : labels) {
      if (label >= 1 && label <= k) ++sizes[static_cast<std::size_t>(label - 1)];
    }
    return sizes;
  }

  std::size_t EmptyParts() const {
    const auto sizes = PartSizes();
    return static_cast<std::size_t>(std::count(sizes.begin(), sizes.end(), std::size_t{0}));
  }

  friend bool operator==(const PartitionAssignment&, const PartitionAssignment&) = default;
};

// Contiguous blocks: the first sizes[0] nodes get label 1, and so on.
inline PartitionAssignment BlockPartition(std::span<const std::size_t> sizes) {
  PartitionAssignment p;
  p.k = static_cast<int>(sizes.size());
  for (std::size_t j = 0; j < sizes.size(); ++j) {
    p.labels.insert(p.labels.end(), sizes[j], static_cast<int>(j + 1));
  }
  return p;
}

enum class Expansion { kStar, kClique };

inline std::vector<std::size_t> Degrees(const Hypergraph& h) {
  std::vector<std::size_t> deg(h.num_nodes(), 0);
  for (const auto& e : h.edges()) {
    for (NodeId v : e) ++deg[v];
  }
  return deg;
}

// Row sums of the expansion's adjacency. For the star expansion these are the
// hypergraph degrees; for the clique expansion sum_{e ∋ i} (|e| - 1).
inline std::vector<double> ExpansionDegrees(const Hypergraph& h, Expansion expansion) {
  std::vector<double> deg(h.num_nodes(), 0.0);
  for (const auto& e : h.edges()) {
    const double w = expansion == Expansion::kStar ? 1.0 : static_cast<double>(e.size() - 1);
    for (NodeId v : e) deg[v] += w;
  }
  return deg;
}

inline DenseMatrix Adjacency(const Hypergraph& h, Expansion expansion = Expansion::kStar) {
  const auto n = static_cast<Eigen::Index>(h.num_nodes());
  DenseMatrix a = DenseMatrix::Zero(n, n);
  DenseMatrix comp = DenseMatrix::Zero(n, n);
  for (const auto& e : h.edges()) {
    const double w = expansion == Expansion::kStar ? 1.0 / static_cast<double>(e.size()) : 1.0;
    for (NodeId u : e) {
      for (NodeId v : e) {
        if (expansion == Expansion::kClique && u == v) continue;
        // Neumaier step on entry (u, v); identical for (v, u) so A stays exactly symmetric.
        double& s = a(u, v);
        const double t = s + w;
        comp(u, v) += std::abs(s) >= w ? (s - t) + w : (w - t) + s;
        s = t;
      }
    }
  }
  return a + comp;
}

inline SparseMatrix AdjacencySparse(const Hypergraph& h, Expansion expansion = Expansion::kStar) {
  std::vector<Eigen::Triplet<double>> triplets;
  for (const auto& e : h.edges()) {
    const double w = expansion == Expansion::kStar ? 1.0 / static_cast<double>(e.size()) : 1.0;
    for (NodeId u : e) {
      for (NodeId v : e) {
        if (expansion == Expansion::kClique && u == v) continue;
        triplets.emplace_back(static_cast<int>(u), static_cast<int>(v), w);
      }
    }
  }
  const auto n = static_cast<Eigen::Index>(h.num_nodes());
  SparseMatrix a(n, n);
  a.setFromTriplets(triplets.begin(), triplets.end());
  return a;
}

inline std::vector<double> InverseSqrtDegrees(std::span<const double> deg) {
  std::vector<double> out(deg.size());
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (!(deg[i] > 0.0)) Fail(ErrorKind::kIsolatedNode, "node " + std::to_string(i + 1) + " has degree 0");
    out[i] = 1.0 / std::sqrt(deg[i]);
  }
  return out;
}

// L = I - D^{-1/2} A D^{-1/2}, assembled densely.
inline DenseMatrix Laplacian(const Hypergraph& h, Expansion expansion = Expansion::kStar) {
  const auto deg = ExpansionDegrees(h, expansion);
  const auto inv_sqrt = InverseSqrtDegrees(deg);
  DenseMatrix l = Adjacency(h, expansion);
  const auto n = l.rows();
  // Fill the lower triangle and mirror it so that L is exactly symmetric.
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j; i < n; ++i) {
      l(i, j) = -l(i, j) * (inv_sqrt[static_cast<std::size_t>(i)] * inv_sqrt[static_cast<std::size_t>(j)]);
      l(j, i) = l(i, j);
    }
    l(j, j) += 1.0;
  }
  return l;
}

// Matrix-free L·x for hypergraphs too large to assemble. Cost per product is
// O(number of pins).
class LaplacianOperator {
 public:
  LaplacianOperator(const Hypergraph& h, Expansion expansion)
      : h_(&h), expansion_(expansion) {
    inv_sqrt_deg_ = InverseSqrtDegrees(ExpansionDegrees(h, expansion));
    edge_weight_.reserve(h.num_edges());
    for (const auto& e : h.edges()) {
      edge_weight_.push_back(expansion == Expansion::kStar ? 1.0 / static_cast<double>(e.size()) : 1.0);
    }
  }

  std::size_t size() const { return h_->num_nodes(); }

  void Apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const {
    const auto n = static_cast<Eigen::Index>(size());
    Eigen::VectorXd scaled(n);
    for (Eigen::Index i = 0; i < n; ++i) scaled(i) = x(i) * inv_sqrt_deg_[static_cast<std::size_t>(i)];
    Eigen::VectorXd ax = Eigen::VectorXd::Zero(n);
    const auto& edges = h_->edges();
    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
      double s = 0.0;
      for (NodeId v : edges[ei]) s += scaled(v);
      s *= edge_weight_[ei];
      for (NodeId v : edges[ei]) {
        ax(v) += s;
        if (expansion_ == Expansion::kClique) ax(v) -= scaled(v);
      }
    }
    y.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) {
      y(i) = x(i) - ax(i) * inv_sqrt_deg_[static_cast<std::size_t>(i)];
    }
  }

 private:
  const Hypergraph* h_;
  Expansion expansion_;
  std::vector<double> inv_sqrt_deg_;
  std::vector<double> edge_weight_;
};

// Dense matrix wrapped in the same Apply() interface as LaplacianOperator.
class DenseOperator {
 public:
  explicit DenseOperator(const DenseMatrix& m) : m_(&m) {}
  std::size_t size() const { return static_cast<std::size_t>(m_->rows()); }
  void Apply(const Eigen::VectorXd& x, Eigen::VectorXd& y) const { y.noalias() = (*m_) * x; }

 private:
  const DenseMatrix* m_;
};

// Normalized hypergraph cut: sum_j vol(∂V_j) / vol(V_j) with
// vol(∂V_j) = sum_{e ∈ ∂V_j} |e ∩ V_j| |e \ V_j| / |e|.
// Nodes labelled 0 must be isolated; they are not part of any V_j.
inline double NhCut(const Hypergraph& h, const PartitionAssignment& p) {
  Require(p.size() == h.num_nodes(), ErrorKind::kLengthMismatch,
          "partition length does not match node count");
  p.Validate(/*allow_unassigned=*/true);
  const auto k = static_cast<std::size_t>(p.k);
  const auto deg = Degrees(h);
  std::vector<std::size_t> volume(k, 0);
  std::vector<std::size_t> members(k, 0);
  for (std::size_t i = 0; i < h.num_nodes(); ++i) {
    const int label = p.labels[i];
    if (label == 0) {
      Require(deg[i] == 0, ErrorKind::kInvalidArgument,
              "unassigned node " + std::to_string(i + 1) + " is not isolated");
      continue;
    }
    volume[static_cast<std::size_t>(label - 1)] += deg[i];
    ++members[static_cast<std::size_t>(label - 1)];
  }
  std::vector<CompensatedSum> boundary(k);
  std::map<int, std::size_t> counts;
  for (const auto& e : h.edges()) {
    counts.clear();
    for (NodeId v : e) ++counts[p.labels[v]];
    if (counts.size() < 2) continue;
    const auto size = static_cast<double>(e.size());
    for (const auto& [label, c] : counts) {
      const auto inside = static_cast<double>(c);
      boundary[static_cast<std::size_t>(label - 1)].Add(inside * (size - inside) / size);
    }
  }
  CompensatedSum cut;
  for (std::size_t j = 0; j < k; ++j) {
    if (members[j] == 0) continue;
    if (volume[j] == 0) Fail(ErrorKind::kZeroVolumePart, "part " + std::to_string(j + 1) + " has volume 0");
    cut.Add(boundary[j].Value() / static_cast<double>(volume[j]));
  }
  return cut.Value();
}

// Component id per node (0-based, numbered in order of first node).
inline std::vector<std::size_t> ConnectedComponents(const Hypergraph& h, std::size_t* count = nullptr) {
  std::vector<std::size_t> parent(h.num_nodes());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& e : h.edges()) {
    const auto root = find(e.front());
    for (NodeId v : e) {
      const auto r = find(v);
      if (r != root) parent[std::max(r, root)] = std::min(r, root);
    }
  }
  std::vector<std::size_t> component(h.num_nodes());
  std::vector<std::size_t> id_of_root(h.num_nodes(), SIZE_MAX);
  std::size_t next = 0;
  for (std::size_t i = 0; i < h.num_nodes(); ++i) {
    const auto r = find(i);
    if (id_of_root[r] == SIZE_MAX) id_of_root[r] = next++;
    component[i] = id_of_root[r];
  }
  if (count) *count = next;
  return component;
}

// Relabels node i as perm[i]. Edge order is preserved.
inline Hypergraph PermuteNodes(const Hypergraph& h, std::span<const NodeId> perm) {
  Require(perm.size() == h.num_nodes(), ErrorKind::kLengthMismatch, "permutation length");
  Hypergraph out(h.num_nodes());
  for (const auto& e : h.edges()) {
    Edge mapped;
    mapped.reserve(e.size());
    for (NodeId v : e) mapped.push_back(perm[v]);
    out.AddEdge(std::move(mapped));
  }
  return out;
}

inline PartitionAssignment PermuteLabels(const PartitionAssignment& p, std::span<const NodeId> perm) {
  PartitionAssignment out{std::vector<int>(p.size(), 0), p.k};
  for (std::size_t i = 0; i < p.size(); ++i) out.labels[perm[i]] = p.labels[i];
  return out;
}

// Sub-hypergraph on the nodes with nonzero degree. `kept[i]` is the original
// id of new node i.
inline Hypergraph DropIsolated(const Hypergraph& h, std::vector<NodeId>& kept) {
  const auto deg = Degrees(h);
  std::vector<NodeId> new_id(h.num_nodes(), 0);
  kept.clear();
  for (std::size_t i = 0; i < h.num_nodes(); ++i) {
    if (deg[i] > 0) {
      new_id[i] = static_cast<NodeId>(kept.size());
      kept.push_back(static_cast<NodeId>(i));
    }
  }
  Hypergraph out(kept.size());
  for (const auto& e : h.edges()) {
    Edge mapped;
    mapped.reserve(e.size());
    for (NodeId v : e) mapped.push_back(new_id[v]);
    out.AddEdge(std::move(mapped));
  }
  return out;
}

}  // namespace hyperpart

#endif  // HYPERPART_HYPERGRAPH_HPP
