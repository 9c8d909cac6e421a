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

#include <gtest/gtest.h>

#include <sstream>

#include "test_util.hpp"

namespace hyperpart {
namespace {

using testing::MaxAbs;

Hypergraph TriangleAndPair() {
  Hypergraph h(3);
  h.AddEdge({0, 1, 2});
  h.AddEdge({0, 1});
  return h;
}

TEST(Hypergraph, AddEdgeCanonicalizes) {
  Hypergraph h(5);
  h.AddEdge({4, 0, 2});
  EXPECT_EQ(h.edge(0), (Edge{0, 2, 4}));
}

TEST(Hypergraph, AddEdgeRejectsBadEdges) {
  Hypergraph h(3);
  EXPECT_THROW(h.AddEdge({0}), Error);
  EXPECT_THROW(h.AddEdge({0, 0}), Error);
  EXPECT_THROW(h.AddEdge({0, 3}), Error);
}

TEST(Hypergraph, DuplicateEdgesAreAdditive) {
  Hypergraph h(2);
  h.AddEdge({0, 1});
  h.AddEdge({0, 1});
  const auto a = Adjacency(h);
  EXPECT_DOUBLE_EQ(a(0, 1), 1.0);
  EXPECT_EQ(Degrees(h), (std::vector<std::size_t>{2, 2}));
}

TEST(Adjacency, TriangleAndPair) {
  const auto a = Adjacency(TriangleAndPair());
  EXPECT_NEAR(a(0, 1), 5.0 / 6.0, 1e-15);
  EXPECT_NEAR(a(0, 2), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(a(0, 0), 5.0 / 6.0, 1e-15);
  EXPECT_NEAR(a(2, 2), 1.0 / 3.0, 1e-15);
}

TEST(Adjacency, SingleEdge) {
  Hypergraph h(2);
  h.AddEdge({0, 1});
  const auto a = Adjacency(h);
  EXPECT_EQ(a, (Eigen::MatrixXd(2, 2) << 0.5, 0.5, 0.5, 0.5).finished());
}

TEST(Adjacency, EdgelessIsZero) {
  EXPECT_EQ(MaxAbs(Adjacency(Hypergraph(3))), 0.0);
}

TEST(Adjacency, CliqueExpansionOfTriple) {
  Hypergraph h(3);
  h.AddEdge({0, 1, 2});
  const auto a = Adjacency(h, Expansion::kClique);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(a(i, j), i == j ? 0.0 : 1.0);
  }
  EXPECT_EQ(ExpansionDegrees(h, Expansion::kClique), (std::vector<double>{2, 2, 2}));
}

TEST(Adjacency, SparseMatchesDense) {
  std::mt19937_64 rng(3);
  for (auto expansion : {Expansion::kStar, Expansion::kClique}) {
    const auto h = testing::RandomHypergraph(rng, 25, 40, 6);
    const Eigen::MatrixXd sparse = Eigen::MatrixXd(AdjacencySparse(h, expansion));
    EXPECT_LE(MaxAbs(sparse - Adjacency(h, expansion)), 1e-14);
  }
}

TEST(Degrees, Examples) {
  EXPECT_EQ(Degrees(TriangleAndPair()), (std::vector<std::size_t>{2, 2, 1}));
  EXPECT_EQ(Degrees(Hypergraph(4)), (std::vector<std::size_t>(4, 0)));
  Hypergraph h(2);
  h.AddEdge({0, 1});
  EXPECT_EQ(Degrees(h), (std::vector<std::size_t>{1, 1}));
}

TEST(Degrees, EqualAdjacencyRowSums) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto h = testing::RandomHypergraph(rng, 30, 60, 10);
    const auto a = Adjacency(h);
    const auto deg = Degrees(h);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      EXPECT_NEAR(a.row(i).sum(), static_cast<double>(deg[static_cast<std::size_t>(i)]), 1e-12);
    }
  }
}

TEST(Laplacian, SingleEdge) {
  Hypergraph h(2);
  h.AddEdge({0, 1});
  const auto l = Laplacian(h);
  EXPECT_LE(MaxAbs(l - (Eigen::MatrixXd(2, 2) << 0.5, -0.5, -0.5, 0.5).finished()), 1e-15);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l);
  EXPECT_NEAR(es.eigenvalues()(0), 0.0, 1e-15);
  EXPECT_NEAR(es.eigenvalues()(1), 1.0, 1e-15);
}

TEST(Laplacian, SqrtDegreeIsInKernel) {
  const auto h = TriangleAndPair();
  Eigen::VectorXd s(3);
  s << std::sqrt(2.0), std::sqrt(2.0), 1.0;
  EXPECT_LE((Laplacian(h) * s).norm(), 1e-14);
}

TEST(Laplacian, DisjointEdgesHaveDoubleZero) {
  Hypergraph h(4);
  h.AddEdge({0, 1});
  h.AddEdge({2, 3});
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Laplacian(h));
  EXPECT_NEAR(es.eigenvalues()(0), 0.0, 1e-14);
  EXPECT_NEAR(es.eigenvalues()(1), 0.0, 1e-14);
  EXPECT_GT(es.eigenvalues()(2), 0.5);
}

TEST(Laplacian, IsolatedNodeThrows) {
  Hypergraph h(3);
  h.AddEdge({0, 1});
  try {
    Laplacian(h);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIsolatedNode);
  }
}

TEST(Laplacian, SymmetricWithSpectrumInUnitInterval) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    for (auto expansion : {Expansion::kStar, Expansion::kClique}) {
      const auto h = testing::RandomCoveredHypergraph(rng, 20, 25, 7);
      const auto l = Laplacian(h, expansion);
      EXPECT_EQ(MaxAbs(l - l.transpose()), 0.0);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l);
      EXPECT_GE(es.eigenvalues().minCoeff(), -1e-8);
      EXPECT_LE(es.eigenvalues().maxCoeff(), 2.0 + 1e-8);
    }
  }
}

TEST(Laplacian, ZeroMultiplicityEqualsComponentCount) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    // Glue together random connected blocks.
    const int blocks = 1 + trial % 5;
    std::size_t n = 0;
    std::vector<std::pair<std::size_t, std::size_t>> ranges;
    for (int b = 0; b < blocks; ++b) {
      const std::size_t size = 2 + rng() % 6;
      ranges.emplace_back(n, size);
      n += size;
    }
    Hypergraph h(n);
    for (auto [start, size] : ranges) {
      // A path of 2-edges guarantees connectivity, plus random larger edges.
      for (std::size_t i = 0; i + 1 < size; ++i) h.AddEdge({NodeId(start + i), NodeId(start + i + 1)});
      for (int extra = 0; extra < 3 && size >= 3; ++extra) {
        const auto pick = SampleDistinct(static_cast<std::uint32_t>(size), 3, rng);
        h.AddEdge({NodeId(start + pick[0]), NodeId(start + pick[1]), NodeId(start + pick[2])});
      }
    }
    std::size_t components = 0;
    ConnectedComponents(h, &components);
    ASSERT_EQ(components, static_cast<std::size_t>(blocks));
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(Laplacian(h));
    int zeros = 0;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) zeros += std::abs(es.eigenvalues()(i)) < 1e-9;
    EXPECT_EQ(zeros, blocks);
  }
}

TEST(LaplacianOperator, MatchesDenseProduct) {
  std::mt19937_64 rng(23);
  for (auto expansion : {Expansion::kStar, Expansion::kClique}) {
    const auto h = testing::RandomCoveredHypergraph(rng, 40, 50, 8);
    const LaplacianOperator op(h, expansion);
    const Eigen::VectorXd x = Eigen::VectorXd::Random(40);
    Eigen::VectorXd y;
    op.Apply(x, y);
    EXPECT_LE((y - Laplacian(h, expansion) * x).norm(), 1e-12);
  }
}

TEST(NhCut, TriangleAndPair) {
  PartitionAssignment p{{1, 1, 2}, 2};
  EXPECT_NEAR(NhCut(TriangleAndPair(), p), 5.0 / 6.0, 1e-15);
}

TEST(NhCut, SinglePartIsZero) {
  std::mt19937_64 rng(1);
  const auto h = testing::RandomCoveredHypergraph(rng, 10, 8, 4);
  EXPECT_EQ(NhCut(h, PartitionAssignment{std::vector<int>(10, 1), 1}), 0.0);
}

TEST(NhCut, DisjointEdgesSplitCleanly) {
  Hypergraph h(4);
  h.AddEdge({0, 1});
  h.AddEdge({2, 3});
  EXPECT_EQ(NhCut(h, PartitionAssignment{{1, 1, 2, 2}, 2}), 0.0);
}

TEST(NhCut, ZeroVolumePartThrows) {
  Hypergraph h(3);
  h.AddEdge({0, 1});
  try {
    NhCut(h, PartitionAssignment{{1, 1, 2}, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kZeroVolumePart);
  }
}

TEST(NhCut, InvariantUnderRelabeling) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const auto h = testing::RandomCoveredHypergraph(rng, 15, 20, 5);
    PartitionAssignment p{std::vector<int>(15), 3};
    for (int& l : p.labels) l = 1 + static_cast<int>(rng() % 3);
    const double cut = NhCut(h, p);
    // Swap part names.
    PartitionAssignment swapped = p;
    for (int& l : swapped.labels) l = l == 1 ? 3 : (l == 3 ? 1 : 2);
    EXPECT_NEAR(NhCut(h, swapped), cut, 1e-12);
    // Permute node ids consistently.
    const auto perm = testing::RandomPermutation(rng, 15);
    EXPECT_NEAR(NhCut(PermuteNodes(h, perm), PermuteLabels(p, perm)), cut, 1e-12);
  }
}

// Normalized cut of a weighted graph computed straight from the definition.
double GraphNormalizedCut(std::size_t n, const std::vector<std::pair<NodeId, NodeId>>& edges,
                          const std::vector<int>& labels, int k) {
  std::vector<double> cut(static_cast<std::size_t>(k), 0.0), vol(static_cast<std::size_t>(k), 0.0);
  for (auto [u, v] : edges) {
    vol[static_cast<std::size_t>(labels[u] - 1)] += 1;
    vol[static_cast<std::size_t>(labels[v] - 1)] += 1;
    if (labels[u] != labels[v]) {
      cut[static_cast<std::size_t>(labels[u] - 1)] += 1;
      cut[static_cast<std::size_t>(labels[v] - 1)] += 1;
    }
  }
  (void)n;
  double total = 0.0;
  for (int j = 0; j < k; ++j) {
    if (vol[static_cast<std::size_t>(j)] > 0) total += cut[static_cast<std::size_t>(j)] / vol[static_cast<std::size_t>(j)];
  }
  return total;
}

TEST(NhCut, TwoUniformReducesToGraphCutHalved) {
  // For 2-edges |e ∩ V||e \ V|/|e| = 1/2, so NH-cut is half the graph normalized cut.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 12;
    Hypergraph h(n);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (int e = 0; e < 25; ++e) {
      const auto pick = SampleDistinct(static_cast<std::uint32_t>(n), 2, rng);
      h.AddEdge({pick[0], pick[1]});
      edges.emplace_back(pick[0], pick[1]);
    }
    PartitionAssignment p{std::vector<int>(n), 2};
    for (int& l : p.labels) l = 1 + static_cast<int>(rng() % 2);
    bool nonempty_zero_volume = false;
    const auto deg = Degrees(h);
    for (int part = 1; part <= 2; ++part) {
      std::size_t vol = 0, members = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (p.labels[i] == part) {
          vol += deg[i];
          ++members;
        }
      }
      nonempty_zero_volume |= members > 0 && vol == 0;
    }
    if (nonempty_zero_volume) continue;
    EXPECT_NEAR(NhCut(h, p), 0.5 * GraphNormalizedCut(n, edges, p.labels, 2), 1e-12);
  }
}

TEST(Components, CountsAndDropIsolated) {
  Hypergraph h(6);
  h.AddEdge({0, 1});
  h.AddEdge({3, 4, 5});
  std::size_t count = 0;
  const auto comp = ConnectedComponents(h, &count);
  EXPECT_EQ(count, 3u);
  EXPECT_EQ(comp[0], comp[1]);
  EXPECT_NE(comp[2], comp[0]);
  std::vector<NodeId> kept;
  const auto core = DropIsolated(h, kept);
  EXPECT_EQ(kept, (std::vector<NodeId>{0, 1, 3, 4, 5}));
  EXPECT_EQ(core.edge(1), (Edge{2, 3, 4}));
}

// ---------------------------------------------------------------------------
// .hgr format

TEST(HgrIo, WritesCanonicalText) {
  Hypergraph h(4);
  h.AddEdge({0, 1});
  h.AddEdge({2, 3});
  EXPECT_EQ(ToHgrString(h), "2 4\n1 2\n3 4\n");
  EXPECT_EQ(ToHgrString(Hypergraph(7)), "0 7\n");
}

TEST(HgrIo, ReadsCommentsAndBlankLines) {
  std::istringstream in("% header comment\n\n2 5\n% edge comment\n1 3 5\n2 4\n");
  const auto h = ReadHgr(in);
  EXPECT_EQ(h.num_nodes(), 5u);
  ASSERT_EQ(h.num_edges(), 2u);
  EXPECT_EQ(h.edge(0), (Edge{0, 2, 4}));
}

TEST(HgrIo, RejectsMalformedInput) {
  for (const char* text : {"", "x y\n", "2 3\n1 2\n", "1 3\n1 4\n", "1 3\n1 1\n", "1 3\n1 a\n", "1 3\n1 2\n2 3\n",
                           "1 3 1\n1 2\n", "1 3\n1\n"}) {
    std::istringstream in(text);
    try {
      ReadHgr(in);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kParse) << text;
    }
  }
}

TEST(HgrIo, RoundTripRandom) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    const auto h = testing::RandomHypergraph(rng, 2 + rng() % 30, rng() % 40, 8);
    std::istringstream in(ToHgrString(h));
    EXPECT_EQ(ReadHgr(in), h);
  }
}

TEST(HgrIo, LabelsRoundTrip) {
  std::ostringstream out;
  WriteLabels(out, PartitionAssignment{{1, 2, 2, 3}, 3});
  EXPECT_EQ(out.str(), "1\n2\n2\n3\n");
  std::istringstream in(out.str());
  EXPECT_EQ(ReadLabels(in), (std::vector<int>{1, 2, 2, 3}));
}

}  // namespace
}  // namespace hyperpart
