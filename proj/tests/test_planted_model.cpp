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

#include <cmath>

#include "test_util.hpp"

namespace hyperpart {
namespace {

using testing::MaxAbs;

PlantedModelSpec CertainPairs() {
  PlantedModelSpec spec;
  spec.part_sizes = {2, 2};
  spec.max_edge_size = 2;
  spec.alpha[2] = 1.0;
  spec.rule = TwoParam{1.0, 0.0};
  return spec;
}

PlantedModelSpec Reference12() { return UniformTwoParamSpec(12, 2, 3, 0.5, 0.2, 1.0); }

ErrorKind KindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kInvalidArgument;
}

// ---------------------------------------------------------------------------
// Sampling

TEST(Sample, CertainWithinClassPairs) {
  for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
    const auto h = Sample(CertainPairs(), seed);
    ASSERT_EQ(h.num_edges(), 2u);
    EXPECT_EQ(h.edge(0), (Edge{0, 1}));
    EXPECT_EQ(h.edge(1), (Edge{2, 3}));
  }
}

TEST(Sample, CompleteGraph) {
  PlantedModelSpec spec;
  spec.part_sizes = {4};
  spec.max_edge_size = 2;
  spec.alpha[2] = 1.0;
  spec.rule = TwoParam{0.0, 1.0};
  EXPECT_EQ(Sample(spec, 3).num_edges(), 6u);
}

TEST(Sample, ZeroAlphaGivesNoEdges) {
  PlantedModelSpec spec;
  spec.part_sizes = {15, 15};
  spec.max_edge_size = 3;
  spec.alpha = {{2, 0.0}, {3, 0.0}};
  spec.rule = TwoParam{0.4, 0.2};
  EXPECT_EQ(Sample(spec, 1).num_edges(), 0u);
}

TEST(Sample, DeterministicPerSeed) {
  const auto spec = UniformTwoParamSpec(40, 2, 3, 0.4, 0.2, 0.1);
  EXPECT_EQ(Sample(spec, 5), Sample(spec, 5));
  EXPECT_NE(Sample(spec, 5), Sample(spec, 6));
}

TEST(Sample, EdgesAreValidAndDistinct) {
  const auto spec = UniformTwoParamSpec(60, 3, 3, 0.4, 0.2, 0.05);
  SamplerOptions opt;
  opt.strategy = SamplerOptions::Strategy::kGrouped;
  const auto h = Sample(spec, 8, opt);
  std::set<Edge> seen(h.edges().begin(), h.edges().end());
  EXPECT_EQ(seen.size(), h.num_edges());
}

TEST(Sample, WithinClassFrequencyMatchesBernoulliMean) {
  PlantedModelSpec spec;
  spec.part_sizes = {15, 15};
  spec.max_edge_size = 3;
  spec.alpha[3] = 0.1;
  spec.rule = TwoParam{0.4, 0.2};
  const double prob = 0.06;
  const double per_draw = 2 * Binomial(15, 3);  // within-class triples
  const int draws = 2000;
  double total = 0;
  for (int seed = 0; seed < draws; ++seed) {
    for (const auto& [key, count] : ClassEdgeCounts(Sample(spec, static_cast<std::uint64_t>(seed)), spec)) {
      if (key.second[0] == 3 || key.second[1] == 3) total += static_cast<double>(count);
    }
  }
  const double trials = per_draw * draws;
  const double sigma = std::sqrt(trials * prob * (1 - prob));
  EXPECT_NEAR(total, trials * prob, 3 * sigma);
}

TEST(Sample, GroupedMatchesNaiveClassMeans) {
  PlantedModelSpec spec;
  spec.part_sizes = {4, 3, 3};
  spec.max_edge_size = 3;
  spec.alpha = {{2, 0.5}, {3, 0.8}};
  spec.rule = TwoParam{0.5, 0.3};
  SamplerOptions naive, grouped;
  naive.strategy = SamplerOptions::Strategy::kNaive;
  grouped.strategy = SamplerOptions::Strategy::kGrouped;
  std::map<std::pair<int, std::vector<int>>, std::pair<double, double>> sums;
  const int draws = 2000;
  for (int seed = 0; seed < draws; ++seed) {
    for (const auto& [key, c] : ClassEdgeCounts(Sample(spec, DeriveSeed(1, seed), naive), spec)) {
      sums[key].first += static_cast<double>(c);
    }
    for (const auto& [key, c] : ClassEdgeCounts(Sample(spec, DeriveSeed(2, seed), grouped), spec)) {
      sums[key].second += static_cast<double>(c);
    }
  }
  const std::vector<int> caps = spec.PartCaps();
  for (int m = 2; m <= 3; ++m) {
    ForEachComposition(m, caps, [&](std::span<const int> counts) {
      double size = 1;
      for (std::size_t j = 0; j < counts.size(); ++j) size *= Binomial(static_cast<long long>(spec.part_sizes[j]), counts[j]);
      const double p = spec.Alpha(m) * RuleProbability(spec.rule, counts);
      const double sigma = std::sqrt(draws * size * p * (1 - p));
      const auto& s = sums[{m, std::vector<int>(counts.begin(), counts.end())}];
      EXPECT_NEAR(s.first, draws * size * p, 4 * sigma + 1e-9);
      EXPECT_NEAR(s.second, draws * size * p, 4 * sigma + 1e-9);
    });
  }
}

TEST(Sample, LargeSpecUsesGroupedPath) {
  // C(3000, 3) subsets is far over the per-subset budget.
  const auto spec = UniformTwoParamSpec(3000, 2, 3, 0.4, 0.2, 1e-6);
  const auto h = Sample(spec, 4);
  const double expected = 1e-6 * (0.2 * Binomial(3000, 3) + 0.4 * 2 * Binomial(1500, 3));
  EXPECT_NEAR(static_cast<double>(h.num_edges()), expected, 6 * std::sqrt(expected));
}

// ---------------------------------------------------------------------------
// Population adjacency / summary

TEST(PopulationAdjacency, CertainPairs) {
  std::vector<double> deg;
  const auto a = PopulationAdjacency(CertainPairs(), &deg);
  EXPECT_DOUBLE_EQ(a(0, 1), 0.5);
  EXPECT_DOUBLE_EQ(a(0, 2), 0.0);
  EXPECT_DOUBLE_EQ(a(0, 0), 0.5);
  EXPECT_EQ(deg, (std::vector<double>{1, 1, 1, 1}));
}

TEST(PopulationAdjacency, ZeroAlphaIsZero) {
  auto spec = Reference12();
  spec.alpha[3] = 0.0;
  EXPECT_EQ(MaxAbs(PopulationAdjacency(spec)), 0.0);
}

TEST(PopulationAdjacency, EqualsStructuredDecomposition) {
  for (double p : {0.1, 0.5, 0.8}) {
    PlantedModelSpec spec;
    spec.part_sizes = {3, 3};
    spec.max_edge_size = 3;
    spec.alpha = {{2, 0.7}, {3, 0.4}};
    spec.rule = TwoParam{p, 0.2 * (1 - p)};
    const auto s = ComputePopulationSummary(spec);
    EXPECT_LE(MaxAbs(PopulationAdjacency(spec) - AssembleFromSummary(spec, s)), 1e-12);
  }
}

TEST(PopulationAdjacency, DecompositionHoldsForEveryRuleVariant) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const auto spec = testing::RandomSpec(rng, trial % 4, 10, 4, 3);
    const auto s = ComputePopulationSummary(spec);
    EXPECT_LE(MaxAbs(PopulationAdjacency(spec) - AssembleFromSummary(spec, s)), 1e-12) << trial;
  }
}

TEST(PopulationAdjacency, OverBudgetThrows) {
  PopulationOptions opt;
  opt.subset_budget = 100;
  EXPECT_EQ(KindOf([&] { PopulationAdjacency(Reference12(), nullptr, opt); }), ErrorKind::kInfeasibleScale);
}

TEST(PopulationSummary, Reference12) {
  const auto s = ComputePopulationSummary(Reference12());
  EXPECT_NEAR(s.d, 16.0, 1e-12);
  EXPECT_NEAR(s.delta, 0.25, 1e-12);
  EXPECT_EQ(s.delta_second_term, 0.0);
}

TEST(PopulationSummary, CertainPairs) {
  const auto s = ComputePopulationSummary(CertainPairs());
  EXPECT_LE(MaxAbs(s.g - (Eigen::MatrixXd(2, 2) << 0.5, 0, 0, 0.5).finished()), 1e-15);
  EXPECT_EQ(s.jtilde, (std::vector<double>{0, 0}));
  EXPECT_EQ(s.dtilde, (std::vector<double>{1, 1}));
  EXPECT_EQ(s.d, 1.0);
}

TEST(PopulationSummary, BalancedSpecsHaveNoSecondTerm) {
  for (int k : {2, 3, 4}) {
    for (double p : {0.0, 0.3, 0.7}) {
      auto spec = UniformTwoParamSpec(12, k, 3, p, 0.2, 0.5);
      spec.max_edge_size = 4;
      spec.alpha[2] = 0.3;
      spec.alpha[4] = 0.1;
      EXPECT_EQ(ComputePopulationSummary(spec).delta_second_term, 0.0);
    }
  }
}

TEST(PopulationSummary, StructuredLaplacianMatchesBruteForce) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto spec = testing::RandomSpec(rng, trial % 4, 10, 3, 3);
    const auto s = ComputePopulationSummary(spec);
    if (s.zero_degree_class) continue;
    std::vector<double> deg;
    PopulationAdjacency(spec, &deg);
    if (*std::min_element(deg.begin(), deg.end()) <= 0.0) continue;
    EXPECT_LE(MaxAbs(PopulationLaplacian(spec) - PopulationLaplacianStructured(spec, s)), 1e-12);
  }
}

TEST(PopulationLaplacian, CertainPairs) {
  const auto l = PopulationLaplacian(CertainPairs());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(l);
  EXPECT_NEAR(es.eigenvalues()(0), 0.0, 1e-15);
  EXPECT_NEAR(es.eigenvalues()(1), 0.0, 1e-15);
  EXPECT_NEAR(es.eigenvalues()(2), 1.0, 1e-15);
  EXPECT_NEAR(es.eigenvalues()(3), 1.0, 1e-15);
}

TEST(PopulationLaplacian, ZeroAlphaThrows) {
  auto spec = Reference12();
  spec.alpha[3] = 0.0;
  EXPECT_EQ(KindOf([&] { PopulationLaplacian(spec); }), ErrorKind::kZeroExpectedDegree);
}

TEST(PopulationLaplacian, SqrtDegreeInKernel) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 10; ++trial) {
    auto spec = testing::RandomSpec(rng, 0, 10, 3, 3);
    spec.alpha[2] = 0.5;
    std::vector<double> deg;
    PopulationAdjacency(spec, &deg);
    Eigen::VectorXd s(static_cast<Eigen::Index>(deg.size()));
    for (std::size_t i = 0; i < deg.size(); ++i) s(static_cast<Eigen::Index>(i)) = std::sqrt(deg[i]);
    EXPECT_LE((PopulationLaplacian(spec) * s).norm(), 1e-10);
  }
}

// ---------------------------------------------------------------------------
// Closed forms

TEST(DeltaUniform, Reference12) {
  const auto r = DeltaUniform(12, 2, 3, 0.5, 0.2, 1.0);
  EXPECT_NEAR(r.d, 16.0, 1e-12);
  EXPECT_NEAR(r.delta, 0.25, 1e-12);
}

TEST(DeltaUniform, PZeroIsUnidentifiable) {
  EXPECT_EQ(DeltaUniform(12, 2, 3, 0.0, 0.2, 1.0).delta, 0.0);
}

TEST(DeltaUniform, GraphCase) {
  // d = 0.5*5 + 0.2*11 = 4.7 and delta = 0.5*12 / (2*2*4.7) = 0.31915; the
  // population summary gives the same value (lambda_min(G) = 0.25).
  const auto r = DeltaUniform(12, 2, 2, 0.5, 0.2, 1.0);
  EXPECT_NEAR(r.d, 4.7, 1e-12);
  EXPECT_NEAR(r.delta, 6.0 / 18.8, 1e-12);
  const auto s = ComputePopulationSummary(UniformTwoParamSpec(12, 2, 2, 0.5, 0.2, 1.0));
  EXPECT_NEAR(s.delta, r.delta, 1e-12);
  EXPECT_NEAR(s.lambda_min_g, 0.25, 1e-12);
}

TEST(DeltaUniform, IndivisibleThrows) {
  EXPECT_EQ(KindOf([] { DeltaUniform(13, 2, 3, 0.5, 0.2, 1.0); }), ErrorKind::kIndivisiblePartition);
}

TEST(DeltaUniform, AgreesWithSummaryOnGrid) {
  for (long long n : {12, 18, 24}) {
    for (long long k : {2, 3}) {
      for (int r : {2, 3, 4}) {
        for (double p : {0.1, 0.6}) {
          const auto c = DeltaUniform(n, k, r, p, 0.3, 0.7);
          const auto s = ComputePopulationSummary(UniformTwoParamSpec(n, static_cast<int>(k), r, p, 0.3, 0.7));
          EXPECT_NEAR(s.delta, c.delta, 1e-10 * c.delta);
          EXPECT_NEAR(s.d, c.d, 1e-10 * c.d);
        }
      }
    }
  }
}

TEST(DeltaBalancedNonuniform, AgreesWithSummary) {
  std::map<int, double> alpha{{2, 0.3}, {3, 0.1}, {4, 0.02}};
  PlantedModelSpec spec;
  spec.part_sizes = EqualParts(24, 3);
  spec.max_edge_size = 4;
  spec.alpha = alpha;
  spec.rule = TwoParam{0.4, 0.1};
  const auto c = DeltaBalancedNonuniform(24, 3, 0.4, 0.1, alpha);
  const auto s = ComputePopulationSummary(spec);
  EXPECT_NEAR(s.delta, c.delta, 1e-10 * c.delta);
  EXPECT_NEAR(s.d, c.d, 1e-10 * c.d);
}

TEST(SparsityThreshold, Example) {
  // 32 * 100 * (ln 100)^2 / C(100, 3) = 0.419692...
  EXPECT_NEAR(UniformSparsityThreshold(100, 2, 3, 1.0), 0.41967, 1e-4);
  EXPECT_NEAR(UniformSparsityThreshold(100, 2, 3, 1.0),
              32.0 * 100 * std::pow(std::log(100.0), 2) / 161700.0, 1e-15);
  EXPECT_EQ(UniformSparsityThreshold(100, 2, 3, 0.0), 0.0);
}

TEST(SparsityThreshold, IncreasingInK) {
  for (long long n : {50, 100, 400}) {
    for (int r : {2, 3, 4}) {
      for (long long k = 2; k < 6; ++k) {
        EXPECT_LT(UniformSparsityThreshold(n, k, r, 1.0), UniformSparsityThreshold(n, k + 1, r, 1.0));
      }
    }
  }
}

TEST(ThetaRegime, SmallestActiveSize) {
  const auto r = CheckThetaRegime(1000, 2, {{2, 0.0}, {3, 0.5}, {4, 0.25}}, 2.0, 2.0, 1.0);
  EXPECT_EQ(r.smallest_size, 3);
  EXPECT_DOUBLE_EQ(r.weighted_theta, 2.5);
  EXPECT_NEAR(r.limit, 1000.0 / 32.0, 1e-9);
  EXPECT_TRUE(r.satisfied);
}

TEST(Identifiable3Uniform, Example) {
  const auto r = Identifiable3Uniform(0.3, 0.2, 0.1, 3, 30);
  EXPECT_NEAR(r.margin, 0.06, 1e-12);
  EXPECT_TRUE(r.identifiable);
}

TEST(Identifiable3Uniform, EqualProbabilities) {
  const auto r = Identifiable3Uniform(0.2, 0.2, 0.2, 3, 30);
  EXPECT_NEAR(r.margin, 0.0, 1e-15);
  EXPECT_FALSE(r.identifiable);
}

TEST(Identifiable3Uniform, SignMatchesSummaryAndDeltaAgrees) {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int k = 3 + trial % 2;
    const int n = k * (2 + trial % 4);
    const double p1 = u(rng), p2 = u(rng), p3 = u(rng);
    const auto id = Identifiable3Uniform(p1, p2, p3, k, n);
    const auto s = ComputePopulationSummary(ThreeUniformSpec(n, k, p1, p2, p3, 0.5));
    if (std::abs(id.margin) < 1e-9) continue;
    EXPECT_EQ(id.identifiable, s.delta > 0.0);
    if (id.identifiable) {
      EXPECT_NEAR(s.delta, Delta3Uniform(p1, p2, p3, k, n, 0.5), 1e-10 * s.delta);
    }
  }
}

TEST(Identifiable23, NoThreeEdges) {
  const auto r = Identifiable23(0.1, 0.1, 0.9, 3, 30, 0.0);
  EXPECT_DOUBLE_EQ(r.margin, 0.5);
  EXPECT_TRUE(r.identifiable);
}

TEST(Identifiable23, Example) {
  const auto r = Identifiable23(0.1, 0.1, 0.9, 3, 30, 1.0);
  EXPECT_NEAR(r.margin, 0.5 + 10.0 * (-0.8 + 1.6 / 3.0), 1e-12);
  EXPECT_NEAR(r.margin, -2.1667, 1e-4);
  EXPECT_FALSE(r.identifiable);
}

TEST(Identifiable23, SignMatchesSummaryAndDeltaAgrees) {
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int k = 3;
    const int n = 3 * (2 + trial % 3);
    const double p1 = u(rng), p2 = u(rng), p3 = u(rng), a3 = u(rng);
    const auto id = Identifiable23(p1, p2, p3, k, n, a3);
    const auto s = ComputePopulationSummary(TwoThreeSpec(n, k, p1, p2, p3, a3));
    if (std::abs(id.margin) < 1e-9) continue;
    EXPECT_EQ(id.identifiable, s.delta > 0.0);
    if (id.identifiable) {
      EXPECT_NEAR(s.delta, Delta23(p1, p2, p3, k, n, a3), 1e-10 * s.delta);
    }
  }
}

TEST(PlantedClique, AgreesWithSummary) {
  const auto s = ComputePopulationSummary(PlantedCliqueSpec(40, 8, 2));
  EXPECT_NEAR(s.delta, DeltaPlantedClique(40, 8, 2), 1e-10 * std::abs(s.delta));
}

TEST(PlantedClique, GraphCaseOutsideDegree) {
  for (long long n : {20, 40, 101}) {
    EXPECT_DOUBLE_EQ(PlantedCliqueClosedForm(n, 5, 2).d2, 0.5 * static_cast<double>(n - 1));
  }
}

TEST(PlantedClique, SignCrossesOnceAsCliqueGrows) {
  int crossings = 0;
  // At n = 200 the crossing sits between s = 2 and s = 3.
  bool previous = DeltaPlantedClique(200, 2, 2) > 0;
  EXPECT_FALSE(previous);
  for (long long s = 3; s <= 60; ++s) {
    const double delta = DeltaPlantedClique(200, s, 2);
    const auto summary = ComputePopulationSummary(PlantedCliqueSpec(200, static_cast<std::size_t>(s), 2));
    EXPECT_NEAR(summary.delta, delta, 1e-10 * std::max(1e-3, std::abs(delta)));
    const bool positive = delta > 0;
    crossings += positive != previous;
    previous = positive;
  }
  EXPECT_EQ(crossings, 1);
  EXPECT_TRUE(previous);
}

// ---------------------------------------------------------------------------
// Theorem report

TEST(TheoreticalReport, Reference12) {
  const auto s = TheoreticalReport(Reference12(), 1.0);
  ASSERT_TRUE(s.theorem && s.theorem->bound_raw);
  EXPECT_NEAR(*s.theorem->bound_raw, 2 * 6 * std::log(12.0) / (0.0625 * 16), 1e-10);
  EXPECT_NEAR(*s.theorem->bound_raw, 29.82, 0.005);
}

TEST(TheoreticalReport, UnidentifiableThrows) {
  EXPECT_EQ(KindOf([] { TheoreticalReport(UniformTwoParamSpec(12, 2, 3, 0.0, 0.3, 1.0), 1.0); }),
            ErrorKind::kUnidentifiable);
  const auto t = MakeTheoremReport(ComputePopulationSummary(UniformTwoParamSpec(12, 2, 3, 0.0, 0.3, 1.0)), 1.0);
  EXPECT_FALSE(t.identifiable);
  EXPECT_FALSE(t.bound_raw.has_value());
}

TEST(TheoreticalReport, BoundScalesInverselyWithAlpha) {
  for (double alpha : {0.1, 0.25, 0.5}) {
    const auto a = TheoreticalReport(UniformTwoParamSpec(24, 2, 3, 0.4, 0.2, alpha), 1.0);
    const auto b = TheoreticalReport(UniformTwoParamSpec(24, 2, 3, 0.4, 0.2, 2 * alpha), 1.0);
    EXPECT_NEAR(*a.theorem->bound_raw / *b.theorem->bound_raw, 2.0, 1e-10);
  }
}

// ---------------------------------------------------------------------------
// Spec validation and JSON

TEST(Spec, ValidationErrors) {
  auto bad = Reference12();
  bad.alpha[3] = 1.5;
  EXPECT_THROW(bad.Validate(), Error);
  bad = Reference12();
  bad.rule = TwoParam{0.7, 0.5};
  EXPECT_THROW(bad.Validate(), Error);
  bad = Reference12();
  bad.max_edge_size = 13;
  EXPECT_THROW(bad.Validate(), Error);
  bad = Reference12();
  bad.rule = ThreeUniform{0.1, 0.1, 0.1};
  bad.alpha[2] = 0.5;
  EXPECT_THROW(bad.Validate(), Error);
}

TEST(Spec, CustomTableMissingKey) {
  PlantedModelSpec spec;
  spec.part_sizes = {2, 2};
  spec.max_edge_size = 2;
  spec.alpha[2] = 1.0;
  CustomTable table;
  table.entries[{2, {1, 1}}] = 1.0;
  spec.rule = table;
  EXPECT_EQ(KindOf([&] { ComputePopulationSummary(spec); }), ErrorKind::kSchema);
}

TEST(SpecJson, RoundTripAllVariants) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const auto spec = testing::RandomSpec(rng, trial % 4);
    const auto text = SpecToJson(spec).dump();
    EXPECT_EQ(SpecFromJson(Json::parse(text)), spec);
    EXPECT_EQ(SpecToJson(SpecFromJson(Json::parse(text))).dump(), text);
  }
}

TEST(SpecJson, ParsesDocumentedForm) {
  const auto spec = SpecFromJson(Json::parse(
      R"({"n": 12, "k": 2, "part_sizes": [6, 6], "M": 3, "alpha": {"3": 1.0},
          "rule": {"variant": "TwoParam", "p": 0.5, "q": 0.2}})"));
  EXPECT_EQ(spec, Reference12());
}

TEST(SpecJson, SchemaErrors) {
  for (const char* text :
       {R"({"part_sizes": [2, 2], "alpha": {"2": 1}, "rule": {"variant": "TwoParam", "p": 1, "q": 0}})",
        R"({"part_sizes": [2, 2], "M": 2, "alpha": {"x": 1}, "rule": {"variant": "TwoParam", "p": 1, "q": 0}})",
        R"({"part_sizes": [2, 2], "M": 2, "alpha": {"2": 1}, "rule": {"variant": "Nope"}})",
        R"({"n": 5, "part_sizes": [2, 2], "M": 2, "alpha": {"2": 1}, "rule": {"variant": "TwoParam", "p": 1, "q": 0}})",
        R"({"part_sizes": [2, 2], "M": 2, "alpha": {"2": 2}, "rule": {"variant": "TwoParam", "p": 1, "q": 0}})"}) {
    EXPECT_EQ(KindOf([&] { SpecFromJson(Json::parse(text)); }), ErrorKind::kSchema) << text;
  }
}

}  // namespace
}  // namespace hyperpart
