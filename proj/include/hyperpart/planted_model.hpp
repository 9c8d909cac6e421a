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

// Planted partition model for non-uniform hypergraphs.
//
// Nodes are split into k contiguous classes. For every m = 2..M and every
// m-subset S, S is an edge independently with probability
//
//     alpha_m * B_m(label multiset of S)
//
// B_m is symmetric by construction: it is only ever evaluated on the class
// count vector of S (counts[j] = |S ∩ class j|), never on an ordered tuple.
//
// Population quantities follow the decomposition E[A] = Z G Z^T - J, where
// G(a,b) is the expected A(i,j) for distinct nodes i in class a and j in
// class b, Dtilde(a) the expected degree of a class-a node and
// Jtilde(a) = G(a,a) - E[A(i,i)]. They are computed by enumerating class
// compositions of the remaining edge members, so the cost is polynomial in k
// and M rather than in C(n, m).

#ifndef HYPERPART_PLANTED_MODEL_HPP
#define HYPERPART_PLANTED_MODEL_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "hyperpart/combinatorics.hpp"
#include "hyperpart/error.hpp"
#include "hyperpart/hypergraph.hpp"

namespace hyperpart {

// alpha(p + q) if every member shares a class, alpha q otherwise.
struct TwoParam {
  double p = 0.0;
  double q = 0.0;
  friend bool operator==(const TwoParam&, const TwoParam&) = default;
};

// 3-edges only: p1 all in one class, p2 exactly two share a class, p3 all
// distinct classes.
struct ThreeUniform {
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;
  friend bool operator==(const ThreeUniform&, const ThreeUniform&) = default;
};

// k = 2: probability 1 when every member is in class 1, 1/2 otherwise.
struct PlantedClique {
  friend bool operator==(const PlantedClique&, const PlantedClique&) = default;
};

// Explicit table keyed by (edge size, sorted 1-based label multiset).
struct CustomTable {
  std::map<std::pair<int, std::vector<int>>, double> entries;
  friend bool operator==(const CustomTable&, const CustomTable&) = default;
};

using ProbabilityRule = std::variant<TwoParam, ThreeUniform, PlantedClique, CustomTable>;

inline std::string RuleName(const ProbabilityRule& rule) {
  static constexpr const char* kNames[] = {"TwoParam", "ThreeUniform", "PlantedClique", "CustomTable"};
  return kNames[rule.index()];
}

// Sorted 1-based label multiset for a class count vector.
inline std::vector<int> LabelMultiset(std::span<const int> counts) {
  std::vector<int> labels;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    labels.insert(labels.end(), static_cast<std::size_t>(counts[j]), static_cast<int>(j + 1));
  }
  return labels;
}

// B_m evaluated on the class counts of a candidate edge (m = sum of counts).
inline double RuleProbability(const ProbabilityRule& rule, std::span<const int> counts) {
  int m = 0;
  int occupied = 0;
  int largest = 0;
  for (int c : counts) {
    m += c;
    occupied += c > 0 ? 1 : 0;
    largest = std::max(largest, c);
  }
  return std::visit(
      [&](const auto& r) -> double {
        using R = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<R, TwoParam>) {
          return occupied == 1 ? r.p + r.q : r.q;
        } else if constexpr (std::is_same_v<R, ThreeUniform>) {
          Require(m == 3, ErrorKind::kInvalidArgument, "ThreeUniform rule queried for edge size " + std::to_string(m));
          if (largest == 3) return r.p1;
          if (largest == 2) return r.p2;
          return r.p3;
        } else if constexpr (std::is_same_v<R, PlantedClique>) {
          return occupied == 1 && counts[0] == m ? 1.0 : 0.5;
        } else {
          const auto it = r.entries.find({m, LabelMultiset(counts)});
          if (it == r.entries.end()) {
            std::string key;
            for (int l : LabelMultiset(counts)) key += std::to_string(l) + ",";
            Fail(ErrorKind::kSchema, "CustomTable has no entry for m=" + std::to_string(m) + " labels {" + key + "}");
          }
          return it->second;
        }
      },
      rule);
}

struct PlantedModelSpec {
  std::vector<std::size_t> part_sizes;
  int max_edge_size = 2;           // M
  std::map<int, double> alpha;     // alpha_m; missing entries are 0
  ProbabilityRule rule = TwoParam{};

  std::size_t n() const {
    std::size_t total = 0;
    for (auto s : part_sizes) total += s;
    return total;
  }
  int k() const { return static_cast<int>(part_sizes.size()); }

  double Alpha(int m) const {
    const auto it = alpha.find(m);
    return it == alpha.end() ? 0.0 : it->second;
  }

  PartitionAssignment Labels() const { return BlockPartition(part_sizes); }

  std::vector<int> PartCaps() const {
    std::vector<int> caps(part_sizes.size());
    for (std::size_t j = 0; j < caps.size(); ++j) caps[j] = static_cast<int>(part_sizes[j]);
    return caps;
  }

  void Validate() const {
    Require(!part_sizes.empty(), ErrorKind::kInvalidArgument, "spec needs at least one class");
    for (auto s : part_sizes) Require(s >= 1, ErrorKind::kInvalidArgument, "part sizes must be >= 1");
    const auto nodes = n();
    Require(nodes <= std::numeric_limits<NodeId>::max(), ErrorKind::kInvalidArgument, "n too large");
    Require(max_edge_size >= 2 && static_cast<std::size_t>(max_edge_size) <= nodes, ErrorKind::kInvalidArgument,
            "need 2 <= M <= n");
    for (const auto& [m, a] : alpha) {
      Require(m >= 2 && m <= max_edge_size, ErrorKind::kInvalidArgument,
              "alpha given for edge size " + std::to_string(m) + " outside 2..M");
      Require(std::isfinite(a) && a >= 0.0 && a <= 1.0, ErrorKind::kInvalidArgument, "alpha must lie in [0, 1]");
    }
    std::visit(
        [&](const auto& r) {
          using R = std::decay_t<decltype(r)>;
          auto unit = [](double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; };
          if constexpr (std::is_same_v<R, TwoParam>) {
            Require(unit(r.p) && unit(r.q) && r.p + r.q <= 1.0 + 1e-15, ErrorKind::kInvalidArgument,
                    "TwoParam needs p, q in [0,1] and p + q <= 1");
          } else if constexpr (std::is_same_v<R, ThreeUniform>) {
            Require(unit(r.p1) && unit(r.p2) && unit(r.p3), ErrorKind::kInvalidArgument,
                    "ThreeUniform probabilities must lie in [0,1]");
            for (const auto& [m, a] : alpha) {
              Require(m == 3 || a == 0.0, ErrorKind::kInvalidArgument, "ThreeUniform only defines 3-edges");
            }
          } else if constexpr (std::is_same_v<R, PlantedClique>) {
            Require(part_sizes.size() == 2, ErrorKind::kInvalidArgument, "PlantedClique needs k = 2");
          } else {
            for (const auto& [key, prob] : r.entries) {
              Require(unit(prob), ErrorKind::kInvalidArgument, "CustomTable probabilities must lie in [0,1]");
              Require(static_cast<int>(key.second.size()) == key.first &&
                          std::is_sorted(key.second.begin(), key.second.end()),
                      ErrorKind::kInvalidArgument, "CustomTable keys must be sorted multisets of size m");
              for (int l : key.second) {
                Require(l >= 1 && l <= k(), ErrorKind::kInvalidArgument, "CustomTable label outside 1..k");
              }
            }
          }
        },
        rule);
  }

  friend bool operator==(const PlantedModelSpec&, const PlantedModelSpec&) = default;
};

// Table for an arbitrary symmetric rule given as fn(m, counts).
template <typename Fn>
CustomTable MakeTable(int k, int max_edge_size, Fn&& fn) {
  CustomTable table;
  const std::vector<int> caps(static_cast<std::size_t>(k), max_edge_size);
  for (int m = 2; m <= max_edge_size; ++m) {
    ForEachComposition(m, caps, [&](std::span<const int> counts) {
      table.entries[{m, LabelMultiset(counts)}] = fn(m, counts);
    });
  }
  return table;
}

inline std::vector<int> ClassOfNode(const PlantedModelSpec& spec) {
  std::vector<int> cls;
  cls.reserve(spec.n());
  for (std::size_t j = 0; j < spec.part_sizes.size(); ++j) {
    cls.insert(cls.end(), spec.part_sizes[j], static_cast<int>(j));
  }
  return cls;
}

inline double TotalSubsets(const PlantedModelSpec& spec, bool only_active = true) {
  double total = 0.0;
  for (int m = 2; m <= spec.max_edge_size; ++m) {
    if (only_active && spec.Alpha(m) == 0.0) continue;
    total += Binomial(static_cast<long long>(spec.n()), m);
  }
  return total;
}

struct SamplerOptions {
  enum class Strategy { kAuto, kNaive, kGrouped };
  Strategy strategy = Strategy::kAuto;
  double naive_budget = 1e6;   // max candidate subsets for the per-subset path
  double class_budget = 1e7;   // max compositions / fallback enumeration size
};

namespace detail {

struct EdgeHash {
  std::size_t operator()(const Edge& e) const {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (NodeId v : e) h = SplitMix64(h ^ v);
    return static_cast<std::size_t>(h);
  }
};

inline bool EdgeLess(const Edge& a, const Edge& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

inline Hypergraph SampleNaive(const PlantedModelSpec& spec, std::mt19937_64& rng) {
  const auto n = static_cast<std::uint32_t>(spec.n());
  const auto cls = ClassOfNode(spec);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<int> counts(static_cast<std::size_t>(spec.k()));
  std::vector<Edge> edges;
  for (int m = 2; m <= spec.max_edge_size; ++m) {
    const double a = spec.Alpha(m);
    if (a == 0.0) continue;
    ForEachSubset(n, static_cast<std::uint32_t>(m), [&](std::span<const std::uint32_t> subset) {
      std::fill(counts.begin(), counts.end(), 0);
      for (auto v : subset) ++counts[static_cast<std::size_t>(cls[v])];
      const double prob = a * RuleProbability(spec.rule, counts);
      if (unit(rng) < prob) edges.emplace_back(subset.begin(), subset.end());
    });
  }
  std::sort(edges.begin(), edges.end(), EdgeLess);
  return Hypergraph(spec.n(), std::move(edges));
}

// Uniformly chooses `count` of the `class_size` subsets with class counts
// `counts` by a single pass over the class (selection sampling).
inline void EnumerateClassSample(const PlantedModelSpec& spec, std::span<const int> counts,
                                 std::uint64_t class_size, std::uint64_t count, std::mt19937_64& rng,
                                 std::vector<Edge>& out) {
  std::vector<std::size_t> offset(spec.part_sizes.size(), 0);
  for (std::size_t j = 1; j < offset.size(); ++j) offset[j] = offset[j - 1] + spec.part_sizes[j - 1];
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uint64_t seen = 0;
  std::uint64_t chosen = 0;
  Edge current;
  auto recurse = [&](auto&& self, std::size_t j) -> void {
    if (chosen == count) return;
    if (j == counts.size()) {
      const double remaining_slots = static_cast<double>(count - chosen);
      const double remaining_items = static_cast<double>(class_size - seen);
      ++seen;
      if (remaining_items * unit(rng) < remaining_slots) {
        Edge e = current;
        std::sort(e.begin(), e.end());
        out.push_back(std::move(e));
        ++chosen;
      }
      return;
    }
    if (counts[j] == 0) {
      self(self, j + 1);
      return;
    }
    ForEachSubset(static_cast<std::uint32_t>(spec.part_sizes[j]), static_cast<std::uint32_t>(counts[j]),
                  [&](std::span<const std::uint32_t> pick) {
                    const auto base = current.size();
                    for (auto v : pick) current.push_back(static_cast<NodeId>(offset[j] + v));
                    self(self, j + 1);
                    current.resize(base);
                  });
  };
  recurse(recurse, 0);
}

inline Hypergraph SampleGrouped(const PlantedModelSpec& spec, std::mt19937_64& rng, const SamplerOptions& opt) {
  const auto caps = spec.PartCaps();
  double compositions = 0.0;
  for (int m = 2; m <= spec.max_edge_size; ++m) {
    if (spec.Alpha(m) > 0.0) compositions += CompositionCount(m, spec.k());
  }
  Require(compositions <= opt.class_budget, ErrorKind::kInfeasibleScale,
          "grouped sampler would enumerate " + std::to_string(compositions) + " label classes");
  std::vector<std::size_t> offset(spec.part_sizes.size(), 0);
  for (std::size_t j = 1; j < offset.size(); ++j) offset[j] = offset[j - 1] + spec.part_sizes[j - 1];

  std::vector<Edge> edges;
  for (int m = 2; m <= spec.max_edge_size; ++m) {
    const double a = spec.Alpha(m);
    if (a == 0.0) continue;
    ForEachComposition(m, caps, [&](std::span<const int> counts) {
      const double prob = a * RuleProbability(spec.rule, counts);
      if (prob <= 0.0) return;
      std::uint64_t class_size = 1;
      for (std::size_t j = 0; j < counts.size(); ++j) {
        const auto c = BinomialExact(spec.part_sizes[j], static_cast<std::uint64_t>(counts[j]));
        Require(c.has_value(), ErrorKind::kInfeasibleScale, "label class size overflows 64 bits");
        const unsigned __int128 product = static_cast<unsigned __int128>(class_size) * *c;
        Require(product < (static_cast<unsigned __int128>(1) << 62), ErrorKind::kInfeasibleScale,
                "label class size exceeds 2^62");
        class_size = static_cast<std::uint64_t>(product);
      }
      std::uint64_t count = class_size;
      if (prob < 1.0) {
        std::binomial_distribution<std::int64_t> draw(static_cast<std::int64_t>(class_size), prob);
        count = static_cast<std::uint64_t>(draw(rng));
      }
      if (count == 0) return;
      if (count == class_size) {
        Require(static_cast<double>(class_size) <= opt.class_budget, ErrorKind::kInfeasibleScale,
                "label class too large to enumerate");
        EnumerateClassSample(spec, counts, class_size, count, rng, edges);
        return;
      }
      // Rejection sampling of distinct subsets, capped at 100x the target.
      std::unordered_set<Edge, EdgeHash> chosen;
      chosen.reserve(static_cast<std::size_t>(count) * 2);
      std::vector<Edge> picked;
      picked.reserve(static_cast<std::size_t>(count));
      const std::uint64_t max_attempts = 100 * count;
      std::uint64_t attempts = 0;
      while (picked.size() < count && attempts < max_attempts) {
        ++attempts;
        Edge e;
        e.reserve(static_cast<std::size_t>(m));
        for (std::size_t j = 0; j < counts.size(); ++j) {
          if (counts[j] == 0) continue;
          for (auto v : SampleDistinct(static_cast<std::uint32_t>(spec.part_sizes[j]),
                                       static_cast<std::uint32_t>(counts[j]), rng)) {
            e.push_back(static_cast<NodeId>(offset[j] + v));
          }
        }
        std::sort(e.begin(), e.end());
        if (chosen.insert(e).second) picked.push_back(std::move(e));
      }
      if (picked.size() < count) {
        Require(static_cast<double>(class_size) <= opt.class_budget, ErrorKind::kInfeasibleScale,
                "rejection sampling stalled on a label class too large to enumerate");
        EnumerateClassSample(spec, counts, class_size, count, rng, edges);
        return;
      }
      for (auto& e : picked) edges.push_back(std::move(e));
    });
  }
  std::sort(edges.begin(), edges.end(), EdgeLess);
  return Hypergraph(spec.n(), std::move(edges));
}

}  // namespace detail

// Draws one hypergraph. Deterministic in (spec, seed, strategy). Edges are
// returned sorted by size, then lexicographically.
inline Hypergraph Sample(const PlantedModelSpec& spec, std::uint64_t seed, const SamplerOptions& opt = {}) {
  spec.Validate();
  std::mt19937_64 rng(seed);
  auto strategy = opt.strategy;
  if (strategy == SamplerOptions::Strategy::kAuto) {
    strategy = TotalSubsets(spec) <= opt.naive_budget ? SamplerOptions::Strategy::kNaive
                                                      : SamplerOptions::Strategy::kGrouped;
  }
  if (strategy == SamplerOptions::Strategy::kNaive) {
    Require(TotalSubsets(spec) <= std::max(opt.naive_budget, opt.class_budget), ErrorKind::kInfeasibleScale,
            "per-subset sampling over budget");
    return detail::SampleNaive(spec, rng);
  }
  return detail::SampleGrouped(spec, rng, opt);
}

// Edge counts per (edge size, class counts).
inline std::map<std::pair<int, std::vector<int>>, std::size_t> ClassEdgeCounts(const Hypergraph& h,
                                                                                const PlantedModelSpec& spec) {
  const auto cls = ClassOfNode(spec);
  std::map<std::pair<int, std::vector<int>>, std::size_t> out;
  std::vector<int> counts(static_cast<std::size_t>(spec.k()));
  for (const auto& e : h.edges()) {
    std::fill(counts.begin(), counts.end(), 0);
    for (NodeId v : e) ++counts[static_cast<std::size_t>(cls[v])];
    ++out[{static_cast<int>(e.size()), counts}];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Population quantities.

struct TheoremReport {
  double constant_c = 1.0;
  bool identifiable = false;
  std::optional<double> bound_raw;              // k n_1 ln n / (delta^2 d)
  std::optional<double> degree_condition_rhs;   // C k n_1 (ln n)^2 / (delta^2 n_k)
  double degree_condition_lhs = 0.0;            // d
  bool degree_condition_met = false;
  double deviation_bound = 0.0;                 // 12 sqrt(ln n / d)
  bool deviation_bound_applies = false;         // d > 9 ln n
};

struct PopulationSummary {
  std::size_t n = 0;
  int k = 0;
  Eigen::MatrixXd g;
  std::vector<double> jtilde;
  std::vector<double> dtilde;
  double d = 0.0;
  double lambda_min_g = 0.0;
  double delta = 0.0;
  double delta_first_term = 0.0;
  double delta_second_term = 0.0;
  bool zero_degree_class = false;
  std::size_t largest_part = 0;   // n_1
  std::size_t smallest_part = 0;  // n_k
  std::optional<TheoremReport> theorem;
};

struct PopulationOptions {
  double composition_budget = 1e7;
  double subset_budget = 1e7;
};

inline PopulationSummary ComputePopulationSummary(const PlantedModelSpec& spec, const PopulationOptions& opt = {}) {
  spec.Validate();
  const int k = spec.k();
  const auto ku = static_cast<std::size_t>(k);
  double work = 0.0;
  for (int m = 2; m <= spec.max_edge_size; ++m) {
    if (spec.Alpha(m) > 0.0) work += CompositionCount(m - 1, k) * (1.0 + 0.5 * k) * k;
  }
  Require(work <= opt.composition_budget, ErrorKind::kInfeasibleScale,
          "composition enumeration of " + std::to_string(work) + " terms exceeds budget");

  PopulationSummary s;
  s.n = spec.n();
  s.k = k;
  s.g = Eigen::MatrixXd::Zero(k, k);
  s.dtilde.assign(ku, 0.0);
  s.jtilde.assign(ku, 0.0);
  std::vector<double> self_weight(ku, 0.0);  // E[A(i,i)] per class
  std::vector<int> full(ku);

  for (int m = 2; m <= spec.max_edge_size; ++m) {
    const double a = spec.Alpha(m);
    if (a == 0.0) continue;
    for (std::size_t ca = 0; ca < ku; ++ca) {
      for (std::size_t cb = ca; cb < ku; ++cb) {
        auto caps = spec.PartCaps();
        --caps[ca];
        --caps[cb];
        if (caps[ca] < 0 || caps[cb] < 0) continue;
        CompensatedSum acc;
        ForEachComposition(m - 2, caps, [&](std::span<const int> counts) {
          double ways = 1.0;
          for (std::size_t j = 0; j < ku; ++j) ways *= Binomial(caps[j], counts[j]);
          if (ways == 0.0) return;
          std::copy(counts.begin(), counts.end(), full.begin());
          ++full[ca];
          ++full[cb];
          acc.Add(ways * a * RuleProbability(spec.rule, full));
        });
        const double value = acc.Value() / m;
        s.g(static_cast<Eigen::Index>(ca), static_cast<Eigen::Index>(cb)) += value;
        if (ca != cb) s.g(static_cast<Eigen::Index>(cb), static_cast<Eigen::Index>(ca)) += value;
      }
      auto caps = spec.PartCaps();
      --caps[ca];
      CompensatedSum acc;
      ForEachComposition(m - 1, caps, [&](std::span<const int> counts) {
        double ways = 1.0;
        for (std::size_t j = 0; j < ku; ++j) ways *= Binomial(caps[j], counts[j]);
        if (ways == 0.0) return;
        std::copy(counts.begin(), counts.end(), full.begin());
        ++full[ca];
        acc.Add(ways * a * RuleProbability(spec.rule, full));
      });
      s.dtilde[ca] += acc.Value();
      self_weight[ca] += acc.Value() / m;
    }
  }
  for (std::size_t a = 0; a < ku; ++a) {
    s.jtilde[a] = s.g(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a)) - self_weight[a];
  }

  s.largest_part = *std::max_element(spec.part_sizes.begin(), spec.part_sizes.end());
  s.smallest_part = *std::min_element(spec.part_sizes.begin(), spec.part_sizes.end());
  s.d = *std::min_element(s.dtilde.begin(), s.dtilde.end());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s.g, Eigen::EigenvaluesOnly);
  s.lambda_min_g = eig.eigenvalues()(0);

  s.zero_degree_class = !(s.d > 0.0);
  if (s.zero_degree_class) {
    s.delta = 0.0;
    return s;
  }
  double min_size_ratio = std::numeric_limits<double>::infinity();
  double ratio_lo = std::numeric_limits<double>::infinity();
  double ratio_hi = -std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < ku; ++a) {
    min_size_ratio = std::min(min_size_ratio, static_cast<double>(spec.part_sizes[a]) / s.dtilde[a]);
    const double r = s.jtilde[a] / s.dtilde[a];
    ratio_lo = std::min(ratio_lo, r);
    ratio_hi = std::max(ratio_hi, r);
  }
  s.delta_first_term = s.lambda_min_g * min_size_ratio;
  s.delta_second_term = ratio_hi - ratio_lo;
  s.delta = s.delta_first_term - s.delta_second_term;
  return s;
}

// Fills the consistency-theorem quantities for the caller's constant C. Never
// throws for delta <= 0; the report is marked unidentifiable instead.
inline TheoremReport MakeTheoremReport(const PopulationSummary& s, double constant_c) {
  TheoremReport t;
  t.constant_c = constant_c;
  t.degree_condition_lhs = s.d;
  const double n = static_cast<double>(s.n);
  const double ln_n = std::log(n);
  if (s.d > 0.0) {
    t.deviation_bound = 12.0 * std::sqrt(ln_n / s.d);
    t.deviation_bound_applies = s.d > 9.0 * ln_n;
  }
  t.identifiable = s.delta > 0.0 && !s.zero_degree_class;
  if (!t.identifiable) return t;
  const double k = s.k;
  const double n1 = static_cast<double>(s.largest_part);
  const double nk = static_cast<double>(s.smallest_part);
  const double d2 = s.delta * s.delta;
  t.bound_raw = k * n1 * ln_n / (d2 * s.d);
  t.degree_condition_rhs = constant_c * k * n1 * ln_n * ln_n / (d2 * nk);
  t.degree_condition_met = s.d > *t.degree_condition_rhs;
  return t;
}

// Population summary with the theorem report attached; throws Unidentifiable
// when delta <= 0.
inline PopulationSummary TheoreticalReport(const PlantedModelSpec& spec, double constant_c,
                                           const PopulationOptions& opt = {}) {
  auto s = ComputePopulationSummary(spec, opt);
  s.theorem = MakeTheoremReport(s, constant_c);
  if (!s.theorem->identifiable) {
    Fail(ErrorKind::kUnidentifiable, "delta = " + std::to_string(s.delta) + " is not positive");
  }
  return s;
}

// E[A] by enumerating every candidate edge. Exponential in M; test oracle and
// small-n diagnostics only.
inline DenseMatrix PopulationAdjacency(const PlantedModelSpec& spec, std::vector<double>* expected_degree = nullptr,
                                       const PopulationOptions& opt = {}) {
  spec.Validate();
  Require(TotalSubsets(spec, /*only_active=*/false) <= opt.subset_budget, ErrorKind::kInfeasibleScale,
          "brute-force population enumeration exceeds budget");
  const auto n = static_cast<std::uint32_t>(spec.n());
  const auto cls = ClassOfNode(spec);
  DenseMatrix a = DenseMatrix::Zero(n, n);
  std::vector<double> deg(n, 0.0);
  std::vector<int> counts(static_cast<std::size_t>(spec.k()));
  for (int m = 2; m <= spec.max_edge_size; ++m) {
    const double alpha = spec.Alpha(m);
    if (alpha == 0.0) continue;
    ForEachSubset(n, static_cast<std::uint32_t>(m), [&](std::span<const std::uint32_t> subset) {
      std::fill(counts.begin(), counts.end(), 0);
      for (auto v : subset) ++counts[static_cast<std::size_t>(cls[v])];
      const double prob = alpha * RuleProbability(spec.rule, counts);
      if (prob == 0.0) return;
      const double w = prob / m;
      for (auto u : subset) {
        deg[u] += prob;
        for (auto v : subset) a(u, v) += w;
      }
    });
  }
  if (expected_degree) *expected_degree = std::move(deg);
  return a;
}

inline DenseMatrix NormalizedLaplacianFrom(const DenseMatrix& a, std::span<const double> degree) {
  const auto n = a.rows();
  DenseMatrix l(n, n);
  std::vector<double> inv_sqrt(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d = degree[static_cast<std::size_t>(i)];
    if (!(d > 0.0)) Fail(ErrorKind::kZeroExpectedDegree, "node " + std::to_string(i + 1) + " has expected degree 0");
    inv_sqrt[static_cast<std::size_t>(i)] = 1.0 / std::sqrt(d);
  }
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = j; i < n; ++i) {
      l(i, j) = (i == j ? 1.0 : 0.0) -
                a(i, j) * (inv_sqrt[static_cast<std::size_t>(i)] * inv_sqrt[static_cast<std::size_t>(j)]);
      l(j, i) = l(i, j);
    }
  }
  return l;
}

// Population Laplacian by brute-force enumeration.
inline DenseMatrix PopulationLaplacian(const PlantedModelSpec& spec, const PopulationOptions& opt = {}) {
  std::vector<double> deg;
  const auto a = PopulationAdjacency(spec, &deg, opt);
  return NormalizedLaplacianFrom(a, deg);
}

// Z G Z^T - J assembled from a summary.
inline DenseMatrix AssembleFromSummary(const PlantedModelSpec& spec, const PopulationSummary& s) {
  const auto cls = ClassOfNode(spec);
  const auto n = static_cast<Eigen::Index>(cls.size());
  DenseMatrix a(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) a(i, j) = s.g(cls[static_cast<std::size_t>(i)], cls[static_cast<std::size_t>(j)]);
    a(j, j) -= s.jtilde[static_cast<std::size_t>(cls[static_cast<std::size_t>(j)])];
  }
  return a;
}

// Population Laplacian from the class-level decomposition; usable at any n
// that fits a dense matrix.
inline DenseMatrix PopulationLaplacianStructured(const PlantedModelSpec& spec, const PopulationSummary& s) {
  const auto cls = ClassOfNode(spec);
  std::vector<double> deg(cls.size());
  for (std::size_t i = 0; i < cls.size(); ++i) deg[i] = s.dtilde[static_cast<std::size_t>(cls[i])];
  return NormalizedLaplacianFrom(AssembleFromSummary(spec, s), deg);
}

}  // namespace hyperpart

#endif  // HYPERPART_PLANTED_MODEL_HPP
