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

// Spectral hypergraph partitioning end to end:
//
//   1. L = I - D^{-1/2} A D^{-1/2}
//   2. X = eigenvectors of the k smallest eigenvalues of L
//   3. Xbar = X with unit rows
//   4. k-means on the rows of Xbar
//
// Isolated nodes are removed first and come back with label 0.

#ifndef HYPERPART_PIPELINE_HPP
#define HYPERPART_PIPELINE_HPP

#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hyperpart/combinatorics.hpp"
#include "hyperpart/error.hpp"
#include "hyperpart/hypergraph.hpp"
#include "hyperpart/kmeans.hpp"
#include "hyperpart/misclassification.hpp"
#include "hyperpart/model_json.hpp"
#include "hyperpart/planted_model.hpp"
#include "hyperpart/spectral.hpp"

namespace hyperpart {

struct PartitionOptions {
  Expansion expansion = Expansion::kStar;
  std::size_t dense_threshold = 2048;  // larger inputs use Lanczos on the matrix-free operator
  KMeansOptions kmeans;
  LanczosOptions lanczos;
  bool separability = true;
};

struct StageTimings {
  double laplacian_ms = 0.0;
  double eigen_ms = 0.0;
  double kmeans_ms = 0.0;
  double total_ms = 0.0;
};

struct PartitionReport {
  std::size_t n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  Expansion expansion = Expansion::kStar;
  PartitionAssignment psi_prime;
  std::optional<std::size_t> err;
  std::optional<double> err_fraction;
  double nhcut = 0.0;
  std::vector<double> eigenvalues;
  std::optional<double> eigengap;
  bool degenerate_gap = false;
  std::optional<SeparabilityReport> separability;
  std::size_t isolated_nodes = 0;
  double kmeans_objective = 0.0;
  std::string solver;
  StageTimings timings;
};

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double Lap() {
    const auto now = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(now - start_).count();
    start_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

inline PartitionReport Partition(const Hypergraph& h, int k, std::uint64_t seed, const PartitionOptions& opt = {},
                                 const PartitionAssignment* truth = nullptr) {
  Require(k >= 2, ErrorKind::kInvalidArgument, "partition needs k >= 2");
  if (truth) {
    Require(truth->size() == h.num_nodes(), ErrorKind::kLengthMismatch,
            "ground truth has " + std::to_string(truth->size()) + " labels for " + std::to_string(h.num_nodes()) +
                " nodes");
  }
  PartitionReport report;
  report.n = h.num_nodes();
  report.k = k;
  report.seed = seed;
  report.expansion = opt.expansion;
  detail::Stopwatch total, stage;

  std::vector<NodeId> kept;
  const Hypergraph core = DropIsolated(h, kept);
  report.isolated_nodes = h.num_nodes() - kept.size();
  Require(kept.size() >= static_cast<std::size_t>(k), ErrorKind::kTooFewNodes,
          std::to_string(kept.size()) + " non-isolated nodes for k=" + std::to_string(k));

  SpectralEmbedding emb;
  if (core.num_nodes() <= opt.dense_threshold) {
    const DenseMatrix l = Laplacian(core, opt.expansion);
    report.timings.laplacian_ms = stage.Lap();
    emb = LeadingEigenvectors(l, k);
  } else {
    const LaplacianOperator op(core, opt.expansion);
    report.timings.laplacian_ms = stage.Lap();
    emb = LeadingEigenvectorsIterative(op, k, DeriveSeed(seed, 1), opt.lanczos);
  }
  report.timings.eigen_ms = stage.Lap();
  report.solver = emb.solver;
  report.eigenvalues = emb.eigenvalues;
  report.eigengap = emb.eigengap;
  report.degenerate_gap = emb.degenerate_gap;

  const auto km = OrssKMeans(emb.xbar, k, DeriveSeed(seed, 2), opt.kmeans);
  report.kmeans_objective = km.objective;
  if (opt.separability) report.separability = Separability(emb.xbar, k, DeriveSeed(seed, 3), opt.kmeans);
  report.timings.kmeans_ms = stage.Lap();

  report.psi_prime.k = k;
  report.psi_prime.labels.assign(h.num_nodes(), 0);
  for (std::size_t i = 0; i < kept.size(); ++i) report.psi_prime.labels[kept[i]] = km.labels[i];
  report.nhcut = NhCut(h, report.psi_prime);
  if (truth) {
    report.err = Misclassification(*truth, report.psi_prime);
    report.err_fraction = report.n ? static_cast<double>(*report.err) / static_cast<double>(report.n) : 0.0;
  }
  report.timings.total_ms = total.Lap();
  return report;
}

struct TrialOptions {
  PartitionOptions partition;
  SamplerOptions sampler;
  PopulationOptions population;
  double constant_c = 1.0;
  bool deviation = false;  // ||L - Lpop||_2 against the population Laplacian
};

struct TrialResult {
  std::uint64_t seed = 0;
  std::size_t num_edges = 0;
  PartitionReport report;
  PopulationSummary summary;
  std::optional<double> deviation;
  std::optional<std::string> deviation_skipped;
};

// Samples from `spec`, partitions with its true k and scores against its
// block ground truth.
inline TrialResult ExperimentTrial(const PlantedModelSpec& spec, std::uint64_t seed, const TrialOptions& opt = {}) {
  spec.Validate();
  TrialResult out;
  out.seed = seed;
  out.summary = ComputePopulationSummary(spec, opt.population);
  out.summary.theorem = MakeTheoremReport(out.summary, opt.constant_c);
  const Hypergraph h = Sample(spec, DeriveSeed(seed, 0), opt.sampler);
  out.num_edges = h.num_edges();
  const auto truth = BlockPartition(spec.part_sizes);
  out.report = Partition(h, spec.k(), DeriveSeed(seed, 1), opt.partition, &truth);
  if (opt.deviation) {
    if (out.report.isolated_nodes > 0) {
      out.deviation_skipped = "sample has isolated nodes";
    } else if (out.summary.zero_degree_class) {
      out.deviation_skipped = "zero expected degree";
    } else {
      const DenseMatrix lpop = PopulationLaplacianStructured(spec, out.summary);
      out.deviation = SpectralNormDeviation(Laplacian(h, opt.partition.expansion), lpop, DeriveSeed(seed, 4));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Serialization. Timings are wall-clock and therefore excluded unless asked
// for, which keeps reports byte-identical across runs.

inline const char* ExpansionName(Expansion e) { return e == Expansion::kStar ? "star" : "clique"; }

inline Json OptionalJson(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

inline Json ReportToJson(const PartitionReport& r, bool include_timings = false) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["seed"] = r.seed;
  j["expansion"] = ExpansionName(r.expansion);
  j["solver"] = r.solver;
  j["err"] = r.err ? Json(*r.err) : Json(nullptr);
  j["err_fraction"] = OptionalJson(r.err_fraction);
  j["nhcut"] = r.nhcut;
  j["eigenvalues"] = r.eigenvalues;
  j["eigengap"] = OptionalJson(r.eigengap);
  j["degenerate_gap"] = r.degenerate_gap;
  if (r.separability) {
    const auto& s = *r.separability;
    j["separability"] = {{"eta_k", s.eta_k},
                         {"eta_k_minus_1", s.eta_km1},
                         {"ratio", std::isfinite(s.ratio) ? Json(s.ratio) : Json(nullptr)},
                         {"sigma_k", s.sigma_k},
                         {"certified_ratio", std::isfinite(s.certified_ratio) ? Json(s.certified_ratio) : Json(nullptr)}};
    j["separability_ratio"] = j["separability"]["ratio"];
  } else {
    j["separability"] = nullptr;
    j["separability_ratio"] = nullptr;
  }
  j["isolated_nodes"] = r.isolated_nodes;
  j["kmeans_objective"] = r.kmeans_objective;
  j["psi_prime"] = r.psi_prime.labels;
  if (include_timings) {
    j["timings_ms"] = {{"laplacian", r.timings.laplacian_ms},
                       {"eigen", r.timings.eigen_ms},
                       {"kmeans", r.timings.kmeans_ms},
                       {"total", r.timings.total_ms}};
  }
  return j;
}

inline Json TrialToJson(const TrialResult& t, bool include_timings = false) {
  Json j;
  j["seed"] = t.seed;
  j["num_edges"] = t.num_edges;
  j["identifiable"] = t.summary.theorem ? t.summary.theorem->identifiable : t.summary.delta > 0.0;
  j["population"] = SummaryToJson(t.summary);
  j["deviation"] = OptionalJson(t.deviation);
  if (t.deviation_skipped) j["deviation_skipped"] = *t.deviation_skipped;
  j["report"] = ReportToJson(t.report, include_timings);
  return j;
}

}  // namespace hyperpart

#endif  // HYPERPART_PIPELINE_HPP
