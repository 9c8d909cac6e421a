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

// hyperpart: command-line front end.
//
// Exit codes: 0 success, 2 usage, 3 data error, 4 numerical failure. Errors
// are printed to stdout as {"error": {"kind": ..., "message": ...}}.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hyperpart/hyperpart.hpp"

namespace {

using hyperpart::ErrorKind;
using hyperpart::Json;

constexpr int kExitUsage = 2;
constexpr int kExitData = 3;
constexpr int kExitNumerical = 4;

struct Globals {
  std::optional<std::uint64_t> seed;
  std::size_t threads = 1;
  double budget = 1e6;
  double constant_c = 1.0;
  bool timings = false;
  std::string invocation;

  std::uint64_t Seed() {
    if (!seed) {
      seed = (static_cast<std::uint64_t>(std::random_device{}()) << 32) ^ std::random_device{}();
      std::cerr << "seed: " << *seed << '\n';
    }
    return *seed;
  }

  hyperpart::SamplerOptions Sampler() const {
    hyperpart::SamplerOptions opt;
    opt.naive_budget = budget;
    return opt;
  }
};

void Emit(const Json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream out(out_path);
  hyperpart::Require(static_cast<bool>(out), ErrorKind::kIo, "cannot write " + out_path);
  out << j.dump(2) << '\n';
}

int ErrorExit(ErrorKind kind, const std::string& message, int code) {
  Json j;
  j["error"] = {{"kind", std::string(hyperpart::ErrorKindName(kind))}, {"message", message}};
  std::cout << j.dump(2) << '\n';
  return code;
}

// --- generate --------------------------------------------------------------

struct GenerateArgs {
  std::string spec, out, labels;
};

void RunGenerate(Globals& g, const GenerateArgs& a) {
  const auto spec = hyperpart::SpecFromJson(hyperpart::ReadJsonFile(a.spec));
  const auto seed = g.Seed();
  const auto h = hyperpart::Sample(spec, seed, g.Sampler());
  hyperpart::WriteHgrFile(a.out, h);
  hyperpart::WriteLabelsFile(a.labels.empty() ? a.out + ".labels" : a.labels,
                             hyperpart::BlockPartition(spec.part_sizes));
  Json j;
  j["seed"] = seed;
  j["n"] = h.num_nodes();
  j["num_edges"] = h.num_edges();
  j["hgr"] = a.out;
  j["labels"] = a.labels.empty() ? a.out + ".labels" : a.labels;
  std::cout << j.dump(2) << '\n';
}

// --- partition / clique-baseline ------------------------------------------

struct PartitionArgs {
  std::string input, truth, out;
  int k = 2;
  std::size_t dense_threshold = 2048;
  std::string expansion = "star";
};

void RunPartition(Globals& g, const PartitionArgs& a, hyperpart::Expansion expansion) {
  const auto h = hyperpart::ReadHgrFile(a.input);
  std::optional<hyperpart::PartitionAssignment> truth;
  if (!a.truth.empty()) truth = hyperpart::ReadLabelsFile(a.truth);
  hyperpart::PartitionOptions opt;
  opt.expansion = expansion;
  opt.dense_threshold = a.dense_threshold;
  const auto report = hyperpart::Partition(h, a.k, g.Seed(), opt, truth ? &*truth : nullptr);
  Emit(hyperpart::ReportToJson(report, g.timings), a.out);
}

// --- ingest-categorical ----------------------------------------------------

struct IngestArgs {
  std::string csv, label_column, out, labels;
  bool question_mark_missing = false;
};

void RunIngest(const IngestArgs& a) {
  hyperpart::CategoricalOptions opt;
  if (!a.label_column.empty()) opt.label_column = a.label_column;
  opt.question_mark_is_missing = a.question_mark_missing;
  const auto data = hyperpart::IngestCategoricalFile(a.csv, opt);
  hyperpart::WriteHgrFile(a.out, data.h);
  Json j;
  j["n"] = data.h.num_nodes();
  j["num_edges"] = data.h.num_edges();
  j["attributes"] = data.attributes;
  j["hgr"] = a.out;
  if (data.truth) {
    const auto labels_path = a.labels.empty() ? a.out + ".labels" : a.labels;
    hyperpart::WriteLabelsFile(labels_path, *data.truth);
    j["labels"] = labels_path;
    j["classes"] = data.label_values;
  }
  std::cout << j.dump(2) << '\n';
}

// --- model-info ------------------------------------------------------------

struct ModelInfoArgs {
  std::string spec, out;
};

bool Balanced(const hyperpart::PlantedModelSpec& spec) {
  for (auto s : spec.part_sizes) {
    if (s != spec.part_sizes.front()) return false;
  }
  return true;
}

Json ClosedForms(const hyperpart::PlantedModelSpec& spec, double constant_c) {
  Json j = Json::object();
  const auto n = static_cast<long long>(spec.n());
  const long long k = spec.k();
  std::vector<int> active;
  for (const auto& [m, a] : spec.alpha) {
    if (a > 0.0) active.push_back(m);
  }
  if (const auto* tp = std::get_if<hyperpart::TwoParam>(&spec.rule); tp && Balanced(spec) && !active.empty()) {
    if (active.size() == 1) {
      const int r = active.front();
      if (r <= n / k) {
        const auto dd = hyperpart::DeltaUniform(n, k, r, tp->p, tp->q, spec.Alpha(r));
        j["uniform_two_param"] = {{"delta", dd.delta}, {"d", dd.d}};
      }
      j["alpha_threshold"] = hyperpart::UniformSparsityThreshold(n, k, r, constant_c);
    } else {
      const auto dd = hyperpart::DeltaBalancedNonuniform(n, k, tp->p, tp->q, spec.alpha);
      j["balanced_nonuniform_two_param"] = {{"delta", dd.delta}, {"d", dd.d}};
    }
  }
  if (const auto* tu = std::get_if<hyperpart::ThreeUniform>(&spec.rule); tu && Balanced(spec) && k >= 3) {
    const auto id = hyperpart::Identifiable3Uniform(tu->p1, tu->p2, tu->p3, k, n);
    Json t = {{"identifiable", id.identifiable}, {"margin", id.margin}};
    if (id.identifiable) t["delta"] = hyperpart::Delta3Uniform(tu->p1, tu->p2, tu->p3, k, n, spec.Alpha(3));
    j["three_uniform"] = std::move(t);
  }
  if (std::holds_alternative<hyperpart::PlantedClique>(spec.rule) && active.size() == 1) {
    const auto s = static_cast<long long>(spec.part_sizes.front());
    const int r = active.front();
    if (r <= s && s < n - s && spec.Alpha(r) == 1.0) {
      j["planted_clique"] = {{"delta", hyperpart::DeltaPlantedClique(n, s, r)}};
    }
  }
  return j;
}

void RunModelInfo(const Globals& g, const ModelInfoArgs& a) {
  const auto spec = hyperpart::SpecFromJson(hyperpart::ReadJsonFile(a.spec));
  auto summary = hyperpart::ComputePopulationSummary(spec);
  summary.theorem = hyperpart::MakeTheoremReport(summary, g.constant_c);
  Json j;
  j["spec"] = hyperpart::SpecToJson(spec);
  j["identifiable"] = summary.theorem->identifiable;
  j["population"] = hyperpart::SummaryToJson(summary);
  j["closed_forms"] = ClosedForms(spec, g.constant_c);
  Emit(j, a.out);
}

// --- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string config, out, summary;
};

void RunSweepCommand(Globals& g, const SweepArgs& a) {
  auto config = hyperpart::SweepConfigFromJson(hyperpart::ReadJsonFile(a.config));
  if (g.seed) config.seed = *g.seed;
  config.constant_c = g.constant_c;
  hyperpart::SweepOptions opt;
  opt.threads = g.threads;
  opt.timings = g.timings;
  opt.sampler = g.Sampler();
  const auto rows = hyperpart::RunSweep(config, opt);
  {
    std::ofstream out(a.out);
    hyperpart::Require(static_cast<bool>(out), ErrorKind::kIo, "cannot write " + a.out);
    hyperpart::WriteSweepCsv(out, config, rows, g.invocation, g.timings);
  }
  const auto summary_path = a.summary.empty() ? a.out + ".summary.csv" : a.summary;
  {
    std::ofstream out(summary_path);
    hyperpart::Require(static_cast<bool>(out), ErrorKind::kIo, "cannot write " + summary_path);
    hyperpart::WriteSweepSummaryCsv(out, config, rows, g.invocation);
  }
  std::size_t failures = 0;
  for (const auto& row : rows) failures += row.error.empty() ? 0 : 1;
  Json j;
  j["rows"] = rows.size();
  j["failures"] = failures;
  j["csv"] = a.out;
  j["summary_csv"] = summary_path;
  std::cout << j.dump(2) << '\n';
}

// --- sparsity-diag ---------------------------------------------------------

struct SparsityArgs {
  std::string input, out;
};

void RunSparsity(const SparsityArgs& a) {
  Emit(hyperpart::SparsityToJson(hyperpart::DiagnoseSparsity(hyperpart::ReadHgrFile(a.input))), a.out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral partitioning of hypergraphs and planted-partition experiments"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  for (int i = 0; i < argc; ++i) g.invocation += (i ? " " : "") + std::string(argv[i]);

  app.add_option("--seed", g.seed, "Random seed (drawn from entropy and printed when omitted)");
  app.add_option("--threads", g.threads, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--budget", g.budget, "Largest subset count sampled edge by edge")->check(CLI::PositiveNumber);
  app.add_option("--constant-C", g.constant_c, "Constant C in the consistency bound")->check(CLI::PositiveNumber);
  app.add_flag("--timings", g.timings, "Include wall-clock timings in reports");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Sample a hypergraph from a planted model spec");
  generate->add_option("--spec", gen.spec, "Model spec JSON")->required();
  generate->add_option("--out", gen.out, "Output .hgr")->required();
  generate->add_option("--labels", gen.labels, "Ground-truth sidecar (default <out>.labels)");

  PartitionArgs part;
  auto* partition = app.add_subcommand("partition", "Spectral partition of an .hgr file");
  partition->add_option("--input", part.input, "Input .hgr")->required();
  partition->add_option("-k,--k", part.k, "Number of parts")->required();
  partition->add_option("--truth", part.truth, "Ground-truth labels");
  partition->add_option("--out", part.out, "Report JSON (default stdout)");
  partition->add_option("--dense-threshold", part.dense_threshold, "Largest n solved densely");
  partition->add_option("--expansion", part.expansion, "star or clique")
      ->check(CLI::IsMember({"star", "clique"}));

  PartitionArgs clique;
  auto* baseline = app.add_subcommand("clique-baseline", "Same pipeline on the clique-expansion graph");
  baseline->add_option("--input", clique.input, "Input .hgr")->required();
  baseline->add_option("-k,--k", clique.k, "Number of parts")->required();
  baseline->add_option("--truth", clique.truth, "Ground-truth labels");
  baseline->add_option("--out", clique.out, "Report JSON (default stdout)");
  baseline->add_option("--dense-threshold", clique.dense_threshold, "Largest n solved densely");

  IngestArgs ing;
  auto* ingest = app.add_subcommand("ingest-categorical", "Build a hypergraph from a categorical CSV");
  ingest->add_option("--csv", ing.csv, "Input CSV with a header row")->required();
  ingest->add_option("--label-column", ing.label_column, "Class column, by name or 1-based index");
  ingest->add_option("--out", ing.out, "Output .hgr")->required();
  ingest->add_option("--labels", ing.labels, "Ground-truth sidecar (default <out>.labels)");
  ingest->add_flag("--question-mark-missing", ing.question_mark_missing, "Treat '?' as a missing value");

  ModelInfoArgs info;
  auto* model_info = app.add_subcommand("model-info", "Population quantities of a model spec");
  model_info->add_option("--spec", info.spec, "Model spec JSON")->required();
  model_info->add_option("--out", info.out, "Output JSON (default stdout)");

  SweepArgs sw;
  auto* sweep = app.add_subcommand("sweep", "Run a parameter sweep");
  sweep->add_option("--config", sw.config, "Sweep config JSON")->required();
  sweep->add_option("--out", sw.out, "Per-trial CSV")->required();
  sweep->add_option("--summary", sw.summary, "Per-point CSV (default <out>.summary.csv)");

  SparsityArgs sp;
  auto* sparsity = app.add_subcommand("sparsity-diag", "Per-size edge density of an .hgr file");
  sparsity->add_option("--input", sp.input, "Input .hgr")->required();
  sparsity->add_option("--out", sp.out, "Output JSON (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ErrorExit(ErrorKind::kInvalidArgument, e.what(), kExitUsage);
  }

  try {
    if (*generate) RunGenerate(g, gen);
    if (*partition) {
      RunPartition(g, part, part.expansion == "clique" ? hyperpart::Expansion::kClique : hyperpart::Expansion::kStar);
    }
    if (*baseline) RunPartition(g, clique, hyperpart::Expansion::kClique);
    if (*ingest) RunIngest(ing);
    if (*model_info) RunModelInfo(g, info);
    if (*sweep) RunSweepCommand(g, sw);
    if (*sparsity) RunSparsity(sp);
  } catch (const hyperpart::Error& e) {
    const int code = hyperpart::IsNumericalError(e.kind())           ? kExitNumerical
                     : e.kind() == ErrorKind::kInvalidArgument ? kExitUsage
                                                                : kExitData;
    return ErrorExit(e.kind(), e.detail(), code);
  }
  return 0;
}
