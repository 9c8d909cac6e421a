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

// Parameter sweeps over planted-model specs. Config schema:
//
//   {
//     "spec": { ...PlantedModelSpec... },
//     "axis": "n" | "k" | "p" | "q" | "alpha_<m>",
//     "values": [60, 120, 240],
//     "trials": 10,
//     "seed": 1,
//     "C": 1.0,
//     "deviation": false
//   }
//
// Axis "n" and "k" rebuild balanced part sizes; "p" and "q" need a TwoParam
// rule. Trials run on a worker pool and rows come back ordered by
// (point, trial) whatever the schedule.

#ifndef HYPERPART_SWEEP_HPP
#define HYPERPART_SWEEP_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "hyperpart/closed_forms.hpp"
#include "hyperpart/model_json.hpp"
#include "hyperpart/pipeline.hpp"

namespace hyperpart {

// Runs fn(i) for i in [0, count) on up to `threads` workers. The first
// exception thrown by any task is rethrown after all workers stop.
template <typename Fn>
void ParallelFor(std::size_t count, std::size_t threads, Fn&& fn) {
  threads = std::max<std::size_t>(1, std::min(threads, count));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

struct SweepConfig {
  PlantedModelSpec spec;
  std::string axis = "n";
  std::vector<double> values;
  int trials = 1;
  std::uint64_t seed = 1;
  double constant_c = 1.0;
  bool deviation = false;

  void Validate() const {
    Require(trials >= 1, ErrorKind::kSchema, "trials must be >= 1");
    Require(!values.empty(), ErrorKind::kSchema, "sweep needs at least one axis value");
    for (double v : values) Require(std::isfinite(v), ErrorKind::kSchema, "axis values must be finite");
    Require(std::is_sorted(values.begin(), values.end()), ErrorKind::kSchema, "axis values must be sorted");
    const bool known = axis == "n" || axis == "k" || axis == "p" || axis == "q" ||
                       (axis.rfind("alpha_", 0) == 0 && axis.size() > 6);
    Require(known, ErrorKind::kSchema, "unknown axis '" + axis + "'");
    if (axis == "p" || axis == "q") {
      Require(std::holds_alternative<TwoParam>(spec.rule), ErrorKind::kSchema, "axis p/q needs a TwoParam rule");
    }
  }

  // The spec at one axis value.
  PlantedModelSpec SpecAt(double value) const {
    PlantedModelSpec s = spec;
    auto as_count = [&](double v) {
      Require(v >= 1 && std::floor(v) == v, ErrorKind::kSchema, "axis '" + axis + "' needs positive integers");
      return static_cast<std::size_t>(v);
    };
    if (axis == "n") {
      s.part_sizes = EqualParts(as_count(value), spec.k());
    } else if (axis == "k") {
      s.part_sizes = EqualParts(spec.n(), static_cast<int>(as_count(value)));
    } else if (axis == "p") {
      std::get<TwoParam>(s.rule).p = value;
    } else if (axis == "q") {
      std::get<TwoParam>(s.rule).q = value;
    } else {
      int m = 0;
      try {
        m = std::stoi(axis.substr(6));
      } catch (const std::logic_error&) {
        Fail(ErrorKind::kSchema, "bad axis '" + axis + "'");
      }
      s.alpha[m] = value;
      s.max_edge_size = std::max(s.max_edge_size, m);
    }
    s.Validate();
    return s;
  }
};

inline SweepConfig SweepConfigFromJson(const Json& j) {
  SweepConfig c;
  c.spec = SpecFromJson(detail::Field<Json>(j, "spec"));
  c.axis = detail::Field<std::string>(j, "axis");
  c.values = detail::Field<std::vector<double>>(j, "values");
  if (j.contains("trials")) c.trials = detail::Field<int>(j, "trials");
  if (j.contains("seed")) c.seed = detail::Field<std::uint64_t>(j, "seed");
  if (j.contains("C")) c.constant_c = detail::Field<double>(j, "C");
  if (j.contains("deviation")) c.deviation = detail::Field<bool>(j, "deviation");
  c.Validate();
  return c;
}

struct SweepRow {
  std::size_t point = 0;
  int trial = 0;
  double axis_value = 0.0;
  std::uint64_t seed = 0;
  std::optional<TrialResult> result;
  std::string error;  // empty on success
  double runtime_ms = 0.0;
};

struct SweepOptions {
  std::size_t threads = 1;
  bool timings = false;
  PartitionOptions partition;
  SamplerOptions sampler;
};

inline std::uint64_t TrialSeed(std::uint64_t base, std::size_t point, int trial) {
  return DeriveSeed(DeriveSeed(base, point), static_cast<std::uint64_t>(trial));
}

// Failed trials are kept as rows with the error text instead of aborting the
// sweep.
inline std::vector<SweepRow> RunSweep(const SweepConfig& config, const SweepOptions& opt = {}) {
  config.Validate();
  std::vector<SweepRow> rows;
  for (std::size_t p = 0; p < config.values.size(); ++p) {
    for (int t = 0; t < config.trials; ++t) {
      SweepRow row;
      row.point = p;
      row.trial = t;
      row.axis_value = config.values[p];
      row.seed = TrialSeed(config.seed, p, t);
      rows.push_back(row);
    }
  }
  ParallelFor(rows.size(), opt.threads, [&](std::size_t i) {
    auto& row = rows[i];
    detail::Stopwatch clock;
    try {
      TrialOptions trial;
      trial.partition = opt.partition;
      trial.sampler = opt.sampler;
      trial.constant_c = config.constant_c;
      trial.deviation = config.deviation;
      row.result = ExperimentTrial(config.SpecAt(row.axis_value), row.seed, trial);
    } catch (const Error& e) {
      row.error = e.what();
    }
    row.runtime_ms = clock.Lap();
  });
  return rows;
}

namespace detail {

inline std::string Num(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

inline std::string Num(const std::optional<double>& v) { return v ? Num(*v) : std::string(); }

inline double Median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

inline double Mean(const std::vector<double>& v) {
  if (v.empty()) return std::nan("");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

inline std::string CsvQuote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  return out + "\"";
}

}  // namespace detail

// runtime_ms is left empty unless timings are requested, so that repeated
// runs give identical files.
inline void WriteSweepCsv(std::ostream& out, const SweepConfig& config, const std::vector<SweepRow>& rows,
                          const std::string& invocation, bool timings) {
  out << "# " << invocation << '\n';
  out << config.axis
      << ",point,trial,seed,err,err_fraction,nhcut,separability_ratio,delta,d,bound_raw,deviation,runtime_ms,error\n";
  for (const auto& row : rows) {
    out << detail::Num(row.axis_value) << ',' << row.point << ',' << row.trial << ',' << row.seed << ',';
    if (row.result) {
      const auto& r = *row.result;
      const auto& rep = r.report;
      const auto& th = *r.summary.theorem;
      out << (rep.err ? std::to_string(*rep.err) : "") << ',' << detail::Num(rep.err_fraction) << ','
          << detail::Num(rep.nhcut) << ',' << (rep.separability ? detail::Num(rep.separability->ratio) : "") << ','
          << detail::Num(r.summary.delta) << ',' << detail::Num(r.summary.d) << ',' << detail::Num(th.bound_raw)
          << ',' << detail::Num(r.deviation) << ',';
    } else {
      out << ",,,,,,,,";
    }
    out << (timings ? detail::Num(row.runtime_ms) : "") << ',' << detail::CsvQuote(row.error) << '\n';
  }
}

inline void WriteSweepSummaryCsv(std::ostream& out, const SweepConfig& config, const std::vector<SweepRow>& rows,
                                 const std::string& invocation) {
  out << "# " << invocation << '\n';
  out << config.axis
      << ",trials,failures,median_err_fraction,mean_err_fraction,median_err,mean_err,mean_nhcut,delta,d,bound_raw,"
         "median_deviation,deviation_bound\n";
  for (std::size_t p = 0; p < config.values.size(); ++p) {
    std::vector<double> frac, err, nhcut, dev;
    std::size_t failures = 0;
    const TrialResult* any = nullptr;
    for (const auto& row : rows) {
      if (row.point != p) continue;
      if (!row.result) {
        ++failures;
        continue;
      }
      any = &*row.result;
      frac.push_back(*row.result->report.err_fraction);
      err.push_back(static_cast<double>(*row.result->report.err));
      nhcut.push_back(row.result->report.nhcut);
      if (row.result->deviation) dev.push_back(*row.result->deviation);
    }
    out << detail::Num(config.values[p]) << ',' << config.trials << ',' << failures << ','
        << detail::Num(detail::Median(frac)) << ',' << detail::Num(detail::Mean(frac)) << ','
        << detail::Num(detail::Median(err)) << ',' << detail::Num(detail::Mean(err)) << ','
        << detail::Num(detail::Mean(nhcut)) << ',';
    if (any) {
      const auto& th = *any->summary.theorem;
      out << detail::Num(any->summary.delta) << ',' << detail::Num(any->summary.d) << ','
          << detail::Num(th.bound_raw) << ',' << (dev.empty() ? "" : detail::Num(detail::Median(dev))) << ','
          << detail::Num(th.deviation_bound);
    } else {
      out << ",,,,";
    }
    out << '\n';
  }
}

}  // namespace hyperpart

#endif  // HYPERPART_SWEEP_HPP
