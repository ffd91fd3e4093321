// Copyright 2026 The Tunebench Authors
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
#ifndef TUNEBENCH_COMMANDS_H_
#define TUNEBENCH_COMMANDS_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tunebench/manifest.h"
#include "tunebench/study.h"

namespace tunebench {

// Exit statuses of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitManifest = 2;
inline constexpr int kExitSetup = 3;

// Prepared objective source. make() returns an objective owned by one
// worker thread; builtin and CSV objectives share immutable state, command
// objectives get a dedicated child process each.
class ObjectiveFactory {
 public:
  virtual ~ObjectiveFactory() = default;
  virtual Objective make() = 0;
  // Held-out score of a point for CSV objectives; nullopt otherwise.
  virtual std::optional<double> test_score(const ParamPoint&) const {
    return std::nullopt;
  }
};

// Loads data / starts workers. Throws SetupError.
std::unique_ptr<ObjectiveFactory> make_objective_factory(const RunManifest& m);

// One (sampler, seed) study.
struct CellResult {
  std::string sampler;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  std::optional<TrialRecord> best;
  std::optional<double> test_score;
  std::size_t n_trials = 0;
  std::size_t n_failed = 0;
  double wall_ms = 0.0;
  std::string trace;  // serialized study
  std::vector<std::optional<double>> best_so_far;  // one per trial
};

struct SamplerSummary {
  std::string sampler;
  std::size_t n_ok = 0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double iqr = 0.0;
  double best = 0.0;
  bool winner = false;
};

struct ComparisonReport {
  Direction direction = Direction::kMinimize;
  std::vector<CellResult> rows;  // sampler-major, then seed order
  std::vector<SamplerSummary> summary;
};

// Linear-interpolation quantile of values (need not be sorted), q in [0, 1].
double quantile(std::span<const double> values, double q);

// Per-sampler medians/IQRs and the winner (best median under direction).
std::vector<SamplerSummary> summarize(const std::vector<CellResult>& rows,
                                      Direction direction);

// Runs every (sampler, seed) cell of the manifest, m.jobs at a time. Cell
// failures are recorded in the rows, never thrown.
ComparisonReport run_cells(const RunManifest& m, ObjectiveFactory& factory);

// Writes trace_seed<S>.jsonl files and summary.csv under m.output.
ComparisonReport run_tune(const RunManifest& m);

// Writes traces/<sampler>_seed<S>.jsonl, report.csv, summary.csv and
// convergence.csv under m.output. Needs at least two samplers.
ComparisonReport run_compare(const RunManifest& m);

// Wrappers translating errors into exit statuses; a short result table goes
// to out, diagnostics to err.
int cmd_tune(const RunManifest& m, std::ostream& out, std::ostream& err);
int cmd_compare(const RunManifest& m, std::ostream& out, std::ostream& err);

// Text of the CSV artifacts, exposed for tests.
std::string tune_summary_csv(const RunManifest& m, const ComparisonReport& r);
std::string report_csv(const ComparisonReport& r);
std::string summary_csv(const ComparisonReport& r);
std::string convergence_csv(const ComparisonReport& r);

}  // namespace tunebench

#endif  // TUNEBENCH_COMMANDS_H_
