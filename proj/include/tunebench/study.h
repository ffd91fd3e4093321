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
#ifndef TUNEBENCH_STUDY_H_
#define TUNEBENCH_STUDY_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "tunebench/genetic.h"
#include "tunebench/history.h"
#include "tunebench/search_space.h"
#include "tunebench/tpe.h"

namespace tunebench {

struct RandomConfig {
  friend bool operator==(const RandomConfig&, const RandomConfig&) = default;
};

struct GridConfig {
  std::size_t resolution = 10;
  friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

using SamplerConfig = std::variant<RandomConfig, GridConfig, TpeConfig, GaConfig>;

// "random", "grid", "tpe" or "genetic".
std::string_view sampler_kind(const SamplerConfig& config);

struct StudyConfig {
  Direction direction = Direction::kMinimize;
  std::uint64_t budget = 100;
  std::uint64_t seed = 0;
  SamplerConfig sampler = RandomConfig{};

  void validate() const;
  friend bool operator==(const StudyConfig&, const StudyConfig&) = default;
};

// Suggestion strategy behind a study. Implementations derive every
// suggestion from (space, history, config, seed) alone.
class Sampler {
 public:
  virtual ~Sampler() = default;
  // Point for trial ordinal, or nullopt once the strategy has nothing left.
  // study_rng is the study-level stream; trial streams are forks of it.
  virtual std::optional<ParamPoint> suggest(const History& history,
                                            std::uint64_t ordinal,
                                            const Rng& study_rng) = 0;
  virtual bool exhausted(std::uint64_t ordinal) const = 0;
};

std::unique_ptr<Sampler> make_sampler(const SearchSpace& space,
                                      const StudyConfig& config);

// Ask/tell optimization loop over one space under a trial budget.
class Study {
 public:
  Study(SearchSpace space, StudyConfig config);

  const SearchSpace& space() const { return space_; }
  const StudyConfig& config() const { return config_; }
  const History& history() const { return history_; }
  const std::optional<TrialRecord>& best() const { return best_; }

  // True once the budget is used up or the sampler ran dry.
  bool finished() const;

  // Next suggestion. Throws BudgetExhausted when finished().
  ParamPoint ask();

  // Records a trial under the next ordinal. Throws InvalidArgument for an
  // out-of-space point or non-finite score, BudgetExhausted past the budget.
  const TrialRecord& tell(const ParamPoint& point, double score,
                          double wall_ms = 0.0);
  const TrialRecord& tell_failure(const ParamPoint& point, std::string reason,
                                  double wall_ms = 0.0);

  // Candidate log of the most recent TPE suggestion, if any.
  const TpeDecision* last_tpe_decision() const {
    return tpe_log_ != nullptr && tpe_log_->has_value() ? &**tpe_log_ : nullptr;
  }

 private:
  friend Study load_study(std::istream& in);
  void append_loaded(TrialRecord record);
  void check_room() const;
  void track_best(const TrialRecord& record);

  SearchSpace space_;
  StudyConfig config_;
  Rng rng_;
  std::unique_ptr<Sampler> sampler_;
  History history_;
  std::optional<TrialRecord> best_;
  // Points into the sampler, which lives on the heap.
  const std::optional<TpeDecision>* tpe_log_ = nullptr;
};

// Returns the score of one trial. Throwing, or returning a non-finite
// value, marks the trial failed; the study carries on.
using Objective = std::function<double(const ParamPoint&)>;

struct StudyResult {
  std::optional<TrialRecord> best;
  History history;
  std::string sampler;
  Study study;
};

struct RunOptions {
  // When false every wall_ms is recorded as 0 so traces are reproducible.
  bool record_wall_time = true;
};

StudyResult run_study(const Objective& objective, const SearchSpace& space,
                      const StudyConfig& config, const RunOptions& options = {});

// Line-delimited JSON trace: a header line, then one line per trial.
void save_study(const Study& study, std::ostream& out);
std::string save_study(const Study& study);

// Throws ParseError naming the offending line.
Study load_study(std::istream& in);
Study load_study_text(std::string_view text);

}  // namespace tunebench

#endif  // TUNEBENCH_STUDY_H_
