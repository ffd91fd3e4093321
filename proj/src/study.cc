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
#include "tunebench/study.h"

#include <chrono>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "tunebench/error.h"
#include "tunebench/samplers.h"
#include "tunebench/serialization.h"

namespace tunebench {
namespace {

constexpr int kTraceVersion = 1;

class RandomSampler final : public Sampler {
 public:
  explicit RandomSampler(SearchSpace space) : space_(std::move(space)) {}

  std::optional<ParamPoint> suggest(const History&, std::uint64_t ordinal,
                                    const Rng& study_rng) override {
    Rng rng = study_rng.fork(ordinal);
    return random_suggest(space_, rng);
  }
  bool exhausted(std::uint64_t) const override { return false; }

 private:
  SearchSpace space_;
};

class GridSampler final : public Sampler {
 public:
  GridSampler(SearchSpace space, std::size_t resolution)
      : grid_(std::move(space), resolution) {}

  std::optional<ParamPoint> suggest(const History&, std::uint64_t ordinal,
                                    const Rng&) override {
    if (exhausted(ordinal)) return std::nullopt;
    return grid_.at(ordinal);
  }
  bool exhausted(std::uint64_t ordinal) const override {
    return ordinal >= grid_.size();
  }

 private:
  Grid grid_;
};

class TpeSampler final : public Sampler {
 public:
  TpeSampler(SearchSpace space, TpeConfig config, Direction direction)
      : space_(std::move(space)), config_(config), direction_(direction) {}

  std::optional<ParamPoint> suggest(const History& history,
                                    std::uint64_t ordinal,
                                    const Rng& study_rng) override {
    Rng rng = study_rng.fork(ordinal);
    TpeDecision decision = tpe_decide(space_, history, config_, direction_, rng);
    ParamPoint point = decision.point;
    last_ = std::move(decision);
    return point;
  }
  bool exhausted(std::uint64_t) const override { return false; }
  const std::optional<TpeDecision>& last() const { return last_; }

 private:
  SearchSpace space_;
  TpeConfig config_;
  Direction direction_;
  std::optional<TpeDecision> last_;
};

// Generation g occupies ordinals [g * pop_size, (g + 1) * pop_size). Each
// generation is bred from the points and scores actually recorded for the
// previous one, so the sampler can be rebuilt from a history at any time.
class GeneticSampler final : public Sampler {
 public:
  GeneticSampler(SearchSpace space, GaConfig config, Direction direction)
      : space_(std::move(space)), config_(config), direction_(direction) {}

  std::optional<ParamPoint> suggest(const History& history,
                                    std::uint64_t ordinal,
                                    const Rng& study_rng) override {
    if (exhausted(ordinal)) return std::nullopt;
    const std::uint64_t pop = config_.pop_size;
    const std::uint64_t gen = ordinal / pop;
    auto it = generations_.find(gen);
    if (it == generations_.end()) {
      it = generations_.emplace(gen, breed(history, gen, study_rng)).first;
      // Older generations are never asked for again in a sequential study.
      while (generations_.size() > 2) generations_.erase(generations_.begin());
    }
    return it->second[ordinal % pop];
  }

  bool exhausted(std::uint64_t ordinal) const override {
    return ordinal / config_.pop_size >= config_.generations;
  }

 private:
  Population breed(const History& history, std::uint64_t gen,
                   const Rng& study_rng) const {
    const std::uint64_t pop = config_.pop_size;
    Rng rng = study_rng.fork(gen * pop);
    if (gen == 0) return ga_init(space_, config_, rng);
    if (history.size() < gen * pop) {
      throw InvalidArgument(
          "genetic sampler needs every member of the previous generation "
          "told before breeding the next");
    }
    // Failed members take the worst score observed so far.
    double worst = -std::numeric_limits<double>::max();
    bool any = false;
    for (const auto& r : history) {
      if (r.ok()) {
        worst = std::max(worst, canonical_score(*r.score, direction_));
        any = true;
      }
    }
    if (!any) worst = std::numeric_limits<double>::max();
    Population parents;
    std::vector<double> fitness;
    for (std::uint64_t o = (gen - 1) * pop; o < gen * pop; ++o) {
      const TrialRecord& r = history[o];
      parents.push_back(r.point);
      fitness.push_back(r.ok() ? canonical_score(*r.score, direction_) : worst);
    }
    return ga_step(parents, fitness, space_, config_, Direction::kMinimize, rng);
  }

  SearchSpace space_;
  GaConfig config_;
  Direction direction_;
  std::map<std::uint64_t, Population> generations_;
};

std::string trial_failure_reason(const std::exception& e) {
  std::string what = e.what();
  return what.empty() ? std::string("objective threw") : what;
}

}  // namespace

std::string_view sampler_kind(const SamplerConfig& config) {
  switch (config.index()) {
    case 0:
      return "random";
    case 1:
      return "grid";
    case 2:
      return "tpe";
    default:
      return "genetic";
  }
}

void StudyConfig::validate() const {
  if (budget < 1) throw InvalidArgument("study budget must be >= 1");
  if (const auto* g = std::get_if<GridConfig>(&sampler)) {
    if (g->resolution == 0) throw InvalidArgument("grid resolution must be >= 1");
  } else if (const auto* t = std::get_if<TpeConfig>(&sampler)) {
    t->validate();
  } else if (const auto* ga = std::get_if<GaConfig>(&sampler)) {
    ga->validate();
  }
}

std::unique_ptr<Sampler> make_sampler(const SearchSpace& space,
                                      const StudyConfig& config) {
  return std::visit(
      [&](const auto& c) -> std::unique_ptr<Sampler> {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, RandomConfig>) {
          return std::make_unique<RandomSampler>(space);
        } else if constexpr (std::is_same_v<T, GridConfig>) {
          return std::make_unique<GridSampler>(space, c.resolution);
        } else if constexpr (std::is_same_v<T, GaConfig>) {
          return std::make_unique<GeneticSampler>(space, c, config.direction);
        } else {
          return std::make_unique<TpeSampler>(space, c, config.direction);
        }
      },
      config.sampler);
}

Study::Study(SearchSpace space, StudyConfig config)
    : space_(std::move(space)), config_(std::move(config)), rng_(config_.seed) {
  if (space_.empty()) throw InvalidArgument("search space is empty");
  config_.validate();
  sampler_ = make_sampler(space_, config_);
  if (const auto* tpe = dynamic_cast<const TpeSampler*>(sampler_.get())) {
    tpe_log_ = &tpe->last();
  }
}

bool Study::finished() const {
  return history_.size() >= config_.budget ||
         sampler_->exhausted(history_.size());
}

ParamPoint Study::ask() {
  if (history_.size() >= config_.budget) {
    throw BudgetExhausted("study budget of " + std::to_string(config_.budget) +
                          " trials is exhausted");
  }
  std::optional<ParamPoint> p =
      sampler_->suggest(history_, history_.size(), rng_);
  if (!p) throw BudgetExhausted("sampler has no further suggestions");
  return *std::move(p);
}

void Study::check_room() const {
  if (history_.size() >= config_.budget) {
    throw BudgetExhausted("study budget of " + std::to_string(config_.budget) +
                          " trials is exhausted");
  }
}

void Study::track_best(const TrialRecord& record) {
  if (!record.ok()) return;
  if (!best_ || better(*record.score, *best_->score, config_.direction)) {
    best_ = record;
  }
}

const TrialRecord& Study::tell(const ParamPoint& point, double score,
                               double wall_ms) {
  check_room();
  if (!std::isfinite(score)) throw InvalidArgument("trial score must be finite");
  const TrialRecord& r = history_.add(space_.canonicalize(point), score, wall_ms);
  track_best(r);
  return r;
}

const TrialRecord& Study::tell_failure(const ParamPoint& point,
                                       std::string reason, double wall_ms) {
  check_room();
  return history_.add_failure(space_.canonicalize(point), std::move(reason),
                              wall_ms);
}

void Study::append_loaded(TrialRecord record) {
  check_room();
  record.point = space_.canonicalize(record.point);
  history_.append(std::move(record));
  track_best(history_.records().back());
}

StudyResult run_study(const Objective& objective, const SearchSpace& space,
                      const StudyConfig& config, const RunOptions& options) {
  Study study(space, config);
  while (!study.finished()) {
    ParamPoint point = study.ask();
    const auto start = std::chrono::steady_clock::now();
    std::optional<double> score;
    std::string failure;
    try {
      score = objective(point);
      if (!std::isfinite(*score)) {
        failure = "objective returned a non-finite score";
        score.reset();
      }
    } catch (const std::exception& e) {
      failure = trial_failure_reason(e);
    } catch (...) {
      failure = "objective threw a non-standard exception";
    }
    double wall_ms = 0.0;
    if (options.record_wall_time) {
      wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    }
    if (score) {
      study.tell(point, *score, wall_ms);
    } else {
      study.tell_failure(point, failure, wall_ms);
    }
  }
  StudyResult result{study.best(), study.history(),
                     std::string(sampler_kind(config.sampler)), std::move(study)};
  return result;
}

void save_study(const Study& study, std::ostream& out) {
  Json header = Json::object();
  header["tunebench_trace"] = kTraceVersion;
  header["space"] = space_to_json(study.space());
  header["sampler"] = sampler_to_json(study.config().sampler);
  header["seed"] = study.config().seed;
  header["direction"] = std::string(to_string(study.config().direction));
  header["budget"] = study.config().budget;
  out << header.dump() << '\n';
  for (const auto& r : study.history()) {
    Json line = Json::object();
    line["ordinal"] = r.ordinal;
    line["params"] = point_to_json(r.point);
    if (r.ok()) {
      line["score"] = *r.score;
    } else {
      line["failure"] = r.failure;
    }
    line["wall_ms"] = r.wall_ms;
    out << line.dump() << '\n';
  }
}

std::string save_study(const Study& study) {
  std::ostringstream out;
  save_study(study, out);
  return out.str();
}

Study load_study(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  std::optional<Study> study;
  while (std::getline(in, text)) {
    ++line_no;
    const bool terminated = !in.eof();
    if (text.empty() && !terminated) break;
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(line_no, std::string("malformed record: ") + e.what());
    }
    if (!terminated) {
      throw ParseError(line_no, "record is not newline terminated (truncated?)");
    }
    try {
      if (!study) {
        if (!j.is_object() || !j.contains("tunebench_trace")) {
          throw InvalidArgument("first line must be a trace header");
        }
        if (j["tunebench_trace"] != kTraceVersion) {
          throw InvalidArgument("unsupported trace version");
        }
        for (const char* key : {"space", "sampler", "seed", "direction", "budget"}) {
          if (!j.contains(key)) {
            throw InvalidArgument(std::string("header is missing '") + key + "'");
          }
        }
        StudyConfig config;
        config.direction = parse_direction(j["direction"].get<std::string>());
        if (!j["seed"].is_number_unsigned() || !j["budget"].is_number_unsigned()) {
          throw InvalidArgument("seed and budget must be non-negative integers");
        }
        config.seed = j["seed"].get<std::uint64_t>();
        config.budget = j["budget"].get<std::uint64_t>();
        config.sampler = sampler_from_json(j["sampler"]);
        study.emplace(space_from_json(j["space"]), config);
        continue;
      }
      if (!j.is_object() || !j.contains("ordinal") || !j.contains("params") ||
          !j.contains("wall_ms")) {
        throw InvalidArgument("trial record needs ordinal, params and wall_ms");
      }
      if (j.contains("score") == j.contains("failure")) {
        throw InvalidArgument("trial record needs exactly one of score/failure");
      }
      if (!j["ordinal"].is_number_unsigned() || !j["wall_ms"].is_number()) {
        throw InvalidArgument("bad ordinal or wall_ms");
      }
      TrialRecord r;
      r.ordinal = j["ordinal"].get<std::uint64_t>();
      r.point = point_from_json(j["params"], study->space());
      r.wall_ms = j["wall_ms"].get<double>();
      if (j.contains("score")) {
        if (!j["score"].is_number()) throw InvalidArgument("score must be a number");
        r.score = j["score"].get<double>();
      } else {
        if (!j["failure"].is_string()) {
          throw InvalidArgument("failure must be a string");
        }
        r.failure = j["failure"].get<std::string>();
      }
      study->append_loaded(std::move(r));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!study) throw ParseError(line_no + 1, "missing trace header");
  return *std::move(study);
}

Study load_study_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  return load_study(in);
}

}  // namespace tunebench
