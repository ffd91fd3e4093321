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
#include "tunebench/history.h"

#include <cmath>

#include "tunebench/error.h"

namespace tunebench {

std::string_view to_string(Direction d) {
  return d == Direction::kMinimize ? "minimize" : "maximize";
}

Direction parse_direction(std::string_view s) {
  if (s == "minimize") return Direction::kMinimize;
  if (s == "maximize") return Direction::kMaximize;
  throw InvalidArgument("direction must be 'minimize' or 'maximize', got '" +
                        std::string(s) + "'");
}

const TrialRecord& History::add(ParamPoint point, double score,
                                double wall_ms) {
  if (!std::isfinite(score)) {
    throw InvalidArgument("trial score must be finite");
  }
  TrialRecord r;
  r.ordinal = records_.size();
  r.point = std::move(point);
  r.score = score;
  r.wall_ms = wall_ms;
  records_.push_back(std::move(r));
  return records_.back();
}

const TrialRecord& History::add_failure(ParamPoint point, std::string reason,
                                        double wall_ms) {
  TrialRecord r;
  r.ordinal = records_.size();
  r.point = std::move(point);
  r.failure = reason.empty() ? std::string("failed") : std::move(reason);
  r.wall_ms = wall_ms;
  records_.push_back(std::move(r));
  return records_.back();
}

void History::append(TrialRecord record) {
  if (record.ordinal != records_.size()) {
    throw InvalidArgument("trial ordinal " + std::to_string(record.ordinal) +
                          " out of sequence; expected " +
                          std::to_string(records_.size()));
  }
  if (record.score && !std::isfinite(*record.score)) {
    throw InvalidArgument("trial score must be finite");
  }
  records_.push_back(std::move(record));
}

std::vector<TrialRecord> History::completed() const {
  std::vector<TrialRecord> out;
  for (const auto& r : records_) {
    if (r.ok()) out.push_back(r);
  }
  return out;
}

std::size_t History::failed_count() const {
  std::size_t n = 0;
  for (const auto& r : records_) n += r.ok() ? 0 : 1;
  return n;
}

std::optional<TrialRecord> best_of(const History& history, Direction d) {
  const TrialRecord* best = nullptr;
  for (const auto& r : history) {
    if (!r.ok()) continue;
    if (best == nullptr || better(*r.score, *best->score, d)) best = &r;
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

}  // namespace tunebench
