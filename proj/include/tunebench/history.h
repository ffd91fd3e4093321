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
#ifndef TUNEBENCH_HISTORY_H_
#define TUNEBENCH_HISTORY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tunebench/search_space.h"

namespace tunebench {

enum class Direction { kMinimize, kMaximize };

std::string_view to_string(Direction d);
// Accepts "minimize" / "maximize".
Direction parse_direction(std::string_view s);

// True when a is strictly better than b under d.
inline bool better(double a, double b, Direction d) {
  return d == Direction::kMinimize ? a < b : a > b;
}

// Score mapped into the internal minimization convention.
inline double canonical_score(double score, Direction d) {
  return d == Direction::kMinimize ? score : -score;
}

// One evaluated trial. A failed trial has no score and carries the reason.
struct TrialRecord {
  std::uint64_t ordinal = 0;
  ParamPoint point;
  std::optional<double> score;
  std::string failure;
  double wall_ms = 0.0;

  bool ok() const { return score.has_value(); }
  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

// Trials in ordinal order; ordinals are dense from zero.
class History {
 public:
  History() = default;

  // Throws InvalidArgument on a non-finite score.
  const TrialRecord& add(ParamPoint point, double score, double wall_ms = 0.0);
  const TrialRecord& add_failure(ParamPoint point, std::string reason,
                                 double wall_ms = 0.0);
  // Appends a fully formed record; its ordinal must equal size().
  void append(TrialRecord record);

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }
  const TrialRecord& operator[](std::size_t i) const { return records_[i]; }
  const std::vector<TrialRecord>& records() const { return records_; }
  auto begin() const { return records_.begin(); }
  auto end() const { return records_.end(); }

  // Successful trials only, in ordinal order.
  std::vector<TrialRecord> completed() const;
  std::size_t failed_count() const;

  friend bool operator==(const History&, const History&) = default;

 private:
  std::vector<TrialRecord> records_;
};

// Best successful record under d, ties to the lower ordinal.
std::optional<TrialRecord> best_of(const History& history, Direction d);

}  // namespace tunebench

#endif  // TUNEBENCH_HISTORY_H_
