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
#ifndef TUNEBENCH_EXTERNAL_OBJECTIVE_H_
#define TUNEBENCH_EXTERNAL_OBJECTIVE_H_

#include <string>
#include <string_view>
#include <sys/types.h>
#include <vector>

#include "tunebench/error.h"
#include "tunebench/search_space.h"

namespace tunebench {

// The worker command could not be started.
class SpawnError : public Error {
 public:
  using Error::Error;
};

// Scores points by talking to a long-lived child process.
//
// Protocol, one request in flight at a time:
//   request  (to the child's stdin):   {"alpha": 12.5, "max_depth": 3}\n
//   reply    (from the child's stdout): {"score": 0.734}\n
// A bare number is accepted as a reply too. A malformed reply fails that
// trial only; a child that exits or times out fails the trial and is
// restarted for the next one.
class ExternalObjective {
 public:
  // Spawns the child immediately; throws SpawnError when that fails.
  // timeout_ms <= 0 waits indefinitely.
  explicit ExternalObjective(std::vector<std::string> argv, int timeout_ms = 0);
  ~ExternalObjective();

  ExternalObjective(const ExternalObjective&) = delete;
  ExternalObjective& operator=(const ExternalObjective&) = delete;

  // Throws Error describing the protocol violation on failure.
  double operator()(const ParamPoint& point);

  // Number of times the child has been (re)started.
  int spawn_count() const { return spawns_; }

 private:
  void spawn();
  void shutdown();
  std::string read_line();

  std::vector<std::string> argv_;
  int timeout_ms_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  int spawns_ = 0;
};

// Parses one reply line; throws Error when it is not a finite score.
double parse_worker_reply(std::string_view line);

}  // namespace tunebench

#endif  // TUNEBENCH_EXTERNAL_OBJECTIVE_H_
