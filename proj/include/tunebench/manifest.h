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
#ifndef TUNEBENCH_MANIFEST_H_
#define TUNEBENCH_MANIFEST_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "tunebench/cross_validation.h"
#include "tunebench/dataset.h"
#include "tunebench/error.h"
#include "tunebench/serialization.h"
#include "tunebench/study.h"

namespace tunebench {

// The run definition is unusable. Maps to exit status 2.
class ManifestError : public Error {
 public:
  using Error::Error;
};

// The objective could not be prepared (unreadable data, worker would not
// start). Maps to exit status 3.
class SetupError : public Error {
 public:
  using Error::Error;
};

struct BuiltinObjective {
  std::string name;
  std::size_t dim = 2;
};

struct CsvObjective {
  std::filesystem::path path;
  CsvOptions csv;
  ModelKind model = ModelKind::kRidge;
  Metric metric = Metric::kRmse;
  std::size_t folds = 3;
  std::uint64_t cv_seed = 0;
};

struct CommandObjective {
  std::vector<std::string> argv;
  int timeout_ms = 0;
};

using ObjectiveSpec = std::variant<BuiltinObjective, CsvObjective, CommandObjective>;

struct NamedSampler {
  std::string name;  // label in reports and file names
  SamplerConfig config;
};

struct RunManifest {
  SearchSpace space;
  ObjectiveSpec objective;
  std::vector<NamedSampler> samplers;
  std::uint64_t budget = 100;
  std::vector<std::uint64_t> seeds;
  Direction direction = Direction::kMinimize;
  std::filesystem::path output = "tunebench-out";
  bool record_wall_time = false;
  std::size_t jobs = 1;
};

// Builds a manifest from its JSON form. Relative data paths resolve against
// base_dir. Throws ManifestError describing the first problem found.
RunManifest parse_manifest(const Json& j, const std::filesystem::path& base_dir);

// Reads and parses a manifest file; relative paths resolve against the
// file's directory.
RunManifest load_manifest(const std::filesystem::path& path);

}  // namespace tunebench

#endif  // TUNEBENCH_MANIFEST_H_
