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
// Command-line front end: tune, compare, presets.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tunebench/commands.h"
#include "tunebench/manifest.h"
#include "tunebench/search_space.h"
#include "tunebench/serialization.h"

namespace {

struct Overrides {
  std::string manifest;
  std::optional<std::uint64_t> budget;
  std::vector<std::uint64_t> seeds;
  std::optional<std::string> output;
  std::optional<std::size_t> jobs;
};

void add_run_options(CLI::App* cmd, Overrides& o) {
  cmd->add_option("manifest", o.manifest, "Run manifest (JSON)")->required();
  cmd->add_option("--budget", o.budget, "Override the trial budget");
  cmd->add_option("--seed", o.seeds, "Override the seed list (repeatable)");
  cmd->add_option("--output", o.output, "Override the output directory");
  cmd->add_option("--jobs", o.jobs, "Studies to run concurrently");
}

int run(const Overrides& o, bool compare) {
  using namespace tunebench;
  RunManifest m;
  try {
    m = load_manifest(o.manifest);
    if (o.budget) {
      if (*o.budget < 1) throw ManifestError("--budget must be >= 1");
      m.budget = *o.budget;
    }
    if (!o.seeds.empty()) m.seeds = o.seeds;
    if (o.output) m.output = *o.output;
    if (o.jobs) {
      if (*o.jobs < 1) throw ManifestError("--jobs must be >= 1");
      m.jobs = *o.jobs;
    }
  } catch (const ManifestError& e) {
    std::cerr << "manifest error: " << e.what() << '\n';
    return kExitManifest;
  }
  return compare ? cmd_compare(m, std::cout, std::cerr)
                 : cmd_tune(m, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperparameter search benchmarking"};
  app.require_subcommand(1);

  Overrides tune_opts;
  add_run_options(app.add_subcommand("tune", "Run one study per seed"), tune_opts);
  Overrides compare_opts;
  add_run_options(
      app.add_subcommand("compare", "Run every sampler against every seed"),
      compare_opts);

  std::string preset;
  auto* presets = app.add_subcommand("presets", "Print preset search spaces");
  presets->add_option("name", preset, "Preset to print (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : tunebench::kExitManifest;
  }

  if (app.got_subcommand("tune")) return run(tune_opts, false);
  if (app.got_subcommand("compare")) return run(compare_opts, true);

  tunebench::Json out = tunebench::Json::object();
  try {
    if (!preset.empty()) {
      out[preset] = tunebench::space_to_json(tunebench::preset_space(preset));
    } else {
      for (const auto& name : tunebench::preset_names()) {
        out[name] = tunebench::space_to_json(tunebench::preset_space(name));
      }
    }
  } catch (const tunebench::InvalidArgument& e) {
    std::cerr << e.what() << '\n';
    return tunebench::kExitManifest;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}
