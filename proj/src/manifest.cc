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
#include "tunebench/manifest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "tunebench/synthetic.h"

namespace tunebench {
namespace {

void only_keys(const Json& j, const std::set<std::string>& keys,
               const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!keys.contains(key)) {
      throw ManifestError("unknown field '" + key + "' in " + where);
    }
  }
}

std::uint64_t read_u64(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned()) {
    throw ManifestError(what + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::string read_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw ManifestError(what + " must be a string");
  return j.get<std::string>();
}

ObjectiveSpec parse_objective(const Json& j, const std::filesystem::path& base) {
  if (!j.is_object()) throw ManifestError("'objective' must be an object");
  int sources = 0;
  for (const char* key : {"builtin", "csv", "command"}) {
    sources += j.contains(key) ? 1 : 0;
  }
  if (sources != 1) {
    throw ManifestError(
        "'objective' needs exactly one of 'builtin', 'csv', 'command'");
  }
  if (j.contains("builtin")) {
    only_keys(j, {"builtin", "dim"}, "objective");
    BuiltinObjective b;
    b.name = read_string(j["builtin"], "objective.builtin");
    if (j.contains("dim")) b.dim = read_u64(j["dim"], "objective.dim");
    bool known = false;
    for (const auto& n : synthetic_names()) known = known || n == b.name;
    if (!known) {
      throw ManifestError("unknown builtin objective '" + b.name +
                          "'; valid: sphere, branin, rastrigin");
    }
    if (b.dim == 0) throw ManifestError("objective.dim must be >= 1");
    if (b.name == "branin" && b.dim != 2) {
      throw ManifestError("branin is two-dimensional");
    }
    return b;
  }
  if (j.contains("command")) {
    only_keys(j, {"command", "timeout_ms"}, "objective");
    CommandObjective c;
    if (!j["command"].is_array() || j["command"].empty()) {
      throw ManifestError("objective.command must be a non-empty array");
    }
    for (const auto& a : j["command"]) {
      c.argv.push_back(read_string(a, "objective.command entries"));
    }
    if (j.contains("timeout_ms")) {
      c.timeout_ms = static_cast<int>(read_u64(j["timeout_ms"], "timeout_ms"));
    }
    return c;
  }
  only_keys(j, {"csv"}, "objective");
  const Json& c = j["csv"];
  if (!c.is_object()) throw ManifestError("objective.csv must be an object");
  only_keys(c,
            {"path", "target", "categorical", "model", "metric", "folds",
             "train_ratio", "shuffle", "split_seed", "cv_seed"},
            "objective.csv");
  for (const char* key : {"path", "target", "model"}) {
    if (!c.contains(key)) {
      throw ManifestError(std::string("objective.csv needs '") + key + "'");
    }
  }
  CsvObjective o;
  o.path = read_string(c["path"], "csv.path");
  if (o.path.is_relative()) o.path = base / o.path;
  o.csv.target = read_string(c["target"], "csv.target");
  if (c.contains("categorical")) {
    if (!c["categorical"].is_array()) {
      throw ManifestError("csv.categorical must be an array");
    }
    for (const auto& col : c["categorical"]) {
      o.csv.categorical.push_back(read_string(col, "csv.categorical entries"));
    }
  }
  try {
    o.model = parse_model_kind(read_string(c["model"], "csv.model"));
    o.metric = c.contains("metric")
                   ? parse_metric(read_string(c["metric"], "csv.metric"))
                   : (o.model == ModelKind::kRidge ? Metric::kRmse : Metric::kKappa);
    check_model_metric(o.model, o.metric);
  } catch (const InvalidArgument& e) {
    throw ManifestError(e.what());
  }
  if (c.contains("folds")) o.folds = read_u64(c["folds"], "csv.folds");
  if (o.folds < 2) throw ManifestError("csv.folds must be >= 2");
  if (c.contains("train_ratio")) {
    if (!c["train_ratio"].is_number()) {
      throw ManifestError("csv.train_ratio must be a number");
    }
    o.csv.train_ratio = c["train_ratio"].get<double>();
  }
  if (!(o.csv.train_ratio > 0.0 && o.csv.train_ratio < 1.0)) {
    throw ManifestError("csv.train_ratio must lie in (0, 1)");
  }
  if (c.contains("shuffle")) {
    if (!c["shuffle"].is_boolean()) throw ManifestError("csv.shuffle must be boolean");
    o.csv.shuffle = c["shuffle"].get<bool>();
  }
  if (c.contains("split_seed")) o.csv.seed = read_u64(c["split_seed"], "csv.split_seed");
  if (c.contains("cv_seed")) o.cv_seed = read_u64(c["cv_seed"], "csv.cv_seed");
  return o;
}

NamedSampler parse_sampler(const Json& j) {
  NamedSampler s;
  try {
    s.config = sampler_from_json(j);
  } catch (const InvalidArgument& e) {
    throw ManifestError(e.what());
  }
  s.name = j.contains("name") ? read_string(j["name"], "sampler.name")
                              : std::string(sampler_kind(s.config));
  if (s.name.empty() ||
      s.name.find_first_of("/\\,\"\n") != std::string::npos) {
    throw ManifestError("sampler name '" + s.name +
                        "' must be non-empty without / \\ , or quotes");
  }
  return s;
}

}  // namespace

RunManifest parse_manifest(const Json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ManifestError("manifest must be a JSON object");
  only_keys(j,
            {"space", "objective", "sampler", "samplers", "budget", "seed",
             "seeds", "direction", "output", "record_wall_time", "jobs"},
            "manifest");
  RunManifest m;
  if (!j.contains("objective")) throw ManifestError("manifest needs 'objective'");
  m.objective = parse_objective(j["objective"], base_dir);

  if (j.contains("space")) {
    try {
      if (j["space"].is_string()) {
        m.space = preset_space(j["space"].get<std::string>());
      } else {
        m.space = space_from_json(j["space"]);
      }
    } catch (const InvalidArgument& e) {
      throw ManifestError(std::string("space: ") + e.what());
    }
  } else if (const auto* b = std::get_if<BuiltinObjective>(&m.objective)) {
    m.space = synthetic_space(b->name, b->dim);
  } else if (const auto* c = std::get_if<CsvObjective>(&m.objective)) {
    m.space = preset_space(preset_for(c->model));
  } else {
    throw ManifestError("a command objective needs an explicit 'space'");
  }
  if (const auto* b = std::get_if<BuiltinObjective>(&m.objective)) {
    for (const auto& [name, dist] : m.space.entries()) {
      if (dist.is_categorical()) {
        throw ManifestError("builtin objectives need numeric parameters");
      }
    }
    if (b->name == "branin" && m.space.size() != 2) {
      throw ManifestError("branin needs a two-dimensional space");
    }
  }
  if (const auto* c = std::get_if<CsvObjective>(&m.objective)) {
    const std::string needed = c->model == ModelKind::kRidge ? "alpha" : "C";
    const Distribution* d = m.space.find(needed);
    if (d == nullptr || d->is_categorical()) {
      throw ManifestError("space must provide numeric '" + needed + "' for " +
                          std::string(to_string(c->model)));
    }
  }

  if (j.contains("sampler") == j.contains("samplers")) {
    throw ManifestError("manifest needs exactly one of 'sampler', 'samplers'");
  }
  if (j.contains("sampler")) {
    m.samplers.push_back(parse_sampler(j["sampler"]));
  } else {
    if (!j["samplers"].is_array() || j["samplers"].empty()) {
      throw ManifestError("'samplers' must be a non-empty array");
    }
    std::set<std::string> names;
    for (const auto& s : j["samplers"]) {
      m.samplers.push_back(parse_sampler(s));
      if (!names.insert(m.samplers.back().name).second) {
        throw ManifestError("duplicate sampler name '" + m.samplers.back().name +
                            "'; set distinct 'name' fields");
      }
    }
  }

  if (j.contains("budget")) m.budget = read_u64(j["budget"], "budget");
  if (m.budget < 1) throw ManifestError("budget must be >= 1");

  if (j.contains("seed") && j.contains("seeds")) {
    throw ManifestError("give either 'seed' or 'seeds', not both");
  }
  if (j.contains("seed")) {
    m.seeds.push_back(read_u64(j["seed"], "seed"));
  } else if (j.contains("seeds")) {
    if (!j["seeds"].is_array()) throw ManifestError("'seeds' must be an array");
    for (const auto& s : j["seeds"]) m.seeds.push_back(read_u64(s, "seeds entries"));
  } else {
    m.seeds.push_back(0);
  }
  if (m.seeds.empty()) throw ManifestError("'seeds' must be non-empty");
  if (std::set<std::uint64_t>(m.seeds.begin(), m.seeds.end()).size() !=
      m.seeds.size()) {
    throw ManifestError("'seeds' contains duplicates");
  }

  std::optional<Direction> natural;
  if (const auto* c = std::get_if<CsvObjective>(&m.objective)) {
    natural = metric_direction(c->metric);
  } else if (std::holds_alternative<BuiltinObjective>(m.objective)) {
    natural = Direction::kMinimize;
  }
  if (j.contains("direction")) {
    try {
      m.direction = parse_direction(read_string(j["direction"], "direction"));
    } catch (const InvalidArgument& e) {
      throw ManifestError(e.what());
    }
    if (natural && *natural != m.direction) {
      throw ManifestError("direction '" + std::string(to_string(m.direction)) +
                          "' contradicts the objective, which is " +
                          std::string(to_string(*natural)) + "d");
    }
  } else {
    m.direction = natural.value_or(Direction::kMinimize);
  }

  if (j.contains("output")) m.output = read_string(j["output"], "output");
  if (j.contains("record_wall_time")) {
    if (!j["record_wall_time"].is_boolean()) {
      throw ManifestError("record_wall_time must be boolean");
    }
    m.record_wall_time = j["record_wall_time"].get<bool>();
  }
  if (j.contains("jobs")) m.jobs = read_u64(j["jobs"], "jobs");
  if (m.jobs < 1) throw ManifestError("jobs must be >= 1");
  return m;
}

RunManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot read manifest '" + path.string() + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ManifestError("manifest is not valid JSON: " + std::string(e.what()));
  }
  return parse_manifest(j, path.parent_path());
}

}  // namespace tunebench
