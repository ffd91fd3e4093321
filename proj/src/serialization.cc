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
#include "tunebench/serialization.h"

#include <charconv>
#include <cmath>
#include <set>

#include "tunebench/error.h"

namespace tunebench {
namespace {

void reject_unknown(const Json& j, const std::set<std::string>& known,
                    const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!known.contains(key)) {
      throw InvalidArgument("unknown field '" + key + "' in " + where);
    }
  }
}

double read_real(const Json& j, const std::string& what) {
  if (!j.is_number()) throw InvalidArgument(what + " must be a number");
  return j.get<double>();
}

std::int64_t read_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) {
    throw InvalidArgument(what + " must be an integer");
  }
  return j.get<std::int64_t>();
}

std::size_t read_count(const Json& j, const std::string& what) {
  if (!j.is_number_unsigned()) {
    throw InvalidArgument(what + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

std::string format_real(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

Json space_to_json(const SearchSpace& space) {
  Json out = Json::object();
  for (const auto& [name, dist] : space.entries()) {
    Json d = Json::object();
    if (dist.is_continuous()) {
      d["kind"] = "uniform";
      d["low"] = dist.continuous().low;
      d["high"] = dist.continuous().high;
    } else if (dist.is_integer()) {
      d["kind"] = "uniform_int";
      d["low"] = dist.integer().low;
      d["high"] = dist.integer().high;
    } else {
      d["kind"] = "categorical";
      d["choices"] = dist.categorical().choices;
    }
    out[name] = std::move(d);
  }
  return out;
}

SearchSpace space_from_json(const Json& j) {
  if (!j.is_object() || j.empty()) {
    throw InvalidArgument("space must be a non-empty object");
  }
  SearchSpace space;
  for (const auto& [name, d] : j.items()) {
    const std::string where = "parameter '" + name + "'";
    if (!d.is_object() || !d.contains("kind") || !d["kind"].is_string()) {
      throw InvalidArgument(where + " needs a string 'kind'");
    }
    const std::string kind = d["kind"].get<std::string>();
    if (kind == "uniform") {
      reject_unknown(d, {"kind", "low", "high"}, where);
      if (!d.contains("low") || !d.contains("high")) {
        throw InvalidArgument(where + " needs 'low' and 'high'");
      }
      space.add(name, Distribution::Uniform(read_real(d["low"], where + " low"),
                                            read_real(d["high"], where + " high")));
    } else if (kind == "uniform_int") {
      reject_unknown(d, {"kind", "low", "high"}, where);
      if (!d.contains("low") || !d.contains("high")) {
        throw InvalidArgument(where + " needs 'low' and 'high'");
      }
      space.add(name,
                Distribution::UniformInt(read_int(d["low"], where + " low"),
                                         read_int(d["high"], where + " high")));
    } else if (kind == "categorical") {
      reject_unknown(d, {"kind", "choices"}, where);
      if (!d.contains("choices") || !d["choices"].is_array()) {
        throw InvalidArgument(where + " needs a 'choices' array");
      }
      std::vector<std::string> choices;
      for (const auto& c : d["choices"]) {
        if (!c.is_string()) throw InvalidArgument(where + " choices must be strings");
        choices.push_back(c.get<std::string>());
      }
      space.add(name, Distribution::Choice(std::move(choices)));
    } else {
      throw InvalidArgument(where + " has unknown kind '" + kind + "'");
    }
  }
  return space;
}

Json value_to_json(const ParamValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return Json(*d);
  if (const auto* i = std::get_if<std::int64_t>(&v)) return Json(*i);
  return Json(std::get<std::string>(v));
}

Json point_to_json(const ParamPoint& point) {
  Json out = Json::object();
  for (const auto& [name, value] : point.entries()) {
    out[name] = value_to_json(value);
  }
  return out;
}

ParamPoint point_from_json(const Json& j, const SearchSpace& space) {
  if (!j.is_object()) throw InvalidArgument("params must be an object");
  ParamPoint p;
  for (const auto& [name, v] : j.items()) {
    const Distribution* dist = space.find(name);
    if (dist == nullptr) {
      throw InvalidArgument("unknown parameter '" + name + "'");
    }
    if (dist->is_continuous()) {
      p.set(name, read_real(v, "parameter '" + name + "'"));
    } else if (dist->is_integer()) {
      p.set(name, read_int(v, "parameter '" + name + "'"));
    } else {
      if (!v.is_string()) {
        throw InvalidArgument("parameter '" + name + "' must be a string");
      }
      p.set(name, v.get<std::string>());
    }
  }
  return space.canonicalize(p);
}

Json sampler_to_json(const SamplerConfig& config) {
  Json out = Json::object();
  out["kind"] = std::string(sampler_kind(config));
  if (const auto* g = std::get_if<GridConfig>(&config)) {
    out["resolution"] = g->resolution;
  } else if (const auto* t = std::get_if<TpeConfig>(&config)) {
    out["gamma"] = t->gamma;
    out["n_startup"] = t->n_startup;
    out["n_candidates"] = t->n_candidates;
    out["bandwidth_floor"] = t->bandwidth_floor;
  } else if (const auto* ga = std::get_if<GaConfig>(&config)) {
    out["pop_size"] = ga->pop_size;
    out["tournament_k"] = ga->tournament_k;
    out["p_crossover"] = ga->p_crossover;
    out["p_mutation"] = ga->p_mutation;
    out["elitism_count"] = ga->elitism_count;
    out["generations"] = ga->generations;
  }
  return out;
}

SamplerConfig sampler_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw InvalidArgument("sampler needs a string 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();
  const std::string where = "sampler '" + kind + "'";
  // "name" labels a sampler in comparisons and is ignored here.
  if (kind == "random") {
    reject_unknown(j, {"kind", "name"}, where);
    return RandomConfig{};
  }
  if (kind == "grid") {
    reject_unknown(j, {"kind", "name", "resolution"}, where);
    GridConfig g;
    if (j.contains("resolution")) {
      g.resolution = read_count(j["resolution"], "grid resolution");
    }
    if (g.resolution == 0) throw InvalidArgument("grid resolution must be >= 1");
    return g;
  }
  if (kind == "tpe") {
    reject_unknown(j, {"kind", "name", "gamma", "n_startup", "n_candidates",
                       "bandwidth_floor"},
                   where);
    TpeConfig t;
    if (j.contains("gamma")) t.gamma = read_real(j["gamma"], "tpe gamma");
    if (j.contains("n_startup")) {
      t.n_startup = read_count(j["n_startup"], "tpe n_startup");
    }
    if (j.contains("n_candidates")) {
      t.n_candidates = read_count(j["n_candidates"], "tpe n_candidates");
    }
    if (j.contains("bandwidth_floor")) {
      t.bandwidth_floor = read_real(j["bandwidth_floor"], "tpe bandwidth_floor");
    }
    t.validate();
    return t;
  }
  if (kind == "genetic") {
    reject_unknown(j, {"kind", "name", "pop_size", "tournament_k", "p_crossover",
                       "p_mutation", "elitism_count", "generations"},
                   where);
    GaConfig g;
    if (j.contains("pop_size")) g.pop_size = read_count(j["pop_size"], "pop_size");
    if (j.contains("tournament_k")) {
      g.tournament_k = read_count(j["tournament_k"], "tournament_k");
    }
    if (j.contains("p_crossover")) {
      g.p_crossover = read_real(j["p_crossover"], "p_crossover");
    }
    if (j.contains("p_mutation")) {
      g.p_mutation = read_real(j["p_mutation"], "p_mutation");
    }
    if (j.contains("elitism_count")) {
      g.elitism_count = read_count(j["elitism_count"], "elitism_count");
    }
    if (j.contains("generations")) {
      g.generations = read_count(j["generations"], "generations");
    }
    g.validate();
    return g;
  }
  throw InvalidArgument("unknown sampler kind '" + kind +
                        "'; valid kinds: random, grid, tpe, genetic");
}

}  // namespace tunebench
