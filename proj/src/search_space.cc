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
#include "tunebench/search_space.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>

#include "tunebench/error.h"

namespace tunebench {
namespace {

std::uint64_t support_size(const IntegerUniform& d) {
  return static_cast<std::uint64_t>(d.high) - static_cast<std::uint64_t>(d.low) +
         1;
}

}  // namespace

Distribution Distribution::Uniform(double low, double high) {
  if (!std::isfinite(low) || !std::isfinite(high) || !(low < high)) {
    throw InvalidArgument("uniform distribution needs finite low < high");
  }
  return Distribution(ContinuousUniform{low, high});
}

Distribution Distribution::UniformInt(std::int64_t low, std::int64_t high) {
  if (low > high) {
    throw InvalidArgument("integer distribution needs low <= high");
  }
  return Distribution(IntegerUniform{low, high});
}

Distribution Distribution::Choice(std::vector<std::string> choices) {
  if (choices.empty()) {
    throw InvalidArgument("categorical distribution needs at least one choice");
  }
  std::set<std::string> seen;
  for (const auto& c : choices) {
    if (!seen.insert(c).second) {
      throw InvalidArgument("duplicate categorical choice '" + c + "'");
    }
  }
  return Distribution(Categorical{std::move(choices)});
}

Distribution Distribution::FromVariant(Variant v) {
  return std::visit(
      [](auto&& d) -> Distribution {
        using T = std::decay_t<decltype(d)>;
        if constexpr (std::is_same_v<T, ContinuousUniform>) {
          return Uniform(d.low, d.high);
        } else if constexpr (std::is_same_v<T, IntegerUniform>) {
          return UniformInt(d.low, d.high);
        } else {
          return Choice(std::move(d.choices));
        }
      },
      std::move(v));
}

std::string to_string(const ParamValue& v) {
  if (const auto* d = std::get_if<double>(&v)) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), *d);
    return std::string(buf, res.ptr);
  }
  if (const auto* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

ParamPoint::ParamPoint(std::initializer_list<Entry> entries) {
  for (const auto& [name, value] : entries) set(name, value);
}

void ParamPoint::set(std::string name, ParamValue value) {
  for (auto& entry : entries_) {
    if (entry.first == name) {
      entry.second = std::move(value);
      return;
    }
  }
  entries_.emplace_back(std::move(name), std::move(value));
}

const ParamValue* ParamPoint::find(std::string_view name) const {
  for (const auto& entry : entries_) {
    if (entry.first == name) return &entry.second;
  }
  return nullptr;
}

const ParamValue& ParamPoint::at(std::string_view name) const {
  const ParamValue* v = find(name);
  if (v == nullptr) {
    throw InvalidArgument("point has no parameter '" + std::string(name) + "'");
  }
  return *v;
}

double ParamPoint::real(std::string_view name) const {
  const ParamValue& v = at(name);
  if (const auto* d = std::get_if<double>(&v)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&v)) {
    return static_cast<double>(*i);
  }
  throw InvalidArgument("parameter '" + std::string(name) + "' is not numeric");
}

std::int64_t ParamPoint::integer(std::string_view name) const {
  const ParamValue& v = at(name);
  if (const auto* i = std::get_if<std::int64_t>(&v)) return *i;
  throw InvalidArgument("parameter '" + std::string(name) +
                        "' is not an integer");
}

const std::string& ParamPoint::label(std::string_view name) const {
  const ParamValue& v = at(name);
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  throw InvalidArgument("parameter '" + std::string(name) +
                        "' is not categorical");
}

SearchSpace::SearchSpace(std::initializer_list<Entry> entries) {
  for (const auto& [name, dist] : entries) add(name, dist);
}

SearchSpace& SearchSpace::add(std::string name, Distribution dist) {
  if (name.empty()) throw InvalidArgument("parameter name must be non-empty");
  if (find(name) != nullptr) {
    throw InvalidArgument("duplicate parameter name '" + name + "'");
  }
  entries_.emplace_back(std::move(name), std::move(dist));
  return *this;
}

const Distribution* SearchSpace::find(std::string_view name) const {
  for (const auto& entry : entries_) {
    if (entry.first == name) return &entry.second;
  }
  return nullptr;
}

bool SearchSpace::contains(const ParamPoint& point) const {
  if (point.size() != entries_.size()) return false;
  for (const auto& [name, dist] : entries_) {
    const ParamValue* v = point.find(name);
    if (v == nullptr || !tunebench::contains(dist, *v)) return false;
  }
  return true;
}

ParamPoint SearchSpace::canonicalize(const ParamPoint& point) const {
  ParamPoint out;
  for (const auto& [name, dist] : entries_) {
    const ParamValue* v = point.find(name);
    if (v == nullptr) {
      throw InvalidArgument("point is missing parameter '" + name + "'");
    }
    if (!tunebench::contains(dist, *v)) {
      throw InvalidArgument("value " + to_string(*v) + " of parameter '" +
                            name + "' is outside its distribution");
    }
    out.set(name, *v);
  }
  if (point.size() != entries_.size()) {
    for (const auto& [name, value] : point.entries()) {
      if (find(name) == nullptr) {
        throw InvalidArgument("point has unknown parameter '" + name + "'");
      }
    }
  }
  return out;
}

bool contains(const Distribution& dist, const ParamValue& v) {
  if (dist.is_continuous()) {
    const auto* x = std::get_if<double>(&v);
    const auto& d = dist.continuous();
    return x != nullptr && *x >= d.low && *x <= d.high;
  }
  if (dist.is_integer()) {
    const auto* x = std::get_if<std::int64_t>(&v);
    const auto& d = dist.integer();
    return x != nullptr && *x >= d.low && *x <= d.high;
  }
  const auto* x = std::get_if<std::string>(&v);
  if (x == nullptr) return false;
  const auto& choices = dist.categorical().choices;
  return std::find(choices.begin(), choices.end(), *x) != choices.end();
}

ParamValue value_from_unit(const Distribution& dist, double u) {
  if (dist.is_continuous()) {
    const auto& d = dist.continuous();
    return std::min(d.high, d.low + u * (d.high - d.low));
  }
  if (dist.is_integer()) {
    const auto& d = dist.integer();
    const std::uint64_t n = support_size(d);
    // n == 0 only for the full int64 range, where the wrap is intended.
    auto k = static_cast<std::uint64_t>(u * static_cast<double>(n));
    if (n != 0 && k >= n) k = n - 1;
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(d.low) + k);
  }
  const auto& choices = dist.categorical().choices;
  auto k = static_cast<std::size_t>(u * static_cast<double>(choices.size()));
  return choices[std::min(k, choices.size() - 1)];
}

ParamValue sample_param(const Distribution& dist, Rng& rng) {
  return value_from_unit(dist, rng.uniform());
}

std::vector<ParamValue> grid_points(const Distribution& dist,
                                    std::size_t resolution) {
  if (resolution == 0) throw InvalidArgument("grid resolution must be >= 1");
  std::vector<ParamValue> out;
  if (dist.is_categorical()) {
    const auto& choices = dist.categorical().choices;
    if (resolution == 1) return {choices.front()};
    // Declaration order; choices are labels, not an ordered scale.
    out.assign(choices.begin(), choices.end());
    return out;
  }
  if (dist.is_continuous()) {
    const auto& d = dist.continuous();
    if (resolution == 1) return {d.low + 0.5 * (d.high - d.low)};
    const double steps = static_cast<double>(resolution - 1);
    for (std::size_t i = 0; i + 1 < resolution; ++i) {
      out.emplace_back(d.low + (d.high - d.low) * (static_cast<double>(i) / steps));
    }
    out.emplace_back(d.high);
    return out;
  }
  const auto& d = dist.integer();
  if (resolution == 1) return {d.low};
  const std::uint64_t n = support_size(d);
  const std::uint64_t m =
      (n == 0) ? resolution : std::min<std::uint64_t>(resolution, n);
  if (m == 1) return {d.low};
  const __int128 span = static_cast<__int128>(d.high) - d.low;
  const __int128 denom = static_cast<__int128>(m - 1);
  for (std::uint64_t i = 0; i < m; ++i) {
    const __int128 offset = (static_cast<__int128>(i) * span + denom / 2) / denom;
    out.emplace_back(static_cast<std::int64_t>(d.low + offset));
  }
  return out;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "ridge", "logistic", "adaboost", "random_forest",
      "gbm",   "xgboost",  "lightgbm"};
  return names;
}

SearchSpace preset_space(std::string_view name) {
  const auto boosted = [] {
    return SearchSpace{
        {"learning_rate", Distribution::Uniform(0.00001, 1.0)},
        {"max_depth", Distribution::UniformInt(1, 7)},
        {"n_estimators", Distribution::UniformInt(1, 1000)},
    };
  };
  if (name == "ridge") {
    return SearchSpace{{"alpha", Distribution::Uniform(0.1, 1000.0)}};
  }
  if (name == "logistic") {
    return SearchSpace{{"C", Distribution::Uniform(0.00001, 1.0)}};
  }
  if (name == "random_forest") {
    return SearchSpace{
        {"max_features", Distribution::Uniform(0.0, 1.0)},
        {"n_estimators", Distribution::UniformInt(1, 1000)},
    };
  }
  if (name == "adaboost" || name == "gbm" || name == "xgboost" ||
      name == "lightgbm") {
    return boosted();
  }
  std::string valid;
  for (const auto& n : preset_names()) {
    if (!valid.empty()) valid += ", ";
    valid += n;
  }
  throw InvalidArgument("unknown preset '" + std::string(name) +
                        "'; valid presets: " + valid);
}

}  // namespace tunebench
