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
#ifndef TUNEBENCH_SEARCH_SPACE_H_
#define TUNEBENCH_SEARCH_SPACE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tunebench/rng.h"

namespace tunebench {

// Real interval [low, high]. Both bounds are part of the support.
struct ContinuousUniform {
  double low = 0.0;
  double high = 1.0;
  friend bool operator==(const ContinuousUniform&,
                         const ContinuousUniform&) = default;
};

// Integers low..high, both inclusive.
struct IntegerUniform {
  std::int64_t low = 0;
  std::int64_t high = 0;
  friend bool operator==(const IntegerUniform&, const IntegerUniform&) = default;
};

struct Categorical {
  std::vector<std::string> choices;
  friend bool operator==(const Categorical&, const Categorical&) = default;
};

// A validated parameter domain. Construct through the named factories; the
// invariants of each variant are checked there and never again.
class Distribution {
 public:
  using Variant = std::variant<ContinuousUniform, IntegerUniform, Categorical>;

  static Distribution Uniform(double low, double high);
  static Distribution UniformInt(std::int64_t low, std::int64_t high);
  static Distribution Choice(std::vector<std::string> choices);
  static Distribution FromVariant(Variant v);

  const Variant& variant() const { return value_; }

  bool is_continuous() const {
    return std::holds_alternative<ContinuousUniform>(value_);
  }
  bool is_integer() const {
    return std::holds_alternative<IntegerUniform>(value_);
  }
  bool is_categorical() const {
    return std::holds_alternative<Categorical>(value_);
  }
  const ContinuousUniform& continuous() const {
    return std::get<ContinuousUniform>(value_);
  }
  const IntegerUniform& integer() const {
    return std::get<IntegerUniform>(value_);
  }
  const Categorical& categorical() const {
    return std::get<Categorical>(value_);
  }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  explicit Distribution(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

using ParamValue = std::variant<double, std::int64_t, std::string>;

std::string to_string(const ParamValue& v);

// Name -> value assignment, kept in insertion order. Points produced by the
// samplers are always in the declaration order of their space.
class ParamPoint {
 public:
  using Entry = std::pair<std::string, ParamValue>;

  ParamPoint() = default;
  ParamPoint(std::initializer_list<Entry> entries);

  // Replaces an existing entry or appends a new one.
  void set(std::string name, ParamValue value);
  const ParamValue& at(std::string_view name) const;
  const ParamValue* find(std::string_view name) const;

  double real(std::string_view name) const;
  std::int64_t integer(std::string_view name) const;
  const std::string& label(std::string_view name) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  const ParamValue& value(std::size_t i) const { return entries_[i].second; }
  ParamValue& value(std::size_t i) { return entries_[i].second; }

  friend bool operator==(const ParamPoint&, const ParamPoint&) = default;

 private:
  std::vector<Entry> entries_;
};

// Ordered name -> Distribution map. Declaration order is iteration order.
class SearchSpace {
 public:
  using Entry = std::pair<std::string, Distribution>;

  SearchSpace() = default;
  SearchSpace(std::initializer_list<Entry> entries);

  // Throws InvalidArgument on an empty or duplicate name.
  SearchSpace& add(std::string name, Distribution dist);

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }
  const std::string& name(std::size_t i) const { return entries_[i].first; }
  const Distribution& dist(std::size_t i) const { return entries_[i].second; }
  const Distribution* find(std::string_view name) const;

  // Key sets equal and every value inside its distribution.
  bool contains(const ParamPoint& point) const;

  // Returns point reordered into declaration order; throws InvalidArgument
  // naming the first offending parameter when contains() would be false.
  ParamPoint canonicalize(const ParamPoint& point) const;

  friend bool operator==(const SearchSpace&, const SearchSpace&) = default;

 private:
  std::vector<Entry> entries_;
};

bool contains(const Distribution& dist, const ParamValue& v);

// Maps a unit uniform u in [0, 1) onto the support: low + u * (high - low)
// for reals, low + floor(u * count) for integers and choices.
ParamValue value_from_unit(const Distribution& dist, double u);

ParamValue sample_param(const Distribution& dist, Rng& rng);

// Sorted, duplicate-free grid over the support. Throws on resolution 0.
std::vector<ParamValue> grid_points(const Distribution& dist,
                                    std::size_t resolution);

// Names accepted by preset_space().
const std::vector<std::string>& preset_names();

// The published model search spaces. Throws InvalidArgument listing the
// valid names for anything else.
SearchSpace preset_space(std::string_view name);

}  // namespace tunebench

#endif  // TUNEBENCH_SEARCH_SPACE_H_
