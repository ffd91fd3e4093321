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
#include "tunebench/synthetic.h"

#include <cmath>
#include <numbers>

#include "tunebench/error.h"

namespace tunebench {
namespace {

std::vector<double> coordinates(const ParamPoint& point) {
  std::vector<double> x;
  x.reserve(point.size());
  for (const auto& [name, value] : point.entries()) {
    if (const auto* d = std::get_if<double>(&value)) {
      x.push_back(*d);
    } else if (const auto* i = std::get_if<std::int64_t>(&value)) {
      x.push_back(static_cast<double>(*i));
    } else {
      throw InvalidArgument("synthetic objectives need numeric parameters; '" +
                            name + "' is categorical");
    }
  }
  return x;
}

void check_name(std::string_view name) {
  for (const auto& n : synthetic_names()) {
    if (n == name) return;
  }
  throw InvalidArgument("unknown synthetic objective '" + std::string(name) +
                        "'; valid: sphere, branin, rastrigin");
}

}  // namespace

const std::vector<std::string>& synthetic_names() {
  static const std::vector<std::string> names = {"sphere", "branin", "rastrigin"};
  return names;
}

double synthetic_objective(std::string_view name, const ParamPoint& point) {
  check_name(name);
  const std::vector<double> x = coordinates(point);
  if (x.empty()) throw InvalidArgument("synthetic objective needs >= 1 dimension");
  if (name == "sphere") {
    double s = 0.0;
    for (const double v : x) s += v * v;
    return s;
  }
  if (name == "rastrigin") {
    double s = 10.0 * static_cast<double>(x.size());
    for (const double v : x) {
      s += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v);
    }
    return s;
  }
  if (x.size() != 2) {
    throw InvalidArgument("branin is two-dimensional; got " +
                          std::to_string(x.size()) + " values");
  }
  constexpr double pi = std::numbers::pi;
  const double b = 5.1 / (4.0 * pi * pi);
  const double c = 5.0 / pi;
  const double t = 1.0 / (8.0 * pi);
  const double q = x[1] - b * x[0] * x[0] + c * x[0] - 6.0;
  return q * q + 10.0 * (1.0 - t) * std::cos(x[0]) + 10.0;
}

SearchSpace synthetic_space(std::string_view name, std::size_t dim) {
  check_name(name);
  if (dim == 0) throw InvalidArgument("synthetic space needs dim >= 1");
  SearchSpace space;
  if (name == "branin") {
    if (dim != 2) throw InvalidArgument("branin is two-dimensional");
    space.add("x0", Distribution::Uniform(-5.0, 10.0));
    space.add("x1", Distribution::Uniform(0.0, 15.0));
    return space;
  }
  const double bound = name == "sphere" ? 2.0 : 5.12;
  for (std::size_t i = 0; i < dim; ++i) {
    space.add("x" + std::to_string(i), Distribution::Uniform(-bound, bound));
  }
  return space;
}

double synthetic_minimum(std::string_view name) {
  check_name(name);
  return name == "branin" ? 0.39788735772973816 : 0.0;
}

}  // namespace tunebench
