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
#ifndef TUNEBENCH_TPE_H_
#define TUNEBENCH_TPE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "tunebench/history.h"
#include "tunebench/rng.h"
#include "tunebench/search_space.h"

namespace tunebench {

struct TpeConfig {
  // Fraction of observations assigned to the good density l(x).
  double gamma = 0.25;
  // Completed trials drawn at random before the density model kicks in.
  std::size_t n_startup = 10;
  // Draws from l(x) scored per suggestion.
  std::size_t n_candidates = 24;
  // Lower bound on kernel width as a fraction of the dimension's range.
  double bandwidth_floor = 0.01;

  // Throws InvalidArgument when an invariant is violated.
  void validate() const;
  friend bool operator==(const TpeConfig&, const TpeConfig&) = default;
};

// Observations partitioned at the gamma quantile of the scores.
struct TpeSplit {
  std::vector<ParamPoint> below;  // the good group, drives l(x)
  std::vector<ParamPoint> above;  // everything else, drives g(x)
  std::vector<std::uint64_t> below_ordinals;
  std::vector<std::uint64_t> above_ordinals;
  double y_star = 0.0;  // worst score inside "below", in caller units
};

// Ranks completed trials best-first (ties by lower ordinal) and puts the
// first max(1, ceil(gamma * n)) of them below, keeping at least one above.
// Throws InvalidArgument with fewer than two completed trials.
TpeSplit tpe_split(const History& history, double gamma, Direction direction);

// Gaussian kernels plus a uniform prior component over one real or
// integer dimension. Each kernel carries (1 - prior_weight) / n of the mass.
struct NumericMixture {
  std::vector<double> centers;
  std::vector<double> bandwidths;
  double prior_weight = 0.0;
};

// Smoothed choice frequencies, aligned with the distribution's choices.
struct CategoricalMixture {
  std::vector<double> weights;
};

using DimensionMixture = std::variant<NumericMixture, CategoricalMixture>;

// Per-dimension product density. One instance represents l(x), another g(x).
struct ParzenEstimator {
  SearchSpace space;
  std::vector<DimensionMixture> dims;  // aligned with space entries
};

// Width of a numeric dimension as seen by the estimator: high - low for
// reals and high - low + 1 for integers (each integer owns a unit cell).
double numeric_span(const Distribution& dist);

// One kernel per observation centred on it, bandwidth
// max(nearest-neighbour distance, bandwidth_floor * span) and a prior of
// weight 1 / (n + 1). Categorical dimensions get (count + 1) / (n + k).
// Throws InvalidArgument on an empty observation list.
ParzenEstimator parzen_fit(const std::vector<ParamPoint>& points,
                           const SearchSpace& space, const TpeConfig& config);

// Density of point under est; throws InvalidArgument for an out-of-space
// point.
double parzen_pdf(const ParzenEstimator& est, const ParamPoint& point);

// Density of one dimension at a value inside its distribution.
double mixture_pdf(const Distribution& dist, const DimensionMixture& mix,
                   const ParamValue& value);

// Draw from est. Kernel draws are clipped to the bounds; integer draws are
// rounded and then clamped.
ParamPoint parzen_sample(const ParzenEstimator& est, Rng& rng);

// Expected improvement up to a positive factor:
// 1 / (gamma + (g / l) * (1 - gamma)). Throws on non-positive densities.
double ei_ratio_score(double l_density, double g_density, double gamma);

// Everything tpe_suggest looked at, for logging and independent checks.
struct TpeDecision {
  ParamPoint point;
  bool startup = true;
  std::vector<ParamPoint> candidates;
  std::vector<double> l_density;
  std::vector<double> g_density;
  std::vector<double> ei;
  std::size_t chosen = 0;
};

// Random until n_startup trials have completed; afterwards draws
// n_candidates points from l and returns the one with the largest EI.
// Exact EI ties go to the larger l/g, then to the earliest draw.
TpeDecision tpe_decide(const SearchSpace& space, const History& history,
                       const TpeConfig& config, Direction direction, Rng& rng);

ParamPoint tpe_suggest(const SearchSpace& space, const History& history,
                       const TpeConfig& config, Direction direction, Rng& rng);

}  // namespace tunebench

#endif  // TUNEBENCH_TPE_H_
