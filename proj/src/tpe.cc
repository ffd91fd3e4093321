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
#include "tunebench/tpe.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "tunebench/error.h"
#include "tunebench/samplers.h"

namespace tunebench {
namespace {

double as_real(const ParamValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  return static_cast<double>(std::get<std::int64_t>(v));
}

double normal_pdf(double x, double center, double bandwidth) {
  const double z = (x - center) / bandwidth;
  return std::exp(-0.5 * z * z) /
         (bandwidth * std::sqrt(2.0 * std::numbers::pi));
}

NumericMixture fit_numeric(std::vector<double> values, double span,
                           double floor_fraction) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  const double floor_width = floor_fraction * span;
  NumericMixture mix;
  mix.centers = values;
  mix.bandwidths.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double spacing = span;
    if (n > 1) {
      spacing = std::numeric_limits<double>::infinity();
      if (i > 0) spacing = std::min(spacing, values[i] - values[i - 1]);
      if (i + 1 < n) spacing = std::min(spacing, values[i + 1] - values[i]);
    }
    mix.bandwidths[i] = std::max(spacing, floor_width);
  }
  mix.prior_weight = 1.0 / static_cast<double>(n + 1);
  return mix;
}

std::size_t pick_index(const std::vector<double>& weights, double u) {
  double acc = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    acc += weights[i];
    if (u < acc) return i;
  }
  return weights.size() - 1;
}

ParamValue sample_numeric(const Distribution& dist, const NumericMixture& mix,
                          Rng& rng) {
  const double u = rng.uniform();
  if (mix.centers.empty() || u < mix.prior_weight) {
    return sample_param(dist, rng);
  }
  const double kernel_mass = (1.0 - mix.prior_weight) /
                             static_cast<double>(mix.centers.size());
  auto k = static_cast<std::size_t>((u - mix.prior_weight) / kernel_mass);
  k = std::min(k, mix.centers.size() - 1);
  const double x = mix.centers[k] + mix.bandwidths[k] * rng.normal();
  if (dist.is_continuous()) {
    const auto& d = dist.continuous();
    return std::clamp(x, d.low, d.high);
  }
  const auto& d = dist.integer();
  const double lo = static_cast<double>(d.low);
  const double hi = static_cast<double>(d.high);
  return static_cast<std::int64_t>(std::clamp(std::round(x), lo, hi));
}

}  // namespace

void TpeConfig::validate() const {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw InvalidArgument("tpe gamma must lie in (0, 1)");
  }
  if (n_startup < 2) throw InvalidArgument("tpe n_startup must be >= 2");
  if (n_candidates < 1) throw InvalidArgument("tpe n_candidates must be >= 1");
  if (!(bandwidth_floor > 0.0) || !std::isfinite(bandwidth_floor)) {
    throw InvalidArgument("tpe bandwidth_floor must be > 0");
  }
}

TpeSplit tpe_split(const History& history, double gamma, Direction direction) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw InvalidArgument("tpe gamma must lie in (0, 1)");
  }
  std::vector<TrialRecord> done = history.completed();
  const std::size_t n = done.size();
  if (n < 2) {
    throw InvalidArgument("tpe split needs at least two completed trials");
  }
  std::stable_sort(done.begin(), done.end(),
                   [direction](const TrialRecord& a, const TrialRecord& b) {
                     return canonical_score(*a.score, direction) <
                            canonical_score(*b.score, direction);
                   });
  auto n_below = static_cast<std::size_t>(
      std::ceil(gamma * static_cast<double>(n)));
  n_below = std::clamp<std::size_t>(n_below, 1, n - 1);

  TpeSplit split;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < n_below) {
      split.below.push_back(done[i].point);
      split.below_ordinals.push_back(done[i].ordinal);
    } else {
      split.above.push_back(done[i].point);
      split.above_ordinals.push_back(done[i].ordinal);
    }
  }
  split.y_star = *done[n_below - 1].score;
  return split;
}

double numeric_span(const Distribution& dist) {
  if (dist.is_continuous()) {
    return dist.continuous().high - dist.continuous().low;
  }
  const auto& d = dist.integer();
  return static_cast<double>(d.high) - static_cast<double>(d.low) + 1.0;
}

ParzenEstimator parzen_fit(const std::vector<ParamPoint>& points,
                           const SearchSpace& space, const TpeConfig& config) {
  if (points.empty()) {
    throw InvalidArgument("parzen_fit needs at least one observation");
  }
  ParzenEstimator est;
  est.space = space;
  const double n = static_cast<double>(points.size());
  for (const auto& [name, dist] : space.entries()) {
    if (dist.is_categorical()) {
      const auto& choices = dist.categorical().choices;
      std::vector<double> counts(choices.size(), 1.0);
      for (const auto& p : points) {
        const auto& label = std::get<std::string>(p.at(name));
        const auto it = std::find(choices.begin(), choices.end(), label);
        if (it == choices.end()) {
          throw InvalidArgument("observation outside space in '" + name + "'");
        }
        counts[static_cast<std::size_t>(it - choices.begin())] += 1.0;
      }
      const double total = n + static_cast<double>(choices.size());
      for (double& c : counts) c /= total;
      est.dims.emplace_back(CategoricalMixture{std::move(counts)});
      continue;
    }
    std::vector<double> values;
    values.reserve(points.size());
    for (const auto& p : points) {
      const ParamValue& v = p.at(name);
      if (!contains(dist, v)) {
        throw InvalidArgument("observation outside space in '" + name + "'");
      }
      values.push_back(as_real(v));
    }
    est.dims.emplace_back(
        fit_numeric(std::move(values), numeric_span(dist), config.bandwidth_floor));
  }
  return est;
}

double mixture_pdf(const Distribution& dist, const DimensionMixture& mix,
                   const ParamValue& value) {
  if (const auto* cat = std::get_if<CategoricalMixture>(&mix)) {
    const auto& choices = dist.categorical().choices;
    const auto& label = std::get<std::string>(value);
    const auto it = std::find(choices.begin(), choices.end(), label);
    return cat->weights[static_cast<std::size_t>(it - choices.begin())];
  }
  const auto& num = std::get<NumericMixture>(mix);
  const double x = as_real(value);
  double density = num.prior_weight / numeric_span(dist);
  if (!num.centers.empty()) {
    const double kernel_mass =
        (1.0 - num.prior_weight) / static_cast<double>(num.centers.size());
    double kernels = 0.0;
    for (std::size_t i = 0; i < num.centers.size(); ++i) {
      kernels += normal_pdf(x, num.centers[i], num.bandwidths[i]);
    }
    density += kernel_mass * kernels;
  }
  return density;
}

double parzen_pdf(const ParzenEstimator& est, const ParamPoint& point) {
  if (!est.space.contains(point)) {
    throw InvalidArgument("parzen_pdf: point is outside the estimator's space");
  }
  double density = 1.0;
  for (std::size_t d = 0; d < est.space.size(); ++d) {
    density *= mixture_pdf(est.space.dist(d), est.dims[d],
                           point.at(est.space.name(d)));
  }
  return density;
}

ParamPoint parzen_sample(const ParzenEstimator& est, Rng& rng) {
  ParamPoint p;
  for (std::size_t d = 0; d < est.space.size(); ++d) {
    const Distribution& dist = est.space.dist(d);
    if (const auto* cat = std::get_if<CategoricalMixture>(&est.dims[d])) {
      const auto& choices = dist.categorical().choices;
      p.set(est.space.name(d), choices[pick_index(cat->weights, rng.uniform())]);
    } else {
      p.set(est.space.name(d),
            sample_numeric(dist, std::get<NumericMixture>(est.dims[d]), rng));
    }
  }
  return p;
}

double ei_ratio_score(double l_density, double g_density, double gamma) {
  if (!(l_density > 0.0) || !(g_density > 0.0)) {
    throw InvalidArgument("ei_ratio_score needs strictly positive densities");
  }
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw InvalidArgument("tpe gamma must lie in (0, 1)");
  }
  return 1.0 / (gamma + (g_density / l_density) * (1.0 - gamma));
}

TpeDecision tpe_decide(const SearchSpace& space, const History& history,
                       const TpeConfig& config, Direction direction, Rng& rng) {
  config.validate();
  TpeDecision decision;
  std::size_t n_done = 0;
  for (const auto& r : history) n_done += r.ok() ? 1 : 0;
  if (n_done < config.n_startup) {
    decision.point = random_suggest(space, rng);
    return decision;
  }
  decision.startup = false;
  const TpeSplit split = tpe_split(history, config.gamma, direction);
  const ParzenEstimator good = parzen_fit(split.below, space, config);
  const ParzenEstimator bad = parzen_fit(split.above, space, config);

  double best_ei = -1.0;
  double best_ratio = -1.0;
  for (std::size_t i = 0; i < config.n_candidates; ++i) {
    ParamPoint candidate = parzen_sample(good, rng);
    const double l = parzen_pdf(good, candidate);
    const double g = parzen_pdf(bad, candidate);
    const double ei = ei_ratio_score(l, g, config.gamma);
    const double ratio = l / g;
    if (ei > best_ei || (ei == best_ei && ratio > best_ratio)) {
      best_ei = ei;
      best_ratio = ratio;
      decision.chosen = i;
    }
    decision.candidates.push_back(std::move(candidate));
    decision.l_density.push_back(l);
    decision.g_density.push_back(g);
    decision.ei.push_back(ei);
  }
  decision.point = decision.candidates[decision.chosen];
  return decision;
}

ParamPoint tpe_suggest(const SearchSpace& space, const History& history,
                       const TpeConfig& config, Direction direction, Rng& rng) {
  return tpe_decide(space, history, config, direction, rng).point;
}

}  // namespace tunebench
