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
#include "tunebench/genetic.h"

#include <algorithm>
#include <numeric>

#include "tunebench/error.h"
#include "tunebench/samplers.h"

namespace tunebench {

void GaConfig::validate() const {
  if (pop_size < 2) throw InvalidArgument("ga pop_size must be >= 2");
  if (tournament_k < 1 || tournament_k > pop_size) {
    throw InvalidArgument("ga tournament_k must lie in [1, pop_size]");
  }
  if (!(p_crossover >= 0.0 && p_crossover <= 1.0)) {
    throw InvalidArgument("ga p_crossover must lie in [0, 1]");
  }
  if (!(p_mutation >= 0.0 && p_mutation <= 1.0)) {
    throw InvalidArgument("ga p_mutation must lie in [0, 1]");
  }
  if (elitism_count >= pop_size) {
    throw InvalidArgument("ga elitism_count must be < pop_size");
  }
  if (generations < 1) throw InvalidArgument("ga generations must be >= 1");
}

Population ga_init(const SearchSpace& space, const GaConfig& config, Rng& rng) {
  config.validate();
  Population pop;
  pop.reserve(config.pop_size);
  for (std::size_t i = 0; i < config.pop_size; ++i) {
    pop.push_back(random_suggest(space, rng));
  }
  return pop;
}

std::size_t ga_select_index(std::span<const double> fitnesses, std::size_t k,
                            Direction direction, Rng& rng) {
  if (fitnesses.empty()) throw InvalidArgument("ga_select on empty population");
  if (k < 1) throw InvalidArgument("tournament size must be >= 1");
  std::size_t best = rng.below(fitnesses.size());
  for (std::size_t i = 1; i < k; ++i) {
    const std::size_t c = rng.below(fitnesses.size());
    if (better(fitnesses[c], fitnesses[best], direction) ||
        (fitnesses[c] == fitnesses[best] && c < best)) {
      best = c;
    }
  }
  return best;
}

const Chromosome& ga_select(const Population& pop,
                            std::span<const double> fitnesses, std::size_t k,
                            Direction direction, Rng& rng) {
  if (pop.size() != fitnesses.size()) {
    throw InvalidArgument("population and fitness lengths differ");
  }
  return pop[ga_select_index(fitnesses, k, direction, rng)];
}

Chromosome ga_crossover(const Chromosome& a, const Chromosome& b, Rng& rng) {
  if (a.size() != b.size()) throw InvalidArgument("parents differ in length");
  Chromosome child;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& [name, gene_a] = a.entries()[i];
    if (b.entries()[i].first != name) {
      throw InvalidArgument("parents come from different spaces");
    }
    child.set(name, rng.uniform() < 0.5 ? gene_a : b.entries()[i].second);
  }
  return child;
}

Chromosome ga_mutate(const Chromosome& c, const SearchSpace& space,
                     double p_mutation, Rng& rng) {
  Chromosome out = c;
  for (std::size_t i = 0; i < space.size(); ++i) {
    const double u = rng.uniform();
    if (u < p_mutation) out.set(space.name(i), sample_param(space.dist(i), rng));
  }
  return out;
}

Population ga_step(const Population& pop, std::span<const double> fitnesses,
                   const SearchSpace& space, const GaConfig& config,
                   Direction direction, Rng& rng) {
  config.validate();
  if (pop.size() != fitnesses.size()) {
    throw InvalidArgument("population and fitness lengths differ");
  }
  if (pop.size() != config.pop_size) {
    throw InvalidArgument("population size differs from pop_size");
  }
  std::vector<std::size_t> order(pop.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return better(fitnesses[a], fitnesses[b], direction);
  });

  Population next;
  next.reserve(pop.size());
  for (std::size_t i = 0; i < config.elitism_count; ++i) {
    next.push_back(pop[order[i]]);
  }
  while (next.size() < pop.size()) {
    const Chromosome& first =
        ga_select(pop, fitnesses, config.tournament_k, direction, rng);
    Chromosome child = first;
    if (rng.uniform() < config.p_crossover) {
      const Chromosome& second =
          ga_select(pop, fitnesses, config.tournament_k, direction, rng);
      child = ga_crossover(first, second, rng);
    }
    next.push_back(ga_mutate(child, space, config.p_mutation, rng));
  }
  return next;
}

}  // namespace tunebench
