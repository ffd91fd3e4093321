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
#ifndef TUNEBENCH_GENETIC_H_
#define TUNEBENCH_GENETIC_H_

#include <cstddef>
#include <span>
#include <vector>

#include "tunebench/history.h"
#include "tunebench/rng.h"
#include "tunebench/search_space.h"

namespace tunebench {

struct GaConfig {
  std::size_t pop_size = 20;
  std::size_t tournament_k = 3;
  double p_crossover = 0.9;
  double p_mutation = 0.1;
  std::size_t elitism_count = 1;
  std::size_t generations = 50;

  void validate() const;
  friend bool operator==(const GaConfig&, const GaConfig&) = default;
};

// A chromosome is a full assignment of the space; genes are its values.
using Chromosome = ParamPoint;
using Population = std::vector<Chromosome>;

// pop_size independent random draws.
Population ga_init(const SearchSpace& space, const GaConfig& config, Rng& rng);

// Tournament of k members drawn uniformly with replacement; returns the
// index of the fittest, ties to the lower population index.
std::size_t ga_select_index(std::span<const double> fitnesses, std::size_t k,
                            Direction direction, Rng& rng);

const Chromosome& ga_select(const Population& pop,
                            std::span<const double> fitnesses, std::size_t k,
                            Direction direction, Rng& rng);

// Uniform crossover: each gene from a or b with probability 1/2.
Chromosome ga_crossover(const Chromosome& a, const Chromosome& b, Rng& rng);

// Each gene independently redrawn from its distribution with probability
// p_mutation.
Chromosome ga_mutate(const Chromosome& c, const SearchSpace& space,
                     double p_mutation, Rng& rng);

// Next generation: the elitism_count fittest copied unchanged, the rest
// bred by select -> crossover (or clone) -> mutate.
Population ga_step(const Population& pop, std::span<const double> fitnesses,
                   const SearchSpace& space, const GaConfig& config,
                   Direction direction, Rng& rng);

}  // namespace tunebench

#endif  // TUNEBENCH_GENETIC_H_
