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
#ifndef TUNEBENCH_SAMPLERS_H_
#define TUNEBENCH_SAMPLERS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tunebench/rng.h"
#include "tunebench/search_space.h"

namespace tunebench {

// One independent draw per dimension, in declaration order.
ParamPoint random_suggest(const SearchSpace& space, Rng& rng);

// Same mapping as random_suggest with the unit uniforms supplied by the
// caller; units.size() must equal space.size().
ParamPoint point_from_units(const SearchSpace& space,
                            std::span<const double> units);

// Cartesian product of per-dimension grid_points(), first declared
// dimension varying slowest.
class Grid {
 public:
  Grid(SearchSpace space, std::size_t resolution);

  const SearchSpace& space() const { return space_; }
  std::size_t resolution() const { return resolution_; }
  // Product of the per-dimension grid sizes (saturates at UINT64_MAX).
  std::uint64_t size() const { return size_; }
  ParamPoint at(std::uint64_t index) const;

 private:
  SearchSpace space_;
  std::size_t resolution_;
  std::vector<std::vector<ParamValue>> axes_;
  std::uint64_t size_ = 1;
};

// Enumeration state for grid_next(). Remembers the space and resolution it
// was created for so a cursor cannot be replayed against another grid.
struct GridCursor {
  SearchSpace space;
  std::size_t resolution = 1;
  std::uint64_t index = 0;
};

GridCursor grid_start(const SearchSpace& space, std::size_t resolution);

// Next grid point, or nullopt once every tuple has been produced. Throws
// InvalidArgument when the cursor belongs to a different space/resolution.
std::optional<ParamPoint> grid_next(const SearchSpace& space,
                                    std::size_t resolution,
                                    GridCursor& cursor);

}  // namespace tunebench

#endif  // TUNEBENCH_SAMPLERS_H_
