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
#include "tunebench/samplers.h"

#include <limits>

#include "tunebench/error.h"

namespace tunebench {

ParamPoint random_suggest(const SearchSpace& space, Rng& rng) {
  ParamPoint p;
  for (const auto& [name, dist] : space.entries()) {
    p.set(name, sample_param(dist, rng));
  }
  return p;
}

ParamPoint point_from_units(const SearchSpace& space,
                            std::span<const double> units) {
  if (units.size() != space.size()) {
    throw InvalidArgument("need one unit draw per dimension");
  }
  ParamPoint p;
  for (std::size_t i = 0; i < space.size(); ++i) {
    p.set(space.name(i), value_from_unit(space.dist(i), units[i]));
  }
  return p;
}

Grid::Grid(SearchSpace space, std::size_t resolution)
    : space_(std::move(space)), resolution_(resolution) {
  axes_.reserve(space_.size());
  for (const auto& [name, dist] : space_.entries()) {
    axes_.push_back(grid_points(dist, resolution_));
    const std::uint64_t n = axes_.back().size();
    if (size_ > std::numeric_limits<std::uint64_t>::max() / n) {
      size_ = std::numeric_limits<std::uint64_t>::max();
    } else {
      size_ *= n;
    }
  }
}

ParamPoint Grid::at(std::uint64_t index) const {
  if (index >= size_) throw InvalidArgument("grid index out of range");
  std::vector<std::size_t> digits(axes_.size());
  for (std::size_t d = axes_.size(); d-- > 0;) {
    digits[d] = index % axes_[d].size();
    index /= axes_[d].size();
  }
  ParamPoint p;
  for (std::size_t d = 0; d < axes_.size(); ++d) {
    p.set(space_.name(d), axes_[d][digits[d]]);
  }
  return p;
}

GridCursor grid_start(const SearchSpace& space, std::size_t resolution) {
  if (resolution == 0) throw InvalidArgument("grid resolution must be >= 1");
  return GridCursor{space, resolution, 0};
}

std::optional<ParamPoint> grid_next(const SearchSpace& space,
                                    std::size_t resolution,
                                    GridCursor& cursor) {
  if (cursor.resolution != resolution || !(cursor.space == space)) {
    throw InvalidArgument("grid cursor was created for a different grid");
  }
  const Grid grid(space, resolution);
  if (cursor.index >= grid.size()) return std::nullopt;
  return grid.at(cursor.index++);
}

}  // namespace tunebench
