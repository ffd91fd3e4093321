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

#include <gtest/gtest.h>

#include <array>
#include <map>

#include "tunebench/error.h"

namespace tunebench {
namespace {

TEST(RandomSuggestTest, UnitZeroMapsToLowerBounds) {
  const SearchSpace space{{"alpha", Distribution::Uniform(0.1, 1000)}};
  const std::array<double, 1> units{0.0};
  EXPECT_EQ(point_from_units(space, units), (ParamPoint{{"alpha", 0.1}}));
}

TEST(RandomSuggestTest, Deterministic) {
  const SearchSpace space{{"a", Distribution::Uniform(0, 1)},
                          {"b", Distribution::UniformInt(1, 1000)},
                          {"c", Distribution::Choice({"x", "y", "z"})}};
  Rng r1(5);
  Rng r2(5);
  for (int i = 0; i < 20; ++i) {
    const ParamPoint p = random_suggest(space, r1);
    EXPECT_EQ(p, random_suggest(space, r2));
    EXPECT_TRUE(space.contains(p));
  }
}

TEST(RandomSuggestTest, IntegerFrequenciesAreUniform) {
  const SearchSpace space{{"d", Distribution::UniformInt(1, 7)}};
  Rng rng(1234);
  std::map<std::int64_t, int> counts;
  for (int i = 0; i < 1000; ++i) {
    ++counts[random_suggest(space, rng).integer("d")];
  }
  ASSERT_EQ(counts.size(), 7u);
  for (const auto& [v, c] : counts) {
    EXPECT_NEAR(c / 1000.0, 1.0 / 7.0, 0.05) << v;
  }
}

TEST(GridNextTest, TwoPointGrid) {
  const SearchSpace space{{"a", Distribution::Uniform(0, 1)}};
  GridCursor cursor = grid_start(space, 2);
  EXPECT_EQ(grid_next(space, 2, cursor), (ParamPoint{{"a", 0.0}}));
  EXPECT_EQ(grid_next(space, 2, cursor), (ParamPoint{{"a", 1.0}}));
  EXPECT_EQ(grid_next(space, 2, cursor), std::nullopt);
  EXPECT_EQ(grid_next(space, 2, cursor), std::nullopt);
}

TEST(GridNextTest, ProductOrderFirstDimensionSlowest) {
  const SearchSpace space{{"a", Distribution::Uniform(0, 1)},
                          {"b", Distribution::UniformInt(1, 2)}};
  GridCursor cursor = grid_start(space, 2);
  std::vector<ParamPoint> seen;
  while (auto p = grid_next(space, 2, cursor)) seen.push_back(*p);
  const std::vector<ParamPoint> expected = {
      {{"a", 0.0}, {"b", std::int64_t{1}}},
      {{"a", 0.0}, {"b", std::int64_t{2}}},
      {{"a", 1.0}, {"b", std::int64_t{1}}},
      {{"a", 1.0}, {"b", std::int64_t{2}}},
  };
  EXPECT_EQ(seen, expected);
}

TEST(GridNextTest, EquallySpacedIntegers) {
  const SearchSpace space{{"d", Distribution::UniformInt(1, 7)}};
  GridCursor cursor = grid_start(space, 3);
  std::vector<std::int64_t> seen;
  while (auto p = grid_next(space, 3, cursor)) seen.push_back(p->integer("d"));
  EXPECT_EQ(seen, (std::vector<std::int64_t>{1, 4, 7}));
}

TEST(GridNextTest, CountIsProductOfAxes) {
  const SearchSpace space{{"a", Distribution::Uniform(0, 1)},
                          {"b", Distribution::UniformInt(1, 3)},
                          {"c", Distribution::Choice({"p", "q"})}};
  const Grid grid(space, 5);
  EXPECT_EQ(grid.size(), 5u * 3u * 2u);
  GridCursor cursor = grid_start(space, 5);
  std::size_t n = 0;
  while (grid_next(space, 5, cursor)) ++n;
  EXPECT_EQ(n, grid.size());
}

TEST(GridNextTest, CursorMismatch) {
  const SearchSpace a{{"a", Distribution::Uniform(0, 1)}};
  const SearchSpace b{{"b", Distribution::Uniform(0, 1)}};
  GridCursor cursor = grid_start(a, 2);
  EXPECT_THROW(grid_next(b, 2, cursor), InvalidArgument);
  EXPECT_THROW(grid_next(a, 3, cursor), InvalidArgument);
}

}  // namespace
}  // namespace tunebench
