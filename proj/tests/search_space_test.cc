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

#include <gtest/gtest.h>

#include <map>

#include "tunebench/error.h"
#include "tunebench/serialization.h"

namespace tunebench {
namespace {

TEST(DistributionTest, RejectsInvalidDomains) {
  EXPECT_THROW(Distribution::Uniform(1.0, 1.0), InvalidArgument);
  EXPECT_THROW(Distribution::Uniform(2.0, 1.0), InvalidArgument);
  EXPECT_THROW(Distribution::Uniform(0.0, INFINITY), InvalidArgument);
  EXPECT_THROW(Distribution::Uniform(NAN, 1.0), InvalidArgument);
  EXPECT_THROW(Distribution::UniformInt(3, 2), InvalidArgument);
  EXPECT_NO_THROW(Distribution::UniformInt(3, 3));
  EXPECT_THROW(Distribution::Choice({}), InvalidArgument);
  EXPECT_THROW(Distribution::Choice({"a", "a"}), InvalidArgument);
}

TEST(SearchSpaceTest, RejectsEmptyAndDuplicateNames) {
  SearchSpace space;
  EXPECT_THROW(space.add("", Distribution::Uniform(0, 1)), InvalidArgument);
  space.add("a", Distribution::Uniform(0, 1));
  EXPECT_THROW(space.add("a", Distribution::UniformInt(0, 1)), InvalidArgument);
}

TEST(SampleParamTest, ContinuousLowerBoundAtZero) {
  const auto d = Distribution::Uniform(0.1, 1000);
  EXPECT_EQ(std::get<double>(value_from_unit(d, 0.0)), 0.1);
}

TEST(SampleParamTest, IntegerCoversSupport) {
  const auto d = Distribution::UniformInt(1, 7);
  Rng rng(11);
  std::map<std::int64_t, int> counts;
  for (int i = 0; i < 7000; ++i) {
    const auto v = sample_param(d, rng);
    ASSERT_TRUE(contains(d, v));
    ++counts[std::get<std::int64_t>(v)];
  }
  ASSERT_EQ(counts.size(), 7u);
  for (const auto& [value, count] : counts) {
    EXPECT_GE(value, 1);
    EXPECT_LE(value, 7);
    EXPECT_GE(count, 1);
  }
}

TEST(SampleParamTest, SingletonCategorical) {
  const auto d = Distribution::Choice({"a"});
  Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    EXPECT_EQ(std::get<std::string>(sample_param(d, rng)), "a");
  }
}

TEST(SampleParamTest, SameSeedSameValues) {
  const auto d = Distribution::Uniform(-3, 8);
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(sample_param(d, a), sample_param(d, b));
  }
}

TEST(ContainsTest, Examples) {
  EXPECT_TRUE(contains(Distribution::Uniform(0.1, 1000), ParamValue(0.1)));
  EXPECT_TRUE(contains(Distribution::Uniform(0.1, 1000), ParamValue(1000.0)));
  EXPECT_FALSE(contains(Distribution::UniformInt(1, 7), ParamValue(std::int64_t{8})));
  EXPECT_FALSE(contains(Distribution::Choice({"x", "y"}), ParamValue("z")));
  // Tags must match the distribution variant.
  EXPECT_FALSE(contains(Distribution::UniformInt(1, 7), ParamValue(3.0)));
  EXPECT_FALSE(contains(Distribution::Uniform(0, 10), ParamValue(std::int64_t{3})));
}

TEST(GridPointsTest, Examples) {
  EXPECT_EQ(grid_points(Distribution::Uniform(0, 1), 3),
            (std::vector<ParamValue>{0.0, 0.5, 1.0}));
  std::vector<ParamValue> ints;
  for (std::int64_t i = 1; i <= 7; ++i) ints.emplace_back(i);
  EXPECT_EQ(grid_points(Distribution::UniformInt(1, 7), 100), ints);
  EXPECT_EQ(grid_points(Distribution::Choice({"a", "b"}), 5),
            (std::vector<ParamValue>{"a", "b"}));
  EXPECT_EQ(grid_points(Distribution::UniformInt(1, 7), 3),
            (std::vector<ParamValue>{std::int64_t{1}, std::int64_t{4}, std::int64_t{7}}));
}

TEST(GridPointsTest, ResolutionOne) {
  EXPECT_EQ(grid_points(Distribution::Uniform(2, 4), 1),
            (std::vector<ParamValue>{3.0}));
  EXPECT_EQ(grid_points(Distribution::UniformInt(5, 9), 1),
            (std::vector<ParamValue>{std::int64_t{5}}));
  EXPECT_EQ(grid_points(Distribution::Choice({"q", "r"}), 1),
            (std::vector<ParamValue>{"q"}));
}

TEST(GridPointsTest, ZeroResolutionIsAnError) {
  EXPECT_THROW(grid_points(Distribution::Uniform(0, 1), 0), InvalidArgument);
}

Distribution random_distribution(Rng& rng) {
  switch (rng.below(3)) {
    case 0: {
      const double low = rng.uniform() * 200 - 100;
      return Distribution::Uniform(low, low + 1e-3 + rng.uniform() * 100);
    }
    case 1: {
      const auto low = static_cast<std::int64_t>(rng.below(200)) - 100;
      return Distribution::UniformInt(low, low + static_cast<std::int64_t>(rng.below(50)));
    }
    default: {
      std::vector<std::string> choices;
      const auto k = 1 + rng.below(6);
      for (std::uint64_t i = 0; i < k; ++i) choices.push_back("c" + std::to_string(i));
      return Distribution::Choice(choices);
    }
  }
}

TEST(SearchSpacePropertyTest, SamplesAndGridsStayInSupport) {
  Rng gen(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const Distribution d = random_distribution(gen);
    Rng rng(gen.next_u64());
    for (int i = 0; i < 50; ++i) ASSERT_TRUE(contains(d, sample_param(d, rng)));

    const auto res = 1 + gen.below(40);
    const auto grid = grid_points(d, res);
    ASSERT_FALSE(grid.empty());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      ASSERT_TRUE(contains(d, grid[i]));
      for (std::size_t j = 0; j < i; ++j) ASSERT_NE(grid[i], grid[j]);
      if (i > 0 && !d.is_categorical()) ASSERT_LT(grid[i - 1], grid[i]);
    }
  }
}

TEST(PresetTest, PublishedSpaces) {
  EXPECT_EQ(preset_space("ridge"),
            (SearchSpace{{"alpha", Distribution::Uniform(0.1, 1000)}}));
  EXPECT_EQ(preset_space("logistic"),
            (SearchSpace{{"C", Distribution::Uniform(0.00001, 1.0)}}));
  const SearchSpace boosted{
      {"learning_rate", Distribution::Uniform(0.00001, 1.0)},
      {"max_depth", Distribution::UniformInt(1, 7)},
      {"n_estimators", Distribution::UniformInt(1, 1000)},
  };
  for (const char* name : {"gbm", "adaboost", "xgboost", "lightgbm"}) {
    EXPECT_EQ(preset_space(name), boosted) << name;
  }
  EXPECT_EQ(preset_space("random_forest"),
            (SearchSpace{{"max_features", Distribution::Uniform(0.0, 1.0)},
                         {"n_estimators", Distribution::UniformInt(1, 1000)}}));
}

TEST(PresetTest, UnknownPresetListsValidNames) {
  try {
    preset_space("svm");
    FAIL() << "expected an error";
  } catch (const InvalidArgument& e) {
    const std::string what = e.what();
    for (const auto& n : preset_names()) {
      EXPECT_NE(what.find(n), std::string::npos) << n;
    }
  }
}

TEST(PresetTest, RoundTripsThroughSerialization) {
  for (const auto& name : preset_names()) {
    const SearchSpace space = preset_space(name);
    const std::string text = space_to_json(space).dump();
    EXPECT_EQ(space_from_json(Json::parse(text)), space) << name;
    EXPECT_EQ(space_to_json(space_from_json(Json::parse(text))).dump(), text);
  }
}

TEST(ParamPointTest, CanonicalizeReordersAndValidates) {
  const SearchSpace space{{"a", Distribution::Uniform(0, 1)},
                          {"b", Distribution::UniformInt(0, 3)}};
  const ParamPoint p{{"b", std::int64_t{2}}, {"a", 0.5}};
  EXPECT_TRUE(space.contains(p));
  const ParamPoint c = space.canonicalize(p);
  EXPECT_EQ(c.entries()[0].first, "a");
  EXPECT_THROW(space.canonicalize(ParamPoint{{"a", 0.5}}), InvalidArgument);
  EXPECT_THROW(space.canonicalize(ParamPoint{{"a", 2.0}, {"b", std::int64_t{1}}}),
               InvalidArgument);
  EXPECT_THROW(space.canonicalize(
                   ParamPoint{{"a", 0.5}, {"b", std::int64_t{1}}, {"c", 1.0}}),
               InvalidArgument);
}

}  // namespace
}  // namespace tunebench
