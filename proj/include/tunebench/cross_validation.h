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
#ifndef TUNEBENCH_CROSS_VALIDATION_H_
#define TUNEBENCH_CROSS_VALIDATION_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "tunebench/dataset.h"
#include "tunebench/history.h"
#include "tunebench/linear_models.h"
#include "tunebench/search_space.h"

namespace tunebench {

// k disjoint index lists covering 0..n-1, sizes within one of each other.
struct Folds {
  std::vector<std::vector<std::size_t>> folds;
  std::size_t size() const { return folds.size(); }
};

// Seeded shuffle of 0..n-1 cut into k near-equal folds (the first n % k
// folds get the extra element). Requires 2 <= k <= n.
Folds kfold_split(std::size_t n, std::size_t k, std::uint64_t seed);

enum class ModelKind { kRidge, kLogistic };
enum class Metric { kRmse, kAuc, kKappa };

ModelKind parse_model_kind(std::string_view s);
Metric parse_metric(std::string_view s);
std::string_view to_string(ModelKind m);
std::string_view to_string(Metric m);

// RMSE is minimized, AUC and kappa maximized.
Direction metric_direction(Metric m);

// Name of the preset search space tuned for a model kind.
std::string_view preset_for(ModelKind m);

// Throws InvalidArgument for pairings that make no sense (ridge scored by
// AUC, logistic scored by RMSE).
void check_model_metric(ModelKind model, Metric metric);

LinearModel fit_model(ModelKind model, const Dataset& train,
                      const ParamPoint& params);

// Scores a fitted model on data. Classification thresholds probabilities at
// 0.5 for kappa and ranks them for AUC.
double score_model(ModelKind model, const LinearModel& fitted,
                   const Dataset& data, Metric metric);

struct CvResult {
  double value = 0.0;
  Direction direction = Direction::kMinimize;
  std::vector<double> fold_values;
};

// Trains on k-1 folds, scores the held-out fold, averages over folds.
CvResult cv_evaluate(ModelKind model, const Dataset& data,
                     const ParamPoint& params, std::size_t k, std::uint64_t seed,
                     Metric metric);

double cv_objective(ModelKind model, const Dataset& data,
                    const ParamPoint& params, std::size_t k, std::uint64_t seed,
                    Metric metric);

}  // namespace tunebench

#endif  // TUNEBENCH_CROSS_VALIDATION_H_
