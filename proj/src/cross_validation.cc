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
#include "tunebench/cross_validation.h"

#include <algorithm>
#include <numeric>

#include "tunebench/error.h"
#include "tunebench/metrics.h"
#include "tunebench/rng.h"

namespace tunebench {
namespace {

std::vector<std::int64_t> labels_of(const Eigen::VectorXd& y) {
  std::vector<std::int64_t> out(static_cast<std::size_t>(y.size()));
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(y[i]);
  }
  return out;
}

}  // namespace

Folds kfold_split(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 2) throw InvalidArgument("k-fold needs k >= 2");
  if (k > n) throw InvalidArgument("k-fold needs k <= n");
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  Rng rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    std::swap(idx[i - 1], idx[rng.below(i)]);
  }
  Folds out;
  std::size_t pos = 0;
  for (std::size_t f = 0; f < k; ++f) {
    const std::size_t len = n / k + (f < n % k ? 1 : 0);
    out.folds.emplace_back(idx.begin() + static_cast<std::ptrdiff_t>(pos),
                           idx.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
  }
  return out;
}

ModelKind parse_model_kind(std::string_view s) {
  if (s == "ridge") return ModelKind::kRidge;
  if (s == "logistic") return ModelKind::kLogistic;
  throw InvalidArgument("unknown model '" + std::string(s) +
                        "'; valid: ridge, logistic");
}

Metric parse_metric(std::string_view s) {
  if (s == "rmse") return Metric::kRmse;
  if (s == "auc") return Metric::kAuc;
  if (s == "kappa") return Metric::kKappa;
  throw InvalidArgument("unknown metric '" + std::string(s) +
                        "'; valid: rmse, auc, kappa");
}

std::string_view to_string(ModelKind m) {
  return m == ModelKind::kRidge ? "ridge" : "logistic";
}

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::kRmse:
      return "rmse";
    case Metric::kAuc:
      return "auc";
    default:
      return "kappa";
  }
}

Direction metric_direction(Metric m) {
  return m == Metric::kRmse ? Direction::kMinimize : Direction::kMaximize;
}

std::string_view preset_for(ModelKind m) {
  return m == ModelKind::kRidge ? "ridge" : "logistic";
}

void check_model_metric(ModelKind model, Metric metric) {
  if (model == ModelKind::kRidge && metric != Metric::kRmse) {
    throw InvalidArgument("ridge models are scored with rmse");
  }
  if (model == ModelKind::kLogistic && metric == Metric::kRmse) {
    throw InvalidArgument("logistic models are scored with auc or kappa");
  }
}

LinearModel fit_model(ModelKind model, const Dataset& train,
                      const ParamPoint& params) {
  if (model == ModelKind::kRidge) {
    return ridge_fit(train.features, train.target, params.real("alpha"));
  }
  return logistic_fit(train.features, train.target, params.real("C"));
}

double score_model(ModelKind model, const LinearModel& fitted,
                   const Dataset& data, Metric metric) {
  check_model_metric(model, metric);
  if (metric == Metric::kRmse) {
    const Eigen::VectorXd pred = fitted.decision(data.features);
    return rmse(std::span<const double>(data.target.data(), data.target.size()),
                std::span<const double>(pred.data(), pred.size()));
  }
  const Eigen::VectorXd prob = predict_proba(fitted, data.features);
  const std::vector<std::int64_t> truth = labels_of(data.target);
  if (metric == Metric::kAuc) {
    return auc(truth, std::span<const double>(prob.data(), prob.size()));
  }
  std::vector<std::int64_t> predicted(truth.size());
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    predicted[i] = prob[static_cast<Eigen::Index>(i)] >= 0.5 ? 1 : 0;
  }
  return cohen_kappa(truth, predicted);
}

CvResult cv_evaluate(ModelKind model, const Dataset& data,
                     const ParamPoint& params, std::size_t k, std::uint64_t seed,
                     Metric metric) {
  check_model_metric(model, metric);
  const Folds folds = kfold_split(data.rows(), k, seed);
  CvResult result;
  result.direction = metric_direction(metric);
  for (std::size_t f = 0; f < folds.size(); ++f) {
    std::vector<std::size_t> train_rows;
    for (std::size_t g = 0; g < folds.size(); ++g) {
      if (g == f) continue;
      train_rows.insert(train_rows.end(), folds.folds[g].begin(),
                        folds.folds[g].end());
    }
    std::sort(train_rows.begin(), train_rows.end());
    std::vector<std::size_t> test_rows = folds.folds[f];
    std::sort(test_rows.begin(), test_rows.end());
    const LinearModel fitted = fit_model(model, data.subset(train_rows), params);
    result.fold_values.push_back(
        score_model(model, fitted, data.subset(test_rows), metric));
  }
  double sum = 0.0;
  for (const double v : result.fold_values) sum += v;
  result.value = sum / static_cast<double>(result.fold_values.size());
  return result;
}

double cv_objective(ModelKind model, const Dataset& data,
                    const ParamPoint& params, std::size_t k, std::uint64_t seed,
                    Metric metric) {
  return cv_evaluate(model, data, params, k, seed, metric).value;
}

}  // namespace tunebench
