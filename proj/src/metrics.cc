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
#include "tunebench/metrics.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <vector>

#include "tunebench/error.h"

namespace tunebench {

double rmse(std::span<const double> y_true, std::span<const double> y_pred) {
  if (y_true.size() != y_pred.size()) {
    throw InvalidArgument("rmse: length mismatch");
  }
  if (y_true.empty()) throw InvalidArgument("rmse: empty input");
  double sum = 0.0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    const double d = y_true[i] - y_pred[i];
    sum += d * d;
  }
  return std::sqrt(sum / static_cast<double>(y_true.size()));
}

double auc(std::span<const std::int64_t> labels, std::span<const double> scores) {
  if (labels.size() != scores.size()) {
    throw InvalidArgument("auc: length mismatch");
  }
  std::size_t n_pos = 0;
  for (const auto label : labels) {
    if (label != 0 && label != 1) throw InvalidArgument("auc: labels must be 0/1");
    n_pos += static_cast<std::size_t>(label);
  }
  const std::size_t n_neg = labels.size() - n_pos;
  if (n_pos == 0 || n_neg == 0) {
    throw InvalidArgument("auc: both classes must be present");
  }
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  // Mann-Whitney U from mid-ranks.
  double rank_sum = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && scores[order[j + 1]] == scores[order[i]]) ++j;
    const double mid_rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t t = i; t <= j; ++t) {
      if (labels[order[t]] == 1) rank_sum += mid_rank;
    }
    i = j + 1;
  }
  const double p = static_cast<double>(n_pos);
  const double u = rank_sum - p * (p + 1.0) / 2.0;
  return u / (p * static_cast<double>(n_neg));
}

double cohen_kappa(std::span<const std::int64_t> y_true,
                   std::span<const std::int64_t> y_pred) {
  if (y_true.size() != y_pred.size()) {
    throw InvalidArgument("cohen_kappa: length mismatch");
  }
  if (y_true.empty()) throw InvalidArgument("cohen_kappa: empty input");
  const double n = static_cast<double>(y_true.size());
  std::map<std::int64_t, double> true_counts;
  std::map<std::int64_t, double> pred_counts;
  double agree = 0.0;
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    true_counts[y_true[i]] += 1.0;
    pred_counts[y_pred[i]] += 1.0;
    if (y_true[i] == y_pred[i]) agree += 1.0;
  }
  const double p_o = agree / n;
  double p_e = 0.0;
  for (const auto& [label, count] : true_counts) {
    const auto it = pred_counts.find(label);
    if (it != pred_counts.end()) p_e += (count / n) * (it->second / n);
  }
  if (p_e == 1.0) return 0.0;
  return (p_o - p_e) / (1.0 - p_e);
}

}  // namespace tunebench
