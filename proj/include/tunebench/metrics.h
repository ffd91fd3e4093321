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
#ifndef TUNEBENCH_METRICS_H_
#define TUNEBENCH_METRICS_H_

#include <cstdint>
#include <span>

namespace tunebench {

// sqrt(mean((y_true - y_pred)^2)). Throws on empty or mismatched input.
double rmse(std::span<const double> y_true, std::span<const double> y_pred);

// Probability that a random positive outscores a random negative, ties
// counted 1/2. labels are 0/1; throws unless both classes occur.
double auc(std::span<const std::int64_t> labels, std::span<const double> scores);

// Chance-corrected agreement (p_o - p_e) / (1 - p_e); 0 when p_e == 1.
double cohen_kappa(std::span<const std::int64_t> y_true,
                   std::span<const std::int64_t> y_pred);

}  // namespace tunebench

#endif  // TUNEBENCH_METRICS_H_
