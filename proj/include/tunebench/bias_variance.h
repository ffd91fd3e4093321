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
#ifndef TUNEBENCH_BIAS_VARIANCE_H_
#define TUNEBENCH_BIAS_VARIANCE_H_

#include <span>

namespace tunebench {

// Error of m predictions of one target value, split into the squared bias
// of their mean and their spread around it. mse == bias_sq + variance up to
// rounding.
struct BiasVarianceReport {
  double bias_sq = 0.0;
  double variance = 0.0;
  double mse = 0.0;
  double mean_prediction = 0.0;
};

// Throws InvalidArgument on an empty prediction list.
BiasVarianceReport bias_variance_decompose(std::span<const double> predictions,
                                           double truth);

}  // namespace tunebench

#endif  // TUNEBENCH_BIAS_VARIANCE_H_
