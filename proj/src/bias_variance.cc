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
#include "tunebench/bias_variance.h"

#include "tunebench/error.h"

namespace tunebench {

BiasVarianceReport bias_variance_decompose(std::span<const double> predictions,
                                           double truth) {
  if (predictions.empty()) {
    throw InvalidArgument("bias_variance_decompose: no predictions");
  }
  const double m = static_cast<double>(predictions.size());
  BiasVarianceReport r;
  for (const double y : predictions) r.mean_prediction += y;
  r.mean_prediction /= m;
  const double bias = truth - r.mean_prediction;
  r.bias_sq = bias * bias;
  for (const double y : predictions) {
    const double spread = y - r.mean_prediction;
    const double err = truth - y;
    r.variance += spread * spread;
    r.mse += err * err;
  }
  r.variance /= m;
  r.mse /= m;
  return r;
}

}  // namespace tunebench
