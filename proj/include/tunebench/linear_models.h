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
#ifndef TUNEBENCH_LINEAR_MODELS_H_
#define TUNEBENCH_LINEAR_MODELS_H_

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

namespace tunebench {

// Learned parameters of a linear predictor: X * weights + intercept.
struct LinearModel {
  Eigen::VectorXd weights;
  double intercept = 0.0;

  Eigen::VectorXd decision(const Eigen::MatrixXd& x) const;
};

// Solves (Xc'Xc + alpha I) w = Xc'yc on centred data; the intercept is
// recovered from the means and never penalized. Without an intercept the
// raw columns are used. Throws NumericalError when the system is singular.
LinearModel ridge_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                      double alpha, bool fit_intercept = true);

struct LogisticOptions {
  std::size_t max_iters = 1000;
  double tol = 1e-6;
  bool fit_intercept = true;
};

// Mean log-loss plus ||w||^2 / (2 C n), and its gradient.
struct LogisticLoss {
  double value = 0.0;
  Eigen::VectorXd grad_weights;
  double grad_intercept = 0.0;
};

LogisticLoss logistic_loss(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                           double c, const Eigen::VectorXd& weights,
                           double intercept);

struct LogisticFit {
  LinearModel model;
  std::vector<double> losses;  // objective after every accepted step
  std::size_t iterations = 0;
  bool converged = false;
};

// Diagonally scaled gradient descent with Armijo backtracking. Stops once
// the gradient norm drops below tol or after max_iters. y holds 0/1 labels;
// throws InvalidArgument unless both occur.
LogisticFit logistic_fit_detailed(const Eigen::MatrixXd& x,
                                  const Eigen::VectorXd& y, double c,
                                  const LogisticOptions& options = {});

LinearModel logistic_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                         double c, const LogisticOptions& options = {});

Eigen::VectorXd predict_proba(const LinearModel& model, const Eigen::MatrixXd& x);

}  // namespace tunebench

#endif  // TUNEBENCH_LINEAR_MODELS_H_
