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
#include "tunebench/linear_models.h"

#include <cmath>

#include "tunebench/error.h"

namespace tunebench {
namespace {

// log(1 + exp(z)) without overflow.
double softplus(double z) {
  return z > 0.0 ? z + std::log1p(std::exp(-z)) : std::log1p(std::exp(z));
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

void check_shapes(const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
  if (x.rows() != y.size()) {
    throw InvalidArgument("feature rows and target length differ");
  }
  if (x.rows() == 0) throw InvalidArgument("cannot fit on zero rows");
}

}  // namespace

Eigen::VectorXd LinearModel::decision(const Eigen::MatrixXd& x) const {
  if (x.cols() != weights.size()) {
    throw InvalidArgument("feature count differs from model weights");
  }
  return (x * weights).array() + intercept;
}

LinearModel ridge_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                      double alpha, bool fit_intercept) {
  check_shapes(x, y);
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgument("ridge alpha must be finite and >= 0");
  }
  Eigen::RowVectorXd x_mean = Eigen::RowVectorXd::Zero(x.cols());
  double y_mean = 0.0;
  if (fit_intercept) {
    x_mean = x.colwise().mean();
    y_mean = y.mean();
  }
  const Eigen::MatrixXd xc = x.rowwise() - x_mean;
  const Eigen::VectorXd yc = y.array() - y_mean;

  Eigen::MatrixXd gram = xc.transpose() * xc;
  gram.diagonal().array() += alpha;
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  const Eigen::VectorXd d = ldlt.vectorD();
  const double scale = std::max(1.0, gram.diagonal().cwiseAbs().maxCoeff());
  if (ldlt.info() != Eigen::Success || d.size() == 0 ||
      d.minCoeff() <= 1e-12 * scale) {
    throw NumericalError("ridge system is singular; increase alpha");
  }
  LinearModel model;
  model.weights = ldlt.solve(xc.transpose() * yc);
  model.intercept = fit_intercept ? y_mean - x_mean.dot(model.weights) : 0.0;
  if (!model.weights.allFinite() || !std::isfinite(model.intercept)) {
    throw NumericalError("ridge solution is not finite");
  }
  return model;
}

LogisticLoss logistic_loss(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                           double c, const Eigen::VectorXd& weights,
                           double intercept) {
  const double n = static_cast<double>(x.rows());
  const Eigen::VectorXd z = (x * weights).array() + intercept;
  Eigen::VectorXd residual(z.size());
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    loss += softplus(z[i]) - y[i] * z[i];
    residual[i] = sigmoid(z[i]) - y[i];
  }
  const double penalty = 1.0 / (c * n);
  LogisticLoss out;
  out.value = loss / n + 0.5 * penalty * weights.squaredNorm();
  out.grad_weights = x.transpose() * residual / n + penalty * weights;
  out.grad_intercept = residual.sum() / n;
  return out;
}

LogisticFit logistic_fit_detailed(const Eigen::MatrixXd& x,
                                  const Eigen::VectorXd& y, double c,
                                  const LogisticOptions& options) {
  check_shapes(x, y);
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw InvalidArgument("logistic C must be finite and > 0");
  }
  Eigen::Index positives = 0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if (y[i] != 0.0 && y[i] != 1.0) {
      throw InvalidArgument("logistic labels must be 0 or 1");
    }
    positives += y[i] == 1.0 ? 1 : 0;
  }
  if (positives == 0 || positives == y.size()) {
    throw InvalidArgument("logistic regression needs both classes present");
  }

  const double n = static_cast<double>(x.rows());
  // Upper bound on the Hessian diagonal; used to scale the step per
  // coordinate.
  Eigen::VectorXd scale_w =
      0.25 * x.array().square().colwise().sum().transpose() / n +
      1.0 / (c * n);
  scale_w = scale_w.cwiseInverse();
  const double scale_b = 4.0;

  LogisticFit fit;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(x.cols());
  double b = 0.0;
  LogisticLoss current = logistic_loss(x, y, c, w, b);
  fit.losses.push_back(current.value);
  double step = 1.0;
  for (std::size_t it = 0; it < options.max_iters; ++it) {
    const double grad_b = options.fit_intercept ? current.grad_intercept : 0.0;
    const double grad_norm = std::sqrt(current.grad_weights.squaredNorm() +
                                       grad_b * grad_b);
    if (grad_norm < options.tol) {
      fit.converged = true;
      break;
    }
    const Eigen::VectorXd dir_w = -scale_w.cwiseProduct(current.grad_weights);
    const double dir_b = -scale_b * grad_b;
    const double slope = current.grad_weights.dot(dir_w) + grad_b * dir_b;
    step = std::min(1.0, step * 2.0);
    bool accepted = false;
    while (step > 1e-16) {
      const Eigen::VectorXd w_try = w + step * dir_w;
      const double b_try = b + step * dir_b;
      LogisticLoss trial = logistic_loss(x, y, c, w_try, b_try);
      if (trial.value <= current.value + 1e-4 * step * slope) {
        w = w_try;
        b = b_try;
        current = std::move(trial);
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    fit.iterations = it + 1;
    if (!accepted) break;
    fit.losses.push_back(current.value);
  }
  if (!fit.converged) {
    const double grad_b = options.fit_intercept ? current.grad_intercept : 0.0;
    fit.converged = std::sqrt(current.grad_weights.squaredNorm() +
                              grad_b * grad_b) < options.tol;
  }
  fit.model.weights = w;
  fit.model.intercept = b;
  if (!w.allFinite() || !std::isfinite(b)) {
    throw NumericalError("logistic fit diverged");
  }
  return fit;
}

LinearModel logistic_fit(const Eigen::MatrixXd& x, const Eigen::VectorXd& y,
                         double c, const LogisticOptions& options) {
  return logistic_fit_detailed(x, y, c, options).model;
}

Eigen::VectorXd predict_proba(const LinearModel& model, const Eigen::MatrixXd& x) {
  Eigen::VectorXd z = model.decision(x);
  for (Eigen::Index i = 0; i < z.size(); ++i) z[i] = sigmoid(z[i]);
  return z;
}

}  // namespace tunebench
