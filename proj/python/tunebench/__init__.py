# Copyright 2026 The Tunebench Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Hyperparameter search: spaces, samplers, ask/tell studies and metrics."""

from tunebench._core import (
    BudgetExhausted,
    Error,
    InvalidArgument,
    ParseError,
    SearchSpace,
    Study,
    auc,
    bias_variance_decompose,
    cohen_kappa,
    compare,
    ei_ratio_score,
    grid,
    logistic_fit,
    preset_names,
    preset_space,
    random_suggest,
    ridge_fit,
    rmse,
    run_study,
    synthetic_minimum,
    synthetic_objective,
    synthetic_space,
    tune,
)

__all__ = [
    "BudgetExhausted",
    "Error",
    "InvalidArgument",
    "ParseError",
    "SearchSpace",
    "Study",
    "auc",
    "bias_variance_decompose",
    "cohen_kappa",
    "compare",
    "ei_ratio_score",
    "grid",
    "logistic_fit",
    "preset_names",
    "preset_space",
    "random_suggest",
    "ridge_fit",
    "rmse",
    "run_study",
    "synthetic_minimum",
    "synthetic_objective",
    "synthetic_space",
    "tune",
]

__version__ = "0.1.0"
