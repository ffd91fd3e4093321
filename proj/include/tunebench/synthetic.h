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
#ifndef TUNEBENCH_SYNTHETIC_H_
#define TUNEBENCH_SYNTHETIC_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "tunebench/search_space.h"

namespace tunebench {

// "sphere", "branin", "rastrigin".
const std::vector<std::string>& synthetic_names();

// Closed-form test landscape evaluated at the point's values in order.
// Branin is two-dimensional; the others accept any dimension >= 1.
double synthetic_objective(std::string_view name, const ParamPoint& point);

// Box domain x0..x{dim-1} conventionally used with each landscape:
// sphere [-2, 2]^d, rastrigin [-5.12, 5.12]^d, branin [-5, 10] x [0, 15].
SearchSpace synthetic_space(std::string_view name, std::size_t dim);

// Lowest value attained on the box.
double synthetic_minimum(std::string_view name);

}  // namespace tunebench

#endif  // TUNEBENCH_SYNTHETIC_H_
