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
#ifndef TUNEBENCH_SERIALIZATION_H_
#define TUNEBENCH_SERIALIZATION_H_

#include <string>

#include "json.hpp"
#include "tunebench/search_space.h"
#include "tunebench/study.h"

namespace tunebench {

using Json = nlohmann::ordered_json;

// Shortest decimal text that parses back to exactly x.
std::string format_real(double x);

// {"alpha": {"kind": "uniform", "low": 0.1, "high": 1000}, ...}
// Kinds: "uniform", "uniform_int", "categorical" (with "choices").
Json space_to_json(const SearchSpace& space);
SearchSpace space_from_json(const Json& j);

Json value_to_json(const ParamValue& v);
Json point_to_json(const ParamPoint& point);
// Reads values using the space for typing; result is canonical and in-space.
ParamPoint point_from_json(const Json& j, const SearchSpace& space);

// {"kind": "tpe", "gamma": 0.25, ...}. Omitted fields take their defaults;
// unknown fields are rejected.
Json sampler_to_json(const SamplerConfig& config);
SamplerConfig sampler_from_json(const Json& j);

}  // namespace tunebench

#endif  // TUNEBENCH_SERIALIZATION_H_
