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
// Reference worker for external objectives. Reads one JSON object of
// parameters per line and replies {"score": sum((v - shift)^2)} over the
// numeric parameters.
//
//   --shift X     centre of the bowl (default 0)
//   --garbage N   reply with non-numeric text to request N (1-based)
//   --exit-at N   exit with status 4 instead of answering request N
//   --constant X  always reply X

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Example objective worker"};
  double shift = 0.0;
  long garbage = 0;
  long exit_at = 0;
  std::optional<double> constant;
  app.add_option("--shift", shift);
  app.add_option("--garbage", garbage);
  app.add_option("--exit-at", exit_at);
  app.add_option("--constant", constant);
  CLI11_PARSE(app, argc, argv);

  std::string line;
  long request = 0;
  while (std::getline(std::cin, line)) {
    ++request;
    if (request == exit_at) return 4;
    if (request == garbage) {
      std::cout << "not-a-number" << std::endl;
      continue;
    }
    double score = 0.0;
    if (constant) {
      score = *constant;
    } else {
      const auto params = nlohmann::json::parse(line, nullptr, false);
      if (params.is_discarded() || !params.is_object()) {
        std::cout << "{\"error\": \"bad request\"}" << std::endl;
        continue;
      }
      for (const auto& [name, value] : params.items()) {
        if (value.is_number()) {
          const double d = value.get<double>() - shift;
          score += d * d;
        }
      }
    }
    nlohmann::json reply = {{"score", score}};
    std::cout << reply.dump() << std::endl;
  }
  return 0;
}
