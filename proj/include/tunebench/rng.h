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
#ifndef TUNEBENCH_RNG_H_
#define TUNEBENCH_RNG_H_

#include <cstdint>
#include <random>

namespace tunebench {

// Seeded generator used by every sampler.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. The derived draws (unit uniform, bounded integers, normals) are
// computed here rather than through <random> distributions, whose algorithms
// are implementation defined, so traces agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1) with 53 bits of resolution.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform on {0, ..., n - 1}; n must be positive.
  std::uint64_t below(std::uint64_t n);

  // Standard normal (Box-Muller, one value per call).
  double normal();

  // Independent stream keyed by (seed, stream). Depends only on the seed this
  // generator was built with, never on how far it has advanced.
  Rng fork(std::uint64_t stream) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

}  // namespace tunebench

#endif  // TUNEBENCH_RNG_H_
