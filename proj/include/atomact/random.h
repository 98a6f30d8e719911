/*
 * Copyright 2026 The atomact Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ATOMACT_RANDOM_H_
#define ATOMACT_RANDOM_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace atomact {

// All randomness in the toolkit comes from std::mt19937_64, whose output
// sequence is fixed by the C++ standard. The std distributions are not
// (their algorithms are implementation-defined), so the mappings below are
// written out here. Changing any of them changes every seeded output; bump
// kRandomStreamVersion if that ever happens.
inline constexpr int kRandomStreamVersion = 1;

// SplitMix64 finalizer; used to derive independent substream seeds.
std::uint64_t SplitMix64(std::uint64_t x);
std::uint64_t SubstreamSeed(std::uint64_t seed, std::uint64_t stream);
// FNV-1a, 64-bit.
std::uint64_t HashString(std::string_view s);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t NextU64() { return engine_(); }
  // Uniform in [0, 1) with 53 bits of resolution.
  double Uniform();
  // Uniform integer in [0, bound) by rejection; bound >= 1.
  std::uint64_t UniformInt(std::uint64_t bound);
  // Standard normal via Box-Muller (one variate per call, two uniforms).
  double Normal();
  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace atomact

#endif  // ATOMACT_RANDOM_H_
