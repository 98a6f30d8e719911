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

#ifndef ATOMACT_SIMULATION_H_
#define ATOMACT_SIMULATION_H_

#include <cstdint>
#include <string>

#include "atomact/scores.h"

namespace atomact {

// Synthetic benchmark with known ground truth. Every clip draws from its own
// seeded substream, so output does not depend on generation order.
struct SimConfig {
  int n_clips = 100;
  double prevalence = 0.1;   // (0, 1)
  double noise_sigma = 0.2;  // >= 0
  double miss_rate = 0.0;    // [0, 1)
  std::uint64_t seed = 0;

  // Throws kConfig naming the first out-of-range field.
  void Validate() const;
};

// "clip_00000", "clip_00001", ...
std::string SimClipId(int index);

// Each (clip, class) label is Bernoulli(prevalence).
LabelMatrix GenerateTruth(const SimConfig& config);

// score = clamp(label + N(0, noise_sigma^2), 0, 1); each positive is, with
// probability miss_rate, replaced by an independent Uniform(0, 1) draw.
// miss_rate may be 1 here. The substream of a clip is keyed by its clip id.
ScoreMatrix GenerateScores(const LabelMatrix& truth, double noise_sigma, double miss_rate,
                           std::uint64_t seed);

}  // namespace atomact

#endif  // ATOMACT_SIMULATION_H_
