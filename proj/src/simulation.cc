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

#include "atomact/simulation.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "atomact/errors.h"
#include "atomact/random.h"

namespace atomact {

void SimConfig::Validate() const {
  if (n_clips < 1) throw Error(ErrorKind::kConfig, "n_clips must be >= 1");
  if (!(prevalence > 0.0 && prevalence < 1.0)) {
    throw Error(ErrorKind::kConfig, "prevalence must lie in (0, 1)");
  }
  if (!(noise_sigma >= 0.0 && std::isfinite(noise_sigma))) {
    throw Error(ErrorKind::kConfig, "noise_sigma must be finite and >= 0");
  }
  if (!(miss_rate >= 0.0 && miss_rate < 1.0)) {
    throw Error(ErrorKind::kConfig, "miss_rate must lie in [0, 1)");
  }
}

std::string SimClipId(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "clip_%05d", index);
  return buf;
}

LabelMatrix GenerateTruth(const SimConfig& config) {
  config.Validate();
  LabelMatrix m;
  m.labels.resize(config.n_clips, kNumClasses);
  m.clip_ids.reserve(config.n_clips);
  for (int i = 0; i < config.n_clips; ++i) {
    m.clip_ids.push_back(SimClipId(i));
    Rng rng(SubstreamSeed(config.seed, static_cast<std::uint64_t>(i)));
    for (int c = 0; c < kNumClasses; ++c) {
      m.labels(i, c) = rng.Bernoulli(config.prevalence) ? 1 : 0;
    }
  }
  return m;
}

ScoreMatrix GenerateScores(const LabelMatrix& truth, double noise_sigma, double miss_rate,
                           std::uint64_t seed) {
  truth.Validate();
  if (!(noise_sigma >= 0.0 && std::isfinite(noise_sigma))) {
    throw Error(ErrorKind::kConfig, "noise_sigma must be finite and >= 0");
  }
  if (!(miss_rate >= 0.0 && miss_rate <= 1.0)) {
    throw Error(ErrorKind::kConfig, "miss_rate must lie in [0, 1]");
  }
  ScoreMatrix m;
  m.clip_ids = truth.clip_ids;
  m.scores.resize(truth.rows(), kNumClasses);
  for (Eigen::Index i = 0; i < truth.rows(); ++i) {
    Rng rng(SubstreamSeed(seed, HashString(truth.clip_ids[i])));
    for (int c = 0; c < kNumClasses; ++c) {
      // Fixed draw count per cell keeps streams stable across parameter changes.
      const double noise = noise_sigma * rng.Normal();
      const double miss_draw = rng.Uniform();
      const double replacement = rng.Uniform();
      const double label = truth.labels(i, c);
      double score = std::clamp(label + noise, 0.0, 1.0);
      if (truth.labels(i, c) == 1 && miss_draw < miss_rate) score = replacement;
      m.scores(i, c) = score;
    }
  }
  return m;
}

}  // namespace atomact
