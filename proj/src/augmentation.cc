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

#include "atomact/augmentation.h"

#include <algorithm>
#include <cmath>

#include "atomact/errors.h"
#include "atomact/random.h"

namespace atomact {

FrameClip FrameClip::Filled(std::string clip_id, int t, int h, int w, std::uint8_t value) {
  FrameClip clip{std::move(clip_id), t, h, w, {}};
  clip.Validate();
  clip.data.assign(static_cast<std::size_t>(t) * h * w * 3, value);
  return clip;
}

void FrameClip::Validate() const {
  if (t < 1 || h < 1 || w < 1) {
    throw Error(ErrorKind::kDimension, "clip '" + clip_id + "' has non-positive dimensions " +
                                           std::to_string(t) + "x" + std::to_string(h) + "x" +
                                           std::to_string(w));
  }
  const std::size_t expected = static_cast<std::size_t>(t) * h * w * 3;
  if (!data.empty() && data.size() != expected) {
    throw Error(ErrorKind::kDimension, "clip '" + clip_id + "' buffer holds " +
                                           std::to_string(data.size()) + " bytes, expected " +
                                           std::to_string(expected));
  }
}

FrameClip HFlipClip(const FrameClip& clip) {
  clip.Validate();
  FrameClip out = clip;
  for (int f = 0; f < clip.t; ++f) {
    for (int y = 0; y < clip.h; ++y) {
      for (int x = 0; x < clip.w; ++x) {
        for (int c = 0; c < 3; ++c) out.at(f, y, x, c) = clip.at(f, y, clip.w - 1 - x, c);
      }
    }
  }
  return out;
}

AugmentedSample HFlipSample(const AugmentedSample& sample, const Taxonomy& taxonomy) {
  AugmentedSample out;
  out.clip = HFlipClip(sample.clip);
  out.labels = FlipLabelVector(sample.labels, taxonomy);
  out.applied = sample.applied;
  out.applied.push_back({"hflip", {}, std::nullopt});
  return out;
}

CutoutSquare PlanCutout(int h, int w, double side_fraction, std::uint64_t seed) {
  if (!(side_fraction > 0.0 && side_fraction <= 1.0)) {
    throw Error(ErrorKind::kValidity,
                "cutout side fraction must lie in (0, 1], got " + std::to_string(side_fraction));
  }
  const int min_side = std::min(h, w);
  const int side =
      std::clamp(static_cast<int>(std::lround(side_fraction * min_side)), 1, min_side);
  Rng rng(seed);
  CutoutSquare sq;
  sq.side = side;
  sq.y0 = static_cast<int>(rng.UniformInt(static_cast<std::uint64_t>(h - side + 1)));
  sq.x0 = static_cast<int>(rng.UniformInt(static_cast<std::uint64_t>(w - side + 1)));
  return sq;
}

FrameClip CutoutClip(const FrameClip& clip, double side_fraction, std::uint64_t seed) {
  clip.Validate();
  const CutoutSquare sq = PlanCutout(clip.h, clip.w, side_fraction, seed);
  FrameClip out = clip;
  for (int f = 0; f < clip.t; ++f) {
    for (int y = sq.y0; y < sq.y0 + sq.side; ++y) {
      auto row = out.data.begin() + static_cast<std::ptrdiff_t>(out.Offset(f, y, sq.x0, 0));
      std::fill(row, row + sq.side * 3, std::uint8_t{0});
    }
  }
  return out;
}

FrameClip UpsampleClip(const FrameClip& clip, int factor) {
  clip.Validate();
  if (factor < 1) {
    throw Error(ErrorKind::kValidity, "upsample factor must be >= 1, got " + std::to_string(factor));
  }
  if (factor == 1) return clip;
  FrameClip out = FrameClip::Filled(clip.clip_id, clip.t, clip.h * factor, clip.w * factor);
  for (int f = 0; f < out.t; ++f) {
    for (int y = 0; y < out.h; ++y) {
      for (int x = 0; x < out.w; ++x) {
        for (int c = 0; c < 3; ++c) out.at(f, y, x, c) = clip.at(f, y / factor, x / factor, c);
      }
    }
  }
  return out;
}

AugmentedSample ApplySchedule(const AugmentedSample& sample, int epoch,
                              const ScheduleOptions& options, std::uint64_t seed,
                              const Taxonomy& taxonomy) {
  if (!(options.probability >= 0.0 && options.probability <= 1.0)) {
    throw Error(ErrorKind::kValidity, "augmentation probability must lie in [0, 1]");
  }
  if (epoch < 1) {
    throw Error(ErrorKind::kValidity, "epoch must be >= 1, got " + std::to_string(epoch));
  }
  Rng rng(seed);
  const bool flip = rng.Bernoulli(options.probability);
  const bool cutout = rng.Bernoulli(options.probability);
  const std::uint64_t cutout_seed = rng.NextU64();
  if (epoch > options.cutoff_epoch) return sample;

  AugmentedSample out = flip ? HFlipSample(sample, taxonomy) : sample;
  if (cutout) {
    const CutoutSquare sq =
        PlanCutout(out.clip.h, out.clip.w, options.cutout_fraction, cutout_seed);
    out.clip = CutoutClip(out.clip, options.cutout_fraction, cutout_seed);
    out.applied.push_back({"cutout",
                           {{"side_fraction", options.cutout_fraction},
                            {"y0", sq.y0},
                            {"x0", sq.x0},
                            {"side", sq.side}},
                           cutout_seed});
  }
  return out;
}

}  // namespace atomact
