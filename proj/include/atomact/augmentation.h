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

#ifndef ATOMACT_AUGMENTATION_H_
#define ATOMACT_AUGMENTATION_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "atomact/taxonomy.h"

namespace atomact {

// T x H x W x 3 RGB clip, stored frame-major with interleaved channels.
struct FrameClip {
  std::string clip_id;
  int t = 0;
  int h = 0;
  int w = 0;
  std::vector<std::uint8_t> data;

  static FrameClip Filled(std::string clip_id, int t, int h, int w,
                          std::uint8_t value = 0);

  std::size_t Offset(int frame, int y, int x, int c) const {
    return ((static_cast<std::size_t>(frame) * h + y) * w + x) * 3 + c;
  }
  std::uint8_t& at(int frame, int y, int x, int c) { return data[Offset(frame, y, x, c)]; }
  std::uint8_t at(int frame, int y, int x, int c) const {
    return data[Offset(frame, y, x, c)];
  }

  // Throws kDimension unless t, h, w >= 1 and data.size() == t*h*w*3.
  void Validate() const;

  friend bool operator==(const FrameClip&, const FrameClip&) = default;
};

using LabelVector = Eigen::Matrix<std::uint8_t, kNumClasses, 1>;

struct TransformRecord {
  std::string name;
  std::vector<std::pair<std::string, double>> params;
  std::optional<std::uint64_t> seed;

  friend bool operator==(const TransformRecord&, const TransformRecord&) = default;
};

struct AugmentedSample {
  FrameClip clip;
  LabelVector labels = LabelVector::Zero();
  std::vector<TransformRecord> applied;
};

FrameClip HFlipClip(const FrameClip& clip);

// Flips pixels and remaps labels through the taxonomy's flip permutation.
AugmentedSample HFlipSample(const AugmentedSample& sample,
                            const Taxonomy& taxonomy = Taxonomy::Canonical());

struct CutoutSquare {
  int y0 = 0;
  int x0 = 0;
  int side = 0;

  friend bool operator==(const CutoutSquare&, const CutoutSquare&) = default;
};

inline constexpr double kDefaultCutoutFraction = 0.25;

// Side is max(1, round(fraction * min(h, w))); the top-left corner is drawn
// uniformly over valid positions from Rng(seed). fraction must lie in (0, 1].
CutoutSquare PlanCutout(int h, int w, double side_fraction, std::uint64_t seed);

// Zeroes the planned square in every frame at the same position.
FrameClip CutoutClip(const FrameClip& clip, double side_fraction, std::uint64_t seed);

// Nearest-neighbour replication by an integer factor >= 1.
FrameClip UpsampleClip(const FrameClip& clip, int factor);

struct ScheduleOptions {
  double probability = 0.5;
  int cutoff_epoch = 50;
  double cutout_fraction = kDefaultCutoutFraction;
};

// Training-time schedule: while epoch <= cutoff_epoch, flip and cutout are
// each applied independently with the given probability. Both coin flips and
// the cutout seed are always drawn, in that order, from Rng(seed).
AugmentedSample ApplySchedule(const AugmentedSample& sample, int epoch,
                              const ScheduleOptions& options, std::uint64_t seed,
                              const Taxonomy& taxonomy = Taxonomy::Canonical());

}  // namespace atomact

#endif  // ATOMACT_AUGMENTATION_H_
