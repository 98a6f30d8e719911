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

#ifndef ATOMACT_SAMPLING_H_
#define ATOMACT_SAMPLING_H_

#include <vector>

namespace atomact {

// Stride-phase frame sampling over one video. Sequence k holds frames
// k, k + stride, ..., k + (seq_len - 1) * stride with
// stride = floor(n_frames / seq_len); frames past stride * seq_len are unused.
struct SamplingPlan {
  int n_frames = 0;
  int seq_len = 0;
  int stride = 0;
  std::vector<std::vector<int>> sequences;
};

// Throws kInsufficientFrames when n_frames < seq_len and kValidity when
// seq_len < 1.
SamplingPlan PlanSequences(int n_frames, int seq_len);

// Offset of the baseline sequence: floor(stride / 2).
int MiddleOffset(const SamplingPlan& plan);
const std::vector<int>& MiddleSequence(const SamplingPlan& plan);

}  // namespace atomact

#endif  // ATOMACT_SAMPLING_H_
