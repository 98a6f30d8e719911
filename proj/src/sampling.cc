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

#include "atomact/sampling.h"

#include <string>

#include "atomact/errors.h"

namespace atomact {

SamplingPlan PlanSequences(int n_frames, int seq_len) {
  if (seq_len < 1) {
    throw Error(ErrorKind::kValidity,
                "sequence length must be >= 1, got " + std::to_string(seq_len));
  }
  if (n_frames < seq_len) {
    throw Error(ErrorKind::kInsufficientFrames,
                "video has " + std::to_string(n_frames) + " frames, fewer than sequence length " +
                    std::to_string(seq_len));
  }
  SamplingPlan plan;
  plan.n_frames = n_frames;
  plan.seq_len = seq_len;
  plan.stride = n_frames / seq_len;
  plan.sequences.resize(plan.stride);
  for (int k = 0; k < plan.stride; ++k) {
    auto& seq = plan.sequences[k];
    seq.reserve(seq_len);
    for (int i = 0; i < seq_len; ++i) seq.push_back(k + i * plan.stride);
  }
  return plan;
}

int MiddleOffset(const SamplingPlan& plan) { return plan.stride / 2; }

const std::vector<int>& MiddleSequence(const SamplingPlan& plan) {
  return plan.sequences.at(MiddleOffset(plan));
}

}  // namespace atomact
