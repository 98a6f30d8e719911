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

#ifndef ATOMACT_EVALUATION_H_
#define ATOMACT_EVALUATION_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "atomact/errors.h"
#include "atomact/scores.h"
#include "atomact/taxonomy.h"

namespace atomact {

// Uninterpolated average precision: clips are ranked by descending score
// (ties keep their input order) and AP is the mean of precision@k over the
// ranks k holding a positive. Returns nullopt when there are no positives.
template <typename ScoreDerived, typename LabelDerived>
std::optional<double> AveragePrecision(const Eigen::DenseBase<ScoreDerived>& scores,
                                       const Eigen::DenseBase<LabelDerived>& labels) {
  const Eigen::Index n = scores.size();
  if (n != labels.size() || n < 1) {
    throw Error(ErrorKind::kDimension, "average precision: " + std::to_string(n) + " scores vs " +
                                           std::to_string(labels.size()) + " labels");
  }
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!std::isfinite(static_cast<double>(scores(i)))) {
      throw Error(ErrorKind::kValidity, "average precision: non-finite score");
    }
    if (labels(i) != 0 && labels(i) != 1) {
      throw Error(ErrorKind::kValidity, "average precision: labels must be 0 or 1");
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return scores(a) > scores(b); });
  double sum = 0.0;
  long hits = 0;
  for (Eigen::Index rank = 0; rank < n; ++rank) {
    if (labels(order[rank]) == 1) {
      ++hits;
      sum += static_cast<double>(hits) / static_cast<double>(rank + 1);
    }
  }
  if (hits == 0) return std::nullopt;
  return sum / static_cast<double>(hits);
}

struct EvalReport {
  std::array<std::optional<double>, kNumClasses> per_class_ap{};
  std::optional<double> map;
  // Indexed like kAllAgents: C, C+, K, K+, P, P+.
  std::array<std::optional<double>, kNumAgents> group_map{};
  int n_clips = 0;
  std::vector<int> excluded_classes;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

namespace internal {

inline std::optional<double> MeanDefined(const EvalReport& report, const std::vector<int>& classes) {
  double sum = 0.0;
  int count = 0;
  for (int c : classes) {
    if (report.per_class_ap[c]) {
      sum += *report.per_class_ap[c];
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return sum / count;
}

}  // namespace internal

// Per-class AP over clips aligned by sorted clip id, with overall and
// per-agent means over classes that have at least one positive.
template <typename Scalar>
EvalReport Evaluate(const BasicScoreMatrix<Scalar>& predictions, const LabelMatrix& truth,
                    const Taxonomy& taxonomy = Taxonomy::Canonical()) {
  predictions.Validate();
  truth.Validate();
  const auto pred = SortedByClipId(predictions);
  const auto gt = SortedByClipId(truth);
  CheckSameClips(gt.clip_ids, pred.clip_ids, "evaluate predictions");
  if (gt.clip_ids.empty()) throw Error(ErrorKind::kEmptyInput, "evaluate: no clips");

  EvalReport report;
  report.n_clips = static_cast<int>(gt.clip_ids.size());
  std::vector<int> all(kNumClasses);
  std::iota(all.begin(), all.end(), 0);
  for (int c = 0; c < kNumClasses; ++c) {
    report.per_class_ap[c] = AveragePrecision(pred.scores.col(c), gt.labels.col(c));
    if (!report.per_class_ap[c]) report.excluded_classes.push_back(c);
  }
  report.map = internal::MeanDefined(report, all);
  for (int g = 0; g < kNumAgents; ++g) {
    report.group_map[g] = internal::MeanDefined(report, taxonomy.agent_classes()[g]);
  }
  return report;
}

}  // namespace atomact

#endif  // ATOMACT_EVALUATION_H_
