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

#ifndef ATOMACT_ENSEMBLE_H_
#define ATOMACT_ENSEMBLE_H_

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "atomact/errors.h"
#include "atomact/scores.h"
#include "atomact/taxonomy.h"

namespace atomact {

enum class FuseOp { kMean, kMax, kMedian };

std::string_view FuseOpName(FuseOp op);
FuseOp ParseFuseOp(std::string_view name);

inline constexpr double kDefaultCombineWeight = 0.5;

// Scores of one branch model over its 32 classes. Column k holds class
// class_map[k].
template <typename Scalar>
struct BasicBranchScores {
  std::vector<std::string> clip_ids;
  RowMajorMatrix<Scalar> scores;
  Branch branch = Branch::kSingle;
  std::vector<int> class_map;
};

using BranchScores = BasicBranchScores<double>;

namespace internal {

// Reduces one cell's source values. Values are sorted first so the result
// does not depend on source order.
template <typename Scalar>
Scalar ReduceCell(std::vector<Scalar>& values, FuseOp op) {
  std::sort(values.begin(), values.end());
  const Scalar lo = values.front();
  const Scalar hi = values.back();
  if (lo == hi) return lo;
  const std::size_t n = values.size();
  switch (op) {
    case FuseOp::kMax:
      return hi;
    case FuseOp::kMedian:
      if (n % 2 == 1) return values[n / 2];
      return std::clamp((values[n / 2 - 1] + values[n / 2]) / Scalar(2), lo, hi);
    case FuseOp::kMean:
    default: {
      Scalar sum(0);
      for (const Scalar v : values) sum += v;
      return std::clamp(sum / static_cast<Scalar>(n), lo, hi);
    }
  }
}

// Elementwise reduction over same-shaped, row-aligned matrices.
template <typename Scalar>
RowMajorMatrix<Scalar> FuseAligned(const std::vector<const RowMajorMatrix<Scalar>*>& mats,
                                   FuseOp op) {
  const auto rows = mats.front()->rows();
  const auto cols = mats.front()->cols();
  RowMajorMatrix<Scalar> out(rows, cols);
  std::vector<Scalar> cell(mats.size());
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) {
      for (std::size_t k = 0; k < mats.size(); ++k) cell[k] = (*mats[k])(i, j);
      out(i, j) = ReduceCell(cell, op);
    }
  }
  return out;
}

template <typename Scalar>
void CheckRowsMatch(const RowMajorMatrix<Scalar>& m, const std::vector<std::string>& ids) {
  if (static_cast<std::size_t>(m.rows()) != ids.size()) {
    throw Error(ErrorKind::kDimension, "score rows do not match clip ids");
  }
}

}  // namespace internal

// Elementwise Mean/Max/Median over sources aligned by sorted clip id. The
// output rows are in sorted clip-id order.
template <typename Scalar>
BasicScoreMatrix<Scalar> Fuse(std::span<const BasicScoreMatrix<Scalar>> sources, FuseOp op) {
  if (sources.empty()) throw Error(ErrorKind::kEmptyInput, "fuse: no sources given");
  std::vector<BasicScoreMatrix<Scalar>> sorted;
  sorted.reserve(sources.size());
  for (std::size_t k = 0; k < sources.size(); ++k) {
    sources[k].Validate();
    sorted.push_back(SortedByClipId(sources[k]));
    if (k > 0) {
      CheckSameClips(sorted.front().clip_ids, sorted.back().clip_ids,
                     "fuse source " + std::to_string(k));
    }
  }
  std::vector<const RowMajorMatrix<Scalar>*> mats;
  SourceTag tag = sorted.front().tag;
  for (const auto& s : sorted) {
    mats.push_back(&s.scores);
    tag = CommonTag(tag, s.tag);
  }
  return {sorted.front().clip_ids, internal::FuseAligned(mats, op), tag};
}

template <typename Scalar>
BasicScoreMatrix<Scalar> Fuse(const std::vector<BasicScoreMatrix<Scalar>>& sources, FuseOp op) {
  return Fuse(std::span<const BasicScoreMatrix<Scalar>>(sources), op);
}

// Same reduction for branch outputs; all inputs must share branch and class map.
template <typename Scalar>
BasicBranchScores<Scalar> FuseBranches(std::span<const BasicBranchScores<Scalar>> sources,
                                       FuseOp op) {
  if (sources.empty()) throw Error(ErrorKind::kEmptyInput, "fuse: no branch sources given");
  std::vector<RowMajorMatrix<Scalar>> sorted;
  std::vector<std::string> ids;
  for (std::size_t k = 0; k < sources.size(); ++k) {
    const auto& s = sources[k];
    internal::CheckRowsMatch(s.scores, s.clip_ids);
    if (s.branch != sources.front().branch || s.class_map != sources.front().class_map) {
      throw Error(ErrorKind::kPartition,
                  "fuse: branch sources disagree on branch or class map");
    }
    const auto order = internal::SortedOrder(s.clip_ids);
    auto sorted_ids = internal::PermuteIds(s.clip_ids, order);
    if (k == 0) {
      ids = std::move(sorted_ids);
    } else {
      CheckSameClips(ids, sorted_ids, "fuse branch source " + std::to_string(k));
    }
    sorted.push_back(internal::PermuteRows(s.scores, order));
  }
  std::vector<const RowMajorMatrix<Scalar>*> mats;
  for (const auto& m : sorted) mats.push_back(&m);
  return {ids, internal::FuseAligned(mats, op), sources.front().branch,
          sources.front().class_map};
}

// Restricts a 64-column matrix to one branch's classes.
template <typename Scalar>
BasicBranchScores<Scalar> ProjectBranch(const BasicScoreMatrix<Scalar>& m, Branch branch,
                                        const Taxonomy& taxonomy = Taxonomy::Canonical()) {
  m.Validate();
  const auto& classes = taxonomy.partition().of(branch);
  BasicBranchScores<Scalar> out{m.clip_ids, RowMajorMatrix<Scalar>(m.rows(), classes.size()),
                                branch, classes};
  for (std::size_t k = 0; k < classes.size(); ++k) out.scores.col(k) = m.scores.col(classes[k]);
  return out;
}

// Scatters the single-object and object-group branch outputs back into the
// 64-class space. Arguments may come in either order; together they must
// cover every class exactly once, each matching its declared branch.
template <typename Scalar>
BasicScoreMatrix<Scalar> MergeBranches(const BasicBranchScores<Scalar>& a,
                                       const BasicBranchScores<Scalar>& b,
                                       const Taxonomy& taxonomy = Taxonomy::Canonical()) {
  std::array<int, kNumClasses> owners{};
  owners.fill(-1);
  const BasicBranchScores<Scalar>* branches[2] = {&a, &b};
  for (int which = 0; which < 2; ++which) {
    const auto& br = *branches[which];
    if (static_cast<Eigen::Index>(br.class_map.size()) != br.scores.cols()) {
      throw Error(ErrorKind::kDimension, "branch class map size does not match score columns");
    }
    internal::CheckRowsMatch(br.scores, br.clip_ids);
    for (int cls : br.class_map) {
      if (cls < 0 || cls >= kNumClasses) {
        throw Error(ErrorKind::kPartition, "branch class index " + std::to_string(cls) +
                                               " outside 0..63");
      }
      if (owners[cls] != -1) {
        throw Error(ErrorKind::kPartition,
                    "class '" + taxonomy.name(cls) + "' claimed by more than one branch");
      }
      owners[cls] = which;
    }
  }
  for (int cls = 0; cls < kNumClasses; ++cls) {
    if (owners[cls] == -1) {
      throw Error(ErrorKind::kPartition,
                  "class '" + taxonomy.name(cls) + "' not covered by any branch");
    }
  }
  for (const auto* br : branches) {
    auto expected = taxonomy.partition().of(br->branch);
    auto got = br->class_map;
    std::sort(got.begin(), got.end());
    if (got != expected) {
      throw Error(ErrorKind::kPartition, "class map of the " + std::string(BranchName(br->branch)) +
                                             " branch does not match its partition");
    }
  }

  const auto order_a = internal::SortedOrder(a.clip_ids);
  const auto order_b = internal::SortedOrder(b.clip_ids);
  auto ids = internal::PermuteIds(a.clip_ids, order_a);
  CheckSameClips(ids, internal::PermuteIds(b.clip_ids, order_b), "merge_branches");
  const RowMajorMatrix<Scalar> sa = internal::PermuteRows(a.scores, order_a);
  const RowMajorMatrix<Scalar> sb = internal::PermuteRows(b.scores, order_b);

  BasicScoreMatrix<Scalar> out{std::move(ids), RowMajorMatrix<Scalar>(sa.rows(), kNumClasses), {}};
  for (std::size_t k = 0; k < a.class_map.size(); ++k) out.scores.col(a.class_map[k]) = sa.col(k);
  for (std::size_t k = 0; k < b.class_map.size(); ++k) out.scores.col(b.class_map[k]) = sb.col(k);
  return out;
}

// weight * merged + (1 - weight) * standard, aligned by sorted clip id.
template <typename Scalar>
BasicScoreMatrix<Scalar> CombineWithStandard(const BasicScoreMatrix<Scalar>& merged,
                                             const BasicScoreMatrix<Scalar>& standard,
                                             Scalar weight = Scalar(kDefaultCombineWeight)) {
  if (!(weight >= Scalar(0) && weight <= Scalar(1))) {
    throw Error(ErrorKind::kValidity, "combine weight must lie in [0, 1]");
  }
  merged.Validate();
  standard.Validate();
  auto m = SortedByClipId(merged);
  const auto s = SortedByClipId(standard);
  CheckSameClips(m.clip_ids, s.clip_ids, "combine");
  if (weight == Scalar(1)) return m;
  if (weight == Scalar(0)) return s;
  // Convex combination, clamped so rounding cannot leave [min, max].
  m.scores = (weight * m.scores.array() + (Scalar(1) - weight) * s.scores.array())
                 .max(m.scores.array().min(s.scores.array()))
                 .min(m.scores.array().max(s.scores.array()))
                 .matrix();
  m.tag = CommonTag(m.tag, s.tag);
  return m;
}

}  // namespace atomact

#endif  // ATOMACT_ENSEMBLE_H_
