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

#ifndef ATOMACT_SCORES_H_
#define ATOMACT_SCORES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "atomact/errors.h"
#include "atomact/taxonomy.h"

namespace atomact {

template <typename Scalar>
using RowMajorMatrix =
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

// Provenance of a score matrix. Fusion keeps the fields all sources agree on.
struct SourceTag {
  std::optional<std::string> backbone;
  std::optional<int> seq_len;
  std::optional<int> epoch;
  std::optional<int> offset;

  friend bool operator==(const SourceTag&, const SourceTag&) = default;
};

inline SourceTag CommonTag(const SourceTag& a, const SourceTag& b) {
  SourceTag out;
  if (a.backbone == b.backbone) out.backbone = a.backbone;
  if (a.seq_len == b.seq_len) out.seq_len = a.seq_len;
  if (a.epoch == b.epoch) out.epoch = a.epoch;
  if (a.offset == b.offset) out.offset = a.offset;
  return out;
}

// Per-clip, per-class prediction scores in [0, 1]. Row i belongs to
// clip_ids[i].
template <typename Scalar>
struct BasicScoreMatrix {
  using Matrix = RowMajorMatrix<Scalar>;

  std::vector<std::string> clip_ids;
  Matrix scores;
  SourceTag tag;

  Eigen::Index rows() const { return scores.rows(); }
  Eigen::Index cols() const { return scores.cols(); }

  void Validate(Eigen::Index expected_cols = kNumClasses) const;
};

using ScoreMatrix = BasicScoreMatrix<double>;

// Per-clip multi-hot ground truth.
struct LabelMatrix {
  using Matrix = RowMajorMatrix<std::uint8_t>;

  std::vector<std::string> clip_ids;
  Matrix labels;

  Eigen::Index rows() const { return labels.rows(); }

  // Throws kValidity on entries other than 0/1 or duplicate clip ids and
  // kDimension on shape mismatch.
  void Validate() const;
};

namespace internal {

inline void CheckUniqueIds(const std::vector<std::string>& ids) {
  std::set<std::string_view> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) {
      throw Error(ErrorKind::kValidity, "duplicate clip_id '" + id + "'");
    }
  }
}

inline std::vector<Eigen::Index> SortedOrder(const std::vector<std::string>& ids) {
  std::vector<Eigen::Index> order(ids.size());
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return ids[a] < ids[b]; });
  return order;
}

template <typename Derived>
RowMajorMatrix<typename Derived::Scalar> PermuteRows(const Eigen::MatrixBase<Derived>& m,
                                                     const std::vector<Eigen::Index>& order) {
  RowMajorMatrix<typename Derived::Scalar> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < order.size(); ++i) out.row(i) = m.row(order[i]);
  return out;
}

inline std::vector<std::string> PermuteIds(const std::vector<std::string>& ids,
                                           const std::vector<Eigen::Index>& order) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (auto i : order) out.push_back(ids[i]);
  return out;
}

inline std::string JoinIds(const std::vector<std::string>& ids) {
  constexpr std::size_t kShown = 10;
  std::string out;
  for (std::size_t i = 0; i < ids.size() && i < kShown; ++i) {
    if (i) out += ", ";
    out += ids[i];
  }
  if (ids.size() > kShown) out += ", ... (" + std::to_string(ids.size()) + " total)";
  return out;
}

}  // namespace internal

// Throws kAlignment listing the clip ids missing from / extra in `other`
// relative to `reference`. Both must be sorted.
inline void CheckSameClips(const std::vector<std::string>& reference,
                           const std::vector<std::string>& other, std::string_view what) {
  if (reference == other) return;
  std::vector<std::string> missing;
  std::vector<std::string> extra;
  std::set_difference(reference.begin(), reference.end(), other.begin(), other.end(),
                      std::back_inserter(missing));
  std::set_difference(other.begin(), other.end(), reference.begin(), reference.end(),
                      std::back_inserter(extra));
  std::string msg = std::string(what) + ": clip sets differ";
  if (!missing.empty()) msg += "; missing clip_ids: " + internal::JoinIds(missing);
  if (!extra.empty()) msg += "; extra clip_ids: " + internal::JoinIds(extra);
  throw Error(ErrorKind::kAlignment, msg);
}

template <typename Scalar>
void BasicScoreMatrix<Scalar>::Validate(Eigen::Index expected_cols) const {
  if (scores.cols() != expected_cols) {
    throw Error(ErrorKind::kDimension, "score matrix has " + std::to_string(scores.cols()) +
                                           " columns, expected " + std::to_string(expected_cols));
  }
  if (static_cast<std::size_t>(scores.rows()) != clip_ids.size()) {
    throw Error(ErrorKind::kDimension, "score matrix has " + std::to_string(scores.rows()) +
                                           " rows but " + std::to_string(clip_ids.size()) +
                                           " clip ids");
  }
  internal::CheckUniqueIds(clip_ids);
  for (Eigen::Index i = 0; i < scores.rows(); ++i) {
    for (Eigen::Index j = 0; j < scores.cols(); ++j) {
      const Scalar v = scores(i, j);
      if (!(v >= Scalar(0) && v <= Scalar(1))) {
        throw Error(ErrorKind::kValidity, "score for clip '" + clip_ids[i] + "' column " +
                                              std::to_string(j) + " is outside [0, 1]");
      }
    }
  }
}

inline void LabelMatrix::Validate() const {
  if (labels.cols() != kNumClasses) {
    throw Error(ErrorKind::kDimension, "label matrix has " + std::to_string(labels.cols()) +
                                           " columns, expected 64");
  }
  if (static_cast<std::size_t>(labels.rows()) != clip_ids.size()) {
    throw Error(ErrorKind::kDimension, "label matrix rows do not match clip ids");
  }
  internal::CheckUniqueIds(clip_ids);
  for (Eigen::Index i = 0; i < labels.rows(); ++i) {
    for (Eigen::Index j = 0; j < labels.cols(); ++j) {
      if (labels(i, j) > 1) {
        throw Error(ErrorKind::kValidity, "label for clip '" + clip_ids[i] + "' column " +
                                              std::to_string(j) + " is not binary");
      }
    }
  }
}

// Rows reordered by ascending clip id.
template <typename Scalar>
BasicScoreMatrix<Scalar> SortedByClipId(const BasicScoreMatrix<Scalar>& m) {
  const auto order = internal::SortedOrder(m.clip_ids);
  return {internal::PermuteIds(m.clip_ids, order), internal::PermuteRows(m.scores, order), m.tag};
}

inline LabelMatrix SortedByClipId(const LabelMatrix& m) {
  const auto order = internal::SortedOrder(m.clip_ids);
  return {internal::PermuteIds(m.clip_ids, order), internal::PermuteRows(m.labels, order)};
}

}  // namespace atomact

#endif  // ATOMACT_SCORES_H_
