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

#ifndef ATOMACT_IO_H_
#define ATOMACT_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "atomact/ensemble.h"
#include "atomact/scores.h"
#include "atomact/taxonomy.h"

namespace atomact {

// Whole-file helpers. WriteFileAtomic writes a sibling temp file and renames
// it over `path`.
std::string ReadFile(const std::filesystem::path& path);
void WriteFileAtomic(const std::filesystem::path& path, std::string_view content);

// Prediction files: one JSON record per line,
//   {"clip_id": "<id>", "scores": [<64 reals in [0,1]>]}
// `origin` prefixes error messages ("file:line").
ScoreMatrix ParsePredictions(std::string_view text, std::string_view origin = "<predictions>",
                             Eigen::Index expected_cols = kNumClasses);
std::string FormatPredictions(const ScoreMatrix& m);
ScoreMatrix ReadPredictions(const std::filesystem::path& path);
void WritePredictions(const std::filesystem::path& path, const ScoreMatrix& m);

// Branch outputs use the prediction record format with either 32 scores (in
// the branch partition's ascending class order) or 64 scores (projected).
BranchScores ReadBranchScores(const std::filesystem::path& path, Branch branch,
                              const Taxonomy& taxonomy = Taxonomy::Canonical());

// Truth files: {"clip_id": "<id>", "labels": ["Z1-Z4:C+", ...]} per line.
LabelMatrix ParseTruth(std::string_view text, const Taxonomy& taxonomy,
                       std::string_view origin = "<truth>");
std::string FormatTruth(const LabelMatrix& m, const Taxonomy& taxonomy);
LabelMatrix ReadTruth(const std::filesystem::path& path,
                      const Taxonomy& taxonomy = Taxonomy::Canonical());
void WriteTruth(const std::filesystem::path& path, const LabelMatrix& m,
                const Taxonomy& taxonomy = Taxonomy::Canonical());

}  // namespace atomact

#endif  // ATOMACT_IO_H_
