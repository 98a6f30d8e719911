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

#include "atomact/io.h"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace atomact {
namespace {

using nlohmann::json;

std::string Where(std::string_view origin, int line) {
  return std::string(origin) + ":" + std::to_string(line);
}

template <typename Fn>
void ForEachRecord(std::string_view text, std::string_view origin, Fn&& fn) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kParse, Where(origin, lineno) + ": malformed record: " + e.what());
    }
    if (!record.is_object() || !record.contains("clip_id") || !record["clip_id"].is_string()) {
      throw Error(ErrorKind::kParse, Where(origin, lineno) + ": record lacks string clip_id");
    }
    try {
      fn(record, lineno);
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kParse, Where(origin, lineno) + ": " + e.what());
    }
  }
}

}  // namespace

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFileAtomic(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kIo, "cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw Error(ErrorKind::kIo, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::kIo, "cannot rename " + tmp.string() + ": " + ec.message());
}

ScoreMatrix ParsePredictions(std::string_view text, std::string_view origin,
                             Eigen::Index expected_cols) {
  std::vector<std::string> ids;
  std::vector<std::vector<double>> rows;
  ForEachRecord(text, origin, [&](const json& record, int lineno) {
    if (!record.contains("scores") || !record["scores"].is_array()) {
      throw Error(ErrorKind::kParse, Where(origin, lineno) + ": record lacks a scores array");
    }
    auto row = record["scores"].get<std::vector<double>>();
    if (static_cast<Eigen::Index>(row.size()) != expected_cols) {
      throw Error(ErrorKind::kDimension, Where(origin, lineno) + ": " +
                                             std::to_string(row.size()) + " scores, expected " +
                                             std::to_string(expected_cols));
    }
    ids.push_back(record["clip_id"].get<std::string>());
    rows.push_back(std::move(row));
  });
  ScoreMatrix m;
  m.clip_ids = std::move(ids);
  m.scores.resize(static_cast<Eigen::Index>(rows.size()), expected_cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (Eigen::Index j = 0; j < expected_cols; ++j) m.scores(i, j) = rows[i][j];
  }
  try {
    m.Validate(expected_cols);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(origin) + ": " + e.what());
  }
  return m;
}

std::string FormatPredictions(const ScoreMatrix& m) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json record;
    record["clip_id"] = m.clip_ids[i];
    std::vector<double> row(m.scores.row(i).data(), m.scores.row(i).data() + m.cols());
    record["scores"] = row;
    out += record.dump();
    out += '\n';
  }
  return out;
}

ScoreMatrix ReadPredictions(const std::filesystem::path& path) {
  return ParsePredictions(ReadFile(path), path.string());
}

void WritePredictions(const std::filesystem::path& path, const ScoreMatrix& m) {
  WriteFileAtomic(path, FormatPredictions(m));
}

BranchScores ReadBranchScores(const std::filesystem::path& path, Branch branch,
                              const Taxonomy& taxonomy) {
  const std::string text = ReadFile(path);
  // Width is taken from the first record; ParsePredictions enforces it on all.
  Eigen::Index width = kNumClasses;
  {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        const auto record = json::parse(line);
        if (record.contains("scores") && record["scores"].is_array()) {
          width = static_cast<Eigen::Index>(record["scores"].size());
        }
      } catch (const json::exception&) {
      }
      break;
    }
  }
  if (width == kNumClasses) {
    return ProjectBranch(ParsePredictions(text, path.string()), branch, taxonomy);
  }
  if (width != kNumBranchClasses) {
    throw Error(ErrorKind::kDimension, path.string() + ": branch file rows have " +
                                           std::to_string(width) + " scores, expected 32 or 64");
  }
  ScoreMatrix m = ParsePredictions(text, path.string(), kNumBranchClasses);
  return {std::move(m.clip_ids), std::move(m.scores), branch, taxonomy.partition().of(branch)};
}

LabelMatrix ParseTruth(std::string_view text, const Taxonomy& taxonomy, std::string_view origin) {
  std::vector<std::string> ids;
  std::vector<std::vector<int>> positives;
  ForEachRecord(text, origin, [&](const json& record, int lineno) {
    if (!record.contains("labels") || !record["labels"].is_array()) {
      throw Error(ErrorKind::kParse, Where(origin, lineno) + ": record lacks a labels array");
    }
    std::vector<int> cls;
    for (const auto& name : record["labels"]) {
      if (!name.is_string()) {
        throw Error(ErrorKind::kParse, Where(origin, lineno) + ": labels must be class names");
      }
      try {
        cls.push_back(taxonomy.IndexOfName(name.get<std::string>()));
      } catch (const Error& e) {
        throw Error(e.kind(), Where(origin, lineno) + ": " + e.what());
      }
    }
    ids.push_back(record["clip_id"].get<std::string>());
    positives.push_back(std::move(cls));
  });
  LabelMatrix m;
  m.clip_ids = std::move(ids);
  m.labels = LabelMatrix::Matrix::Zero(static_cast<Eigen::Index>(positives.size()), kNumClasses);
  for (std::size_t i = 0; i < positives.size(); ++i) {
    for (int c : positives[i]) m.labels(i, c) = 1;
  }
  try {
    m.Validate();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(origin) + ": " + e.what());
  }
  return m;
}

std::string FormatTruth(const LabelMatrix& m, const Taxonomy& taxonomy) {
  std::string out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json record;
    record["clip_id"] = m.clip_ids[i];
    json labels = json::array();
    for (int c = 0; c < kNumClasses; ++c) {
      if (m.labels(i, c)) labels.push_back(taxonomy.name(c));
    }
    record["labels"] = std::move(labels);
    out += record.dump();
    out += '\n';
  }
  return out;
}

LabelMatrix ReadTruth(const std::filesystem::path& path, const Taxonomy& taxonomy) {
  return ParseTruth(ReadFile(path), taxonomy, path.string());
}

void WriteTruth(const std::filesystem::path& path, const LabelMatrix& m,
                const Taxonomy& taxonomy) {
  WriteFileAtomic(path, FormatTruth(m, taxonomy));
}

}  // namespace atomact
