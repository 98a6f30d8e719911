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

#include <filesystem>
#include <random>

#include "atomact/clip_io.h"
#include "atomact/config.h"
#include "gtest/gtest.h"

namespace atomact {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  explicit TempDir(const std::string& name) : path_(fs::temp_directory_path() / name) {
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void ExpectErrorContains(const std::function<void()>& fn, ErrorKind kind,
                         const std::string& fragment) {
  try {
    fn();
    ADD_FAILURE() << "no error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(Predictions, FormatParseRoundTripIsExact) {
  std::mt19937_64 gen(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    ScoreMatrix m;
    for (int i = 0; i < 7; ++i) m.clip_ids.push_back("v" + std::to_string(trial) + "_" + std::to_string(i));
    m.scores.resize(7, kNumClasses);
    for (int i = 0; i < 7; ++i)
      for (int j = 0; j < kNumClasses; ++j) m.scores(i, j) = u(gen);
    const ScoreMatrix back = ParsePredictions(FormatPredictions(m));
    EXPECT_EQ(back.clip_ids, m.clip_ids);
    EXPECT_EQ(back.scores, m.scores);
  }
}

TEST(Predictions, ParseErrorsNameTheLine) {
  std::string row = "{\"clip_id\": \"a\", \"scores\": [";
  for (int j = 0; j < kNumClasses; ++j) row += j ? ",0.5" : "0.5";
  row += "]}\n";
  EXPECT_EQ(ParsePredictions(row + "\n" + row.substr(0, 13) + "b" + row.substr(14)).rows(), 2);
  ExpectErrorContains([&] { ParsePredictions(row + "{oops\n", "p.jsonl"); }, ErrorKind::kParse,
                      "p.jsonl:2");
  ExpectErrorContains(
      [&] { ParsePredictions("{\"clip_id\": \"a\", \"scores\": [0.1, 0.2]}\n", "p.jsonl"); },
      ErrorKind::kDimension, "p.jsonl:1: 2 scores, expected 64");
  ExpectErrorContains([&] { ParsePredictions("{\"scores\": []}\n", "p.jsonl"); },
                      ErrorKind::kParse, "clip_id");
  ExpectErrorContains([&] { ParsePredictions(row + row, "p.jsonl"); }, ErrorKind::kValidity,
                      "duplicate clip_id 'a'");
  std::string high = row;
  high.replace(high.find("0.5"), 3, "1.5");
  ExpectErrorContains([&] { ParsePredictions(high, "p.jsonl"); }, ErrorKind::kValidity,
                      "outside [0, 1]");
}

TEST(Truth, RoundTripAndUnknownClass) {
  const Taxonomy& tax = Taxonomy::Canonical();
  const std::string text =
      "{\"clip_id\": \"x\", \"labels\": [\"Z1-Z4:C+\", \"c1-c2:p\"]}\n"
      "{\"clip_id\": \"y\", \"labels\": []}\n";
  const LabelMatrix m = ParseTruth(text, tax);
  EXPECT_EQ(m.labels.row(0).cast<int>().sum(), 2);
  EXPECT_EQ(m.labels(0, tax.IndexOfName("Z1-Z4:C+")), 1);
  EXPECT_EQ(m.labels.row(1).cast<int>().sum(), 0);
  const LabelMatrix back = ParseTruth(FormatTruth(m, tax), tax);
  EXPECT_EQ(back.labels, m.labels);
  EXPECT_EQ(back.clip_ids, m.clip_ids);

  ExpectErrorContains(
      [&] { ParseTruth("{\"clip_id\": \"x\", \"labels\": [\"Z9-Z1:C\"]}\n", tax, "t.jsonl"); },
      ErrorKind::kParse, "t.jsonl:1");
  ExpectErrorContains(
      [&] { ParseTruth("{\"clip_id\": \"x\", \"labels\": [\"C1-C3:P\"]}\n", tax, "t.jsonl"); },
      ErrorKind::kValidity, "adjacent");
}

TEST(BranchFiles, ThirtyTwoOrSixtyFourColumns) {
  TempDir dir("atomact_branch_io");
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ScoreMatrix full{{"a", "b"}, RowMajorMatrix<double>(2, kNumClasses), {}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < kNumClasses; ++j) full.scores(i, j) = u(gen);
  WritePredictions(dir.path() / "full.jsonl", full);
  const BranchScores projected = ReadBranchScores(dir.path() / "full.jsonl", Branch::kGroup);
  EXPECT_EQ(projected.class_map, GetBranchPartition().group);

  ScoreMatrix narrow{{"a", "b"}, projected.scores, {}};
  WriteFileAtomic(dir.path() / "narrow.jsonl", FormatPredictions(narrow));
  const BranchScores direct = ReadBranchScores(dir.path() / "narrow.jsonl", Branch::kGroup);
  EXPECT_EQ(direct.scores, projected.scores);

  ScoreMatrix odd{{"a"}, RowMajorMatrix<double>::Constant(1, 10, 0.5), {}};
  WriteFileAtomic(dir.path() / "odd.jsonl", FormatPredictions(odd));
  EXPECT_THROW(ReadBranchScores(dir.path() / "odd.jsonl", Branch::kSingle), Error);
}

TEST(Files, AtomicWriteAndMissingFile) {
  TempDir dir("atomact_files");
  WriteFileAtomic(dir.path() / "sub" / "a.txt", "hello");
  EXPECT_EQ(ReadFile(dir.path() / "sub" / "a.txt"), "hello");
  EXPECT_FALSE(fs::exists(dir.path() / "sub" / "a.txt.tmp"));
  ExpectErrorContains([&] { ReadFile(dir.path() / "nope"); }, ErrorKind::kIo, "nope");
}

FrameClip RandomClip(std::mt19937_64& gen, std::string id, int t, int h, int w) {
  FrameClip clip = FrameClip::Filled(std::move(id), t, h, w);
  for (auto& b : clip.data) b = static_cast<std::uint8_t>(gen());
  return clip;
}

TEST(ClipIo, RawLayout) {
  FrameClip clip = FrameClip::Filled("c", 1, 1, 2);
  clip.data = {1, 2, 3, 4, 5, 6};
  const std::string bytes = EncodeRawClip(clip);
  ASSERT_EQ(bytes.size(), 16u + 6u);
  EXPECT_EQ(bytes.substr(0, 4), "ACLP");
  EXPECT_EQ(bytes[4], 1);
  EXPECT_EQ(bytes[8], 1);
  EXPECT_EQ(bytes[12], 2);
  // Planar: R plane, G plane, B plane.
  EXPECT_EQ(bytes.substr(16), std::string("\x01\x04\x02\x05\x03\x06", 6));
  EXPECT_EQ(DecodeRawClip(bytes, "c"), clip);
}

TEST(ClipIo, RawRoundTripAndErrors) {
  std::mt19937_64 gen(3);
  TempDir dir("atomact_raw");
  const FrameClip clip = RandomClip(gen, "clip7", 3, 5, 4);
  WriteRawClip(dir.path() / "clip7.clip", clip);
  EXPECT_EQ(ReadRawClip(dir.path() / "clip7.clip"), clip);
  std::string bytes = EncodeRawClip(clip);
  EXPECT_THROW(DecodeRawClip(bytes.substr(0, bytes.size() - 1), "x"), Error);
  bytes[0] = 'X';
  EXPECT_THROW(DecodeRawClip(bytes, "x"), Error);
}

TEST(ClipIo, PngRoundTrip) {
  std::mt19937_64 gen(4);
  TempDir dir("atomact_png");
  const FrameClip clip = RandomClip(gen, "scene", 3, 6, 9);
  WritePngClip(dir.path() / "scene", clip);
  EXPECT_TRUE(fs::exists(dir.path() / "scene" / "frame_00002.png"));
  EXPECT_EQ(ReadPngClip(dir.path() / "scene"), clip);
  fs::create_directories(dir.path() / "empty");
  EXPECT_THROW(ReadPngClip(dir.path() / "empty"), Error);
}

TEST(ClipIo, LabelSidecar) {
  const Taxonomy& tax = Taxonomy::Canonical();
  const LabelVector v = ParseLabelSidecar("Z1-Z2:C\n\nc4-c3:p+\n", tax);
  EXPECT_EQ(v.cast<int>().sum(), 2);
  EXPECT_EQ(FormatLabelSidecar(v, tax), "Z1-Z2:C\nC4-C3:P+\n");
  ExpectErrorContains([&] { ParseLabelSidecar("Z1-Z2:C\nbogus\n", tax, "a.labels"); },
                      ErrorKind::kParse, "a.labels:2");
}

TEST(Config, DefaultsOverridesAndValidation) {
  const PipelineConfig defaults = ParsePipelineConfig("{}");
  EXPECT_EQ(defaults.epochs, (std::vector<int>{60, 70, 80, 90, 100}));
  EXPECT_EQ(defaults.seq_lens, (std::vector<int>{16}));
  EXPECT_EQ(defaults.fusion_op, FuseOp::kMean);
  EXPECT_EQ(defaults.combine_weight, 0.5);
  EXPECT_EQ(defaults.augment_probability, 0.5);
  EXPECT_EQ(defaults.cutoff_epoch, 50);
  EXPECT_EQ(defaults.cutout_fraction, 0.25);

  const PipelineConfig c = ParsePipelineConfig(
      R"({"fusion_op": "median", "epochs": [1, 2], "seed": 18446744073709551615,
          "class_list_path": "classes.txt"})",
      "/cfg");
  EXPECT_EQ(c.fusion_op, FuseOp::kMedian);
  EXPECT_EQ(c.seed, 18446744073709551615ULL);
  EXPECT_EQ(*c.class_list_path, fs::path("/cfg/classes.txt"));

  for (const char* bad : {R"({"combine_weight": 2})", R"({"epochs": []})",
                          R"({"epochs": [5, 5]})", R"({"seq_lens": [0]})",
                          R"({"cutout_fraction": 0})", R"({"augment_probability": -0.1})",
                          R"({"upsample_factor": 0})", R"({"fusion_op": "vote"})",
                          R"({"unknown": 1})", R"([1, 2])", R"({"epochs": "x"})"}) {
    try {
      ParsePipelineConfig(bad);
      ADD_FAILURE() << bad;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kConfig) << bad;
    }
  }
}

TEST(Config, ClassListFile) {
  TempDir dir("atomact_classlist");
  std::string text;
  for (int i = kNumClasses - 1; i >= 0; --i) text += Taxonomy::Canonical().name(i) + "\n";
  WriteFileAtomic(dir.path() / "classes.txt", text);
  WriteFileAtomic(dir.path() / "cfg.json", R"({"class_list_path": "classes.txt"})");
  const Taxonomy tax = LoadTaxonomy(LoadPipelineConfig(dir.path() / "cfg.json"));
  EXPECT_EQ(tax.name(0), "C4-C3:P+");
  WriteFileAtomic(dir.path() / "short.txt", "Z1-Z2:C\n");
  ExpectErrorContains([&] { Taxonomy::FromFile(dir.path() / "short.txt"); },
                      ErrorKind::kDimension, "short.txt");
}

}  // namespace
}  // namespace atomact
