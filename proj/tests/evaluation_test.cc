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

#include "atomact/evaluation.h"

#include <cmath>
#include <random>

#include "atomact/report.h"
#include "gtest/gtest.h"

namespace atomact {
namespace {

// Oracle: explicit precision/recall table. Ranking is built from
// (score desc, position asc) keys; AP = sum_k precision_k * (recall_k - recall_{k-1}).
std::optional<double> PrTableAp(const std::vector<double>& scores, const std::vector<int>& labels) {
  const int n = static_cast<int>(scores.size());
  std::vector<std::pair<double, int>> keyed;
  for (int i = 0; i < n; ++i) keyed.emplace_back(-scores[i], i);
  std::sort(keyed.begin(), keyed.end());
  int positives = 0;
  for (int l : labels) positives += l;
  if (positives == 0) return std::nullopt;
  std::vector<double> precision(n), recall(n);
  int tp = 0;
  for (int k = 0; k < n; ++k) {
    tp += labels[keyed[k].second];
    precision[k] = static_cast<double>(tp) / (k + 1);
    recall[k] = static_cast<double>(tp) / positives;
  }
  double ap = 0.0;
  double prev_recall = 0.0;
  for (int k = 0; k < n; ++k) {
    ap += precision[k] * (recall[k] - prev_recall);
    prev_recall = recall[k];
  }
  return ap;
}

Eigen::VectorXd Vec(std::initializer_list<double> v) {
  Eigen::VectorXd out(v.size());
  int i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

TEST(AveragePrecision, HandComputedExamples) {
  EXPECT_DOUBLE_EQ(*AveragePrecision(Vec({0.9, 0.1, 0.8}), Vec({1, 0, 1})), 1.0);
  EXPECT_DOUBLE_EQ(*AveragePrecision(Vec({0.9, 0.8, 0.1}), Vec({0, 1, 1})), 7.0 / 12.0);
  EXPECT_FALSE(AveragePrecision(Vec({0.9, 0.8}), Vec({0, 0})).has_value());
  try {
    AveragePrecision(Vec({0.9, 0.8}), Vec({0, 1, 1}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimension);
  }
  EXPECT_THROW(AveragePrecision(Vec({0.9}), Vec({2})), Error);
}

TEST(AveragePrecision, TiesKeepInputOrder) {
  // Positive first among equal scores ranks first.
  EXPECT_DOUBLE_EQ(*AveragePrecision(Vec({0.5, 0.5, 0.5}), Vec({1, 0, 0})), 1.0);
  EXPECT_DOUBLE_EQ(*AveragePrecision(Vec({0.5, 0.5, 0.5}), Vec({0, 0, 1})), 1.0 / 3.0);
}

TEST(AveragePrecision, ExhaustiveAgainstPrTable) {
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int n = 1; n <= 8; ++n) {
    for (int pattern = 0; pattern < (1 << n); ++pattern) {
      for (bool quantized : {false, true}) {
        std::vector<double> s(n);
        std::vector<int> l(n);
        Eigen::VectorXd es(n), el(n);
        for (int i = 0; i < n; ++i) {
          s[i] = quantized ? std::floor(u(gen) * 3) / 3 : u(gen);
          l[i] = (pattern >> i) & 1;
          es(i) = s[i];
          el(i) = l[i];
        }
        const auto got = AveragePrecision(es, el);
        const auto want = PrTableAp(s, l);
        ASSERT_EQ(got.has_value(), want.has_value());
        if (got) ASSERT_NEAR(*got, *want, 1e-12);
      }
    }
  }
}

TEST(AveragePrecision, RankOnlyAndBounds) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 10;
    Eigen::VectorXd s(n), l(n);
    for (int i = 0; i < n; ++i) {
      s(i) = u(gen);
      l(i) = u(gen) < 0.4;
    }
    l(0) = 1;
    const double ap = *AveragePrecision(s, l);
    EXPECT_GT(ap, 0.0);
    EXPECT_LE(ap, 1.0);
    const Eigen::VectorXd transformed = (s.array().exp() * 3.0 + s.array().cube()).matrix();
    EXPECT_EQ(*AveragePrecision(transformed, l), ap);
    // Every positive above every negative.
    const Eigen::VectorXd separated = (l.array() + 0.5 * s.array()).matrix();
    EXPECT_DOUBLE_EQ(*AveragePrecision(separated, l), 1.0);
  }
}

LabelMatrix RandomTruth(std::mt19937_64& gen, int clips, double p) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  LabelMatrix t;
  for (int i = 0; i < clips; ++i) t.clip_ids.push_back("c" + std::to_string(100 + i));
  t.labels.resize(clips, kNumClasses);
  for (int i = 0; i < clips; ++i)
    for (int c = 0; c < kNumClasses; ++c) t.labels(i, c) = u(gen) < p;
  return t;
}

ScoreMatrix RandomPred(std::mt19937_64& gen, const LabelMatrix& t) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  ScoreMatrix m{t.clip_ids, RowMajorMatrix<double>(t.rows(), kNumClasses), {}};
  for (Eigen::Index i = 0; i < t.rows(); ++i)
    for (int c = 0; c < kNumClasses; ++c) m.scores(i, c) = u(gen);
  return m;
}

TEST(Evaluate, PerfectPredictor) {
  std::mt19937_64 gen(1);
  LabelMatrix t = RandomTruth(gen, 40, 0.3);
  for (int c = 0; c < kNumClasses; ++c) t.labels(c % 40, c) = 1;
  ScoreMatrix p{t.clip_ids, t.labels.cast<double>(), {}};
  const EvalReport r = Evaluate(p, t);
  EXPECT_EQ(r.map, 1.0);
  for (const auto& g : r.group_map) EXPECT_EQ(g, 1.0);
  EXPECT_TRUE(r.excluded_classes.empty());
  EXPECT_EQ(r.n_clips, 40);
}

TEST(Evaluate, ConstantScoresTieOrder) {
  const int n = 8;
  LabelMatrix first, last;
  for (int i = 0; i < n; ++i) {
    first.clip_ids.push_back("clip" + std::to_string(i));
  }
  last.clip_ids = first.clip_ids;
  first.labels = LabelMatrix::Matrix::Zero(n, kNumClasses);
  last.labels = LabelMatrix::Matrix::Zero(n, kNumClasses);
  first.labels.row(0).setOnes();
  last.labels.row(n - 1).setOnes();
  ScoreMatrix p{first.clip_ids, RowMajorMatrix<double>::Constant(n, kNumClasses, 0.5), {}};
  // Ties rank by ascending clip position, so a positive at position 0 ranks
  // first and one at the last position ranks last.
  for (const auto& ap : Evaluate(p, first).per_class_ap) EXPECT_DOUBLE_EQ(*ap, 1.0);
  for (const auto& ap : Evaluate(p, last).per_class_ap) EXPECT_DOUBLE_EQ(*ap, 1.0 / n);
}

TEST(Evaluate, MatchesOracleOnSmallInputs) {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int clips = 1 + trial % 8;
    const LabelMatrix t = RandomTruth(gen, clips, 0.4);
    const ScoreMatrix p = RandomPred(gen, t);
    const EvalReport r = Evaluate(p, t);
    double sum = 0;
    int defined = 0;
    for (int c = 0; c < kNumClasses; ++c) {
      std::vector<double> s;
      std::vector<int> l;
      for (int i = 0; i < clips; ++i) {
        s.push_back(p.scores(i, c));
        l.push_back(t.labels(i, c));
      }
      const auto want = PrTableAp(s, l);
      ASSERT_EQ(r.per_class_ap[c].has_value(), want.has_value());
      if (want) {
        ASSERT_NEAR(*r.per_class_ap[c], *want, 1e-12);
        sum += *want;
        ++defined;
      }
    }
    if (defined) ASSERT_NEAR(*r.map, sum / defined, 1e-12);
  }
}

TEST(Evaluate, WeightedGroupIdentity) {
  std::mt19937_64 gen(3);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const LabelMatrix t = RandomTruth(gen, 30, 0.3);
    const EvalReport r = Evaluate(RandomPred(gen, t), t);
    if (!r.excluded_classes.empty()) continue;
    const double weighted = (12 * *r.group_map[0] + 12 * *r.group_map[1] + 12 * *r.group_map[2] +
                             12 * *r.group_map[3] + 8 * *r.group_map[4] + 8 * *r.group_map[5]) /
                            64.0;
    EXPECT_NEAR(*r.map, weighted, 1e-12);
    ++checked;
  }
  EXPECT_GT(checked, 90);
}

TEST(Evaluate, ExcludesClassesWithoutPositives) {
  std::mt19937_64 gen(4);
  LabelMatrix t = RandomTruth(gen, 20, 0.5);
  t.labels.col(5).setZero();
  t.labels.col(60).setZero();
  const EvalReport r = Evaluate(RandomPred(gen, t), t);
  EXPECT_EQ(r.excluded_classes, (std::vector<int>{5, 60}));
  EXPECT_FALSE(r.per_class_ap[5].has_value());
}

TEST(Evaluate, AlignmentAndValidation) {
  std::mt19937_64 gen(5);
  LabelMatrix t = RandomTruth(gen, 4, 0.5);
  ScoreMatrix p = RandomPred(gen, t);
  p.clip_ids[2] = "zz";
  try {
    Evaluate(p, t);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAlignment);
    EXPECT_NE(std::string(e.what()).find("missing clip_ids: c102"), std::string::npos);
  }
  ScoreMatrix ok = RandomPred(gen, t);
  t.labels(1, 1) = 2;
  try {
    Evaluate(ok, t);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kValidity);
  }
}

TEST(Evaluate, RowOrderDoesNotMatter) {
  std::mt19937_64 gen(6);
  const LabelMatrix t = RandomTruth(gen, 12, 0.3);
  const ScoreMatrix p = RandomPred(gen, t);
  ScoreMatrix reversed = p;
  reversed.scores = p.scores.colwise().reverse();
  std::reverse(reversed.clip_ids.begin(), reversed.clip_ids.end());
  EXPECT_EQ(Evaluate(reversed, t), Evaluate(p, t));
}

EvalReport ReportWith(double map, std::array<double, 6> in_report_order) {
  EvalReport r;
  r.map = map;
  for (int k = 0; k < 6; ++k) r.group_map[kReportGroupOrder[k]] = in_report_order[k];
  return r;
}

TEST(Report, ReferenceRows) {
  const EvalReport baseline = ReportWith(0.54, {0.48, 0.41, 0.49, 0.70, 0.62, 0.53});
  const EvalReport ours = ReportWith(0.69, {0.7, 0.6, 0.63, 0.8, 0.74, 0.62});
  EXPECT_EQ(FormatRowValues(baseline), "0.54 0.48 0.41 0.49 0.70 0.62 0.53");
  EXPECT_EQ(FormatRowValues(ours), "0.69 0.70 0.60 0.63 0.80 0.74 0.62");
  const std::vector<NamedReport> rows = {{"Action-slot", baseline}, {"Ours", ours}};
  EXPECT_EQ(FormatReportTable(rows),
            "Method       mAP mAP@C mAP@K mAP@P mAP@C+ mAP@K+ mAP@P+\n"
            "Action-slot  0.54 0.48 0.41 0.49 0.70 0.62 0.53\n"
            "Ours         0.69 0.70 0.60 0.63 0.80 0.74 0.62\n");
}

TEST(Report, AllOnesAndExclusionNote) {
  EvalReport r = ReportWith(1.0, {1, 1, 1, 1, 1, 1});
  EXPECT_EQ(FormatRowValues(r), "1.00 1.00 1.00 1.00 1.00 1.00 1.00");
  const std::vector<NamedReport> rows = {{"m", r}};
  EXPECT_EQ(FormatReportTable(rows).find('#'), std::string::npos);
  r.excluded_classes = {0, 63};
  const std::string table = FormatReportTable(std::vector<NamedReport>{{"m", r}});
  EXPECT_NE(table.find("# m: 2 class(es) without positives excluded from means: Z1-Z2:C C4-C3:P+"),
            std::string::npos)
      << table;
  EXPECT_EQ(FormatMetric(std::nullopt), "n/a");
}

TEST(Report, RecordsRoundTrip) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 10; ++trial) {
    LabelMatrix t = RandomTruth(gen, 9, 0.2);
    std::vector<NamedReport> reports = {{"a b", Evaluate(RandomPred(gen, t), t)},
                                        {"second", Evaluate(RandomPred(gen, t), t)}};
    EXPECT_EQ(ParseReportRecords(FormatReportRecords(reports)), reports);
  }
  EXPECT_THROW(ParseReportRecords("{\"type\": \"class\", \"method\": \"x\", \"index\": 0}"), Error);
  EXPECT_THROW(ParseReportRecords("not json"), Error);
}

}  // namespace
}  // namespace atomact
