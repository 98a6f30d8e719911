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

#ifndef ATOMACT_COMMANDS_H_
#define ATOMACT_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "atomact/config.h"
#include "atomact/ensemble.h"

namespace atomact {

// Subcommand entry points. Each returns the process exit status; errors are
// written to `err` as "error[<kind>]: <message>".

struct TaxonomyOptions {
  PipelineConfig config;
  bool flip_table = false;
  bool branches = false;
  std::optional<std::string> validate;
};
int RunTaxonomy(const TaxonomyOptions& options, std::ostream& out, std::ostream& err);

struct PlanOptions {
  PipelineConfig config;  // seq_lens used when `lens` is empty
  int frames = 0;
  std::vector<int> lens;
  bool json = false;
};
int RunPlan(const PlanOptions& options, std::ostream& out, std::ostream& err);

enum class ClipFormat { kSame, kPng, kRaw };

struct AugmentOptions {
  PipelineConfig config;
  std::filesystem::path input_dir;
  std::filesystem::path output_dir;
  bool hflip = false;
  bool cutout = false;
  // Run the epoch schedule (random flip/cutout) instead of fixed transforms.
  bool schedule = false;
  int epoch = 1;
  ClipFormat format = ClipFormat::kSame;
};
int RunAugment(const AugmentOptions& options, std::ostream& out, std::ostream& err);

struct FuseOptions {
  PipelineConfig config;  // fusion_op used for --inputs
  std::optional<std::filesystem::path> spec;
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path output;
};
int RunFuse(const FuseOptions& options, std::ostream& out, std::ostream& err);

struct MergeOptions {
  PipelineConfig config;  // combine_weight used with --standard
  std::filesystem::path single;
  std::filesystem::path group;
  std::optional<std::filesystem::path> standard;
  std::filesystem::path output;
};
int RunMergeBranches(const MergeOptions& options, std::ostream& out, std::ostream& err);

struct EvalOptions {
  PipelineConfig config;
  std::optional<std::filesystem::path> predictions;
  std::optional<std::filesystem::path> truth;
  // Re-render a stored record stream instead of evaluating.
  std::optional<std::filesystem::path> render;
  std::optional<std::filesystem::path> report_path;
  std::optional<std::filesystem::path> records_path;
  std::string method = "predictions";
};
int RunEval(const EvalOptions& options, std::ostream& out, std::ostream& err);

struct SimulateOptions {
  PipelineConfig config;  // epochs: one predictor per entry
  int clips = 100;
  double prevalence = 0.1;
  double noise_sigma = 0.2;
  double miss_rate = 0.0;
  std::filesystem::path output_dir;
};
int RunSimulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);

// File names written by `simulate`.
inline constexpr const char* kSimTruthFile = "truth.jsonl";
std::string SimScoresFile(int epoch);

}  // namespace atomact

#endif  // ATOMACT_COMMANDS_H_
