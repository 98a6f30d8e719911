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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "atomact/commands.h"
#include "atomact/config.h"
#include "atomact/errors.h"

namespace {

using atomact::PipelineConfig;

// Flag values that override the config file when given on the command line.
struct Overrides {
  std::string class_list;
  std::string fusion_op;
  double combine_weight = 0.0;
  std::vector<int> epochs;
  double cutout_fraction = 0.0;
  double augment_probability = 0.0;
  int cutoff_epoch = 0;
  int upsample_factor = 1;
  std::uint64_t seed = 0;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"atomact: atomic-activity taxonomy, augmentation, ensembling and evaluation"};
  app.require_subcommand(1);

  std::string config_path;
  Overrides ov;
  app.add_option("--config", config_path, "Pipeline config (JSON)");
  auto* class_list_opt =
      app.add_option("--class-list", ov.class_list, "Class-list file (64 names, one per line)");
  auto* seed_opt = app.add_option("--seed", ov.seed, "Random seed");

  // taxonomy
  atomact::TaxonomyOptions tax;
  auto* tax_cmd = app.add_subcommand("taxonomy", "Print the 64 classes or the flip table");
  tax_cmd->add_flag("--flip-table", tax.flip_table, "Print 'class -> flipped class'");
  tax_cmd->add_flag("--branches", tax.branches, "Print the single/group partition");
  std::string validate_name;
  auto* validate_opt =
      tax_cmd->add_option("--validate", validate_name, "Check one class name and exit");

  // plan
  atomact::PlanOptions plan;
  auto* plan_cmd = app.add_subcommand("plan", "Frame-sampling sequences for a video");
  plan_cmd->add_option("--frames", plan.frames, "Number of frames")->required();
  plan_cmd->add_option("--len", plan.lens, "Sequence length(s); default from config");
  plan_cmd->add_flag("--json", plan.json, "Emit JSON records");

  // augment
  atomact::AugmentOptions aug;
  std::string aug_format = "same";
  auto* aug_cmd = app.add_subcommand("augment", "Transform clips and remap their labels");
  aug_cmd->add_option("--input", aug.input_dir, "Directory of clips + .labels sidecars")
      ->required();
  aug_cmd->add_option("--output", aug.output_dir, "Output directory")->required();
  aug_cmd->add_flag("--hflip", aug.hflip, "Horizontal flip with label remap");
  aug_cmd->add_flag("--cutout", aug.cutout, "Apply Cutout");
  auto* cutout_fraction_opt = aug_cmd->add_option("--cutout-fraction", ov.cutout_fraction,
                                                  "Cutout side as a fraction of min(H, W)");
  auto* upsample_opt =
      aug_cmd->add_option("--upsample", ov.upsample_factor, "Integer upsampling factor");
  aug_cmd->add_flag("--schedule", aug.schedule, "Random flip/Cutout per the epoch schedule");
  aug_cmd->add_option("--epoch", aug.epoch, "Training epoch for --schedule");
  auto* prob_opt =
      aug_cmd->add_option("--prob", ov.augment_probability, "Schedule probability");
  auto* cutoff_opt =
      aug_cmd->add_option("--cutoff-epoch", ov.cutoff_epoch, "Last augmented epoch");
  aug_cmd->add_option("--format", aug_format, "Output format: same, png or raw")
      ->check(CLI::IsMember({"same", "png", "raw"}));

  // fuse
  atomact::FuseOptions fuse;
  std::string fuse_spec;
  std::vector<std::string> fuse_inputs;
  std::string fuse_out;
  auto* fuse_cmd = app.add_subcommand("fuse", "Ensemble prediction files");
  auto* spec_opt = fuse_cmd->add_option("--spec", fuse_spec, "Ensemble spec (JSON tree)");
  fuse_cmd->add_option("--inputs", fuse_inputs, "Prediction files to fuse flat");
  auto* op_opt = fuse_cmd->add_option("--op", ov.fusion_op, "mean, max or median")
                     ->check(CLI::IsMember({"mean", "max", "median"}));
  fuse_cmd->add_option("--out", fuse_out, "Output prediction file")->required();

  // merge-branches
  atomact::MergeOptions merge;
  std::string merge_single, merge_group, merge_standard, merge_out;
  auto* merge_cmd =
      app.add_subcommand("merge-branches", "Merge single/group branches (+ standard model)");
  merge_cmd->add_option("--single", merge_single, "Single-object branch scores")->required();
  merge_cmd->add_option("--group", merge_group, "Object-group branch scores")->required();
  auto* standard_opt =
      merge_cmd->add_option("--standard", merge_standard, "Standard model scores");
  auto* weight_opt =
      merge_cmd->add_option("--weight", ov.combine_weight, "Weight of the merged branches");
  merge_cmd->add_option("--out", merge_out, "Output prediction file")->required();

  // eval
  atomact::EvalOptions ev;
  std::string ev_pred, ev_truth, ev_render, ev_report, ev_records;
  auto* eval_cmd = app.add_subcommand("eval", "Per-class AP, mAP and per-agent mAP");
  auto* pred_opt = eval_cmd->add_option("--pred", ev_pred, "Prediction file");
  auto* truth_opt = eval_cmd->add_option("--truth", ev_truth, "Truth file");
  auto* render_opt =
      eval_cmd->add_option("--render", ev_render, "Render a stored report record stream");
  auto* report_opt = eval_cmd->add_option("--report", ev_report, "Write the text table here");
  auto* records_opt =
      eval_cmd->add_option("--records", ev_records, "Write the record stream here");
  eval_cmd->add_option("--method", ev.method, "Method name for the report row");

  // simulate
  atomact::SimulateOptions sim;
  std::string sim_out;
  auto* sim_cmd = app.add_subcommand("simulate", "Synthetic truth + noisy predictors");
  sim_cmd->add_option("--clips", sim.clips, "Number of clips");
  sim_cmd->add_option("--prevalence", sim.prevalence, "Per-class positive rate");
  sim_cmd->add_option("--sigma", sim.noise_sigma, "Gaussian score noise");
  sim_cmd->add_option("--miss", sim.miss_rate, "Probability a positive is missed");
  auto* epochs_opt =
      sim_cmd->add_option("--epochs", ov.epochs, "One predictor per epoch tag");
  sim_cmd->add_option("--out", sim_out, "Output directory")->required();


  CLI11_PARSE(app, argc, argv);

  PipelineConfig config;
  try {
    if (!config_path.empty()) config = atomact::LoadPipelineConfig(config_path);
    if (class_list_opt->count()) config.class_list_path = ov.class_list;
    if (seed_opt->count()) config.seed = ov.seed;
    if (cutout_fraction_opt->count()) config.cutout_fraction = ov.cutout_fraction;
    if (upsample_opt->count()) config.upsample_factor = ov.upsample_factor;
    if (prob_opt->count()) config.augment_probability = ov.augment_probability;
    if (cutoff_opt->count()) config.cutoff_epoch = ov.cutoff_epoch;
    if (op_opt->count()) config.fusion_op = atomact::ParseFuseOp(ov.fusion_op);
    if (weight_opt->count()) config.combine_weight = ov.combine_weight;
    if (epochs_opt->count()) config.epochs = ov.epochs;
    config.Validate();
  } catch (const atomact::Error& e) {
    std::cerr << "error[" << atomact::ErrorPrefix(e.kind()) << "]: " << e.what() << "\n";
    return 1;
  }

  if (*tax_cmd) {
    tax.config = config;
    if (validate_opt->count()) tax.validate = validate_name;
    return atomact::RunTaxonomy(tax, std::cout, std::cerr);
  }
  if (*plan_cmd) {
    plan.config = config;
    return atomact::RunPlan(plan, std::cout, std::cerr);
  }
  if (*aug_cmd) {
    aug.config = config;
    aug.format = aug_format == "png"   ? atomact::ClipFormat::kPng
                 : aug_format == "raw" ? atomact::ClipFormat::kRaw
                                       : atomact::ClipFormat::kSame;
    return atomact::RunAugment(aug, std::cout, std::cerr);
  }
  if (*fuse_cmd) {
    fuse.config = config;
    if (spec_opt->count()) fuse.spec = fuse_spec;
    for (const auto& p : fuse_inputs) fuse.inputs.emplace_back(p);
    fuse.output = fuse_out;
    return atomact::RunFuse(fuse, std::cout, std::cerr);
  }
  if (*merge_cmd) {
    merge.config = config;
    merge.single = merge_single;
    merge.group = merge_group;
    if (standard_opt->count()) merge.standard = merge_standard;
    merge.output = merge_out;
    return atomact::RunMergeBranches(merge, std::cout, std::cerr);
  }
  if (*eval_cmd) {
    ev.config = config;
    if (pred_opt->count()) ev.predictions = ev_pred;
    if (truth_opt->count()) ev.truth = ev_truth;
    if (render_opt->count()) ev.render = ev_render;
    if (report_opt->count()) ev.report_path = ev_report;
    if (records_opt->count()) ev.records_path = ev_records;
    return atomact::RunEval(ev, std::cout, std::cerr);
  }
  if (*sim_cmd) {
    sim.config = config;
    sim.output_dir = sim_out;
    return atomact::RunSimulate(sim, std::cout, std::cerr);
  }
  return 1;
}
