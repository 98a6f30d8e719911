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

#include "atomact/commands.h"

#include <algorithm>
#include <cstdio>
#include <functional>

#include <json.hpp>

#include "atomact/augmentation.h"
#include "atomact/clip_io.h"
#include "atomact/ensemble_spec.h"
#include "atomact/evaluation.h"
#include "atomact/io.h"
#include "atomact/random.h"
#include "atomact/report.h"
#include "atomact/sampling.h"
#include "atomact/simulation.h"

namespace atomact {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

int Guard(std::ostream& err, const std::function<void()>& body) {
  try {
    body();
    return 0;
  } catch (const Error& e) {
    err << "error[" << ErrorPrefix(e.kind()) << "]: " << e.what() << "\n";
  } catch (const fs::filesystem_error& e) {
    err << "error[io]: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << "\n";
  }
  return 1;
}

json RecordToJson(const TransformRecord& r) {
  json j;
  j["name"] = r.name;
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = std::move(params);
  j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
  return j;
}

struct ClipEntry {
  std::string clip_id;
  fs::path path;
  bool is_png_dir = false;
};

std::vector<ClipEntry> ListClips(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw Error(ErrorKind::kIo, dir.string() + " is not a directory");
  std::vector<ClipEntry> clips;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_directory()) {
      clips.push_back({entry.path().filename().string(), entry.path(), true});
    } else if (entry.path().extension() == kRawClipExtension) {
      clips.push_back({entry.path().stem().string(), entry.path(), false});
    }
  }
  std::sort(clips.begin(), clips.end(),
            [](const ClipEntry& a, const ClipEntry& b) { return a.clip_id < b.clip_id; });
  if (clips.empty()) throw Error(ErrorKind::kIo, dir.string() + ": no clips found");
  return clips;
}

}  // namespace

std::string SimScoresFile(int epoch) { return "scores_e" + std::to_string(epoch) + ".jsonl"; }

int RunTaxonomy(const TaxonomyOptions& options, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    options.config.Validate();
    const Taxonomy taxonomy = LoadTaxonomy(options.config);
    if (options.validate) {
      const int index = taxonomy.IndexOfName(*options.validate);
      out << "valid " << taxonomy.name(index) << " index " << index << "\n";
      return;
    }
    for (int c = 0; c < kNumClasses; ++c) {
      if (options.flip_table) {
        out << taxonomy.name(c) << " -> " << taxonomy.name(taxonomy.flip_permutation()[c]) << "\n";
      } else if (options.branches) {
        out << (taxonomy.activity(c).agent.grouped ? "group " : "single ") << taxonomy.name(c)
            << "\n";
      } else {
        out << taxonomy.name(c) << "\n";
      }
    }
  });
}

int RunPlan(const PlanOptions& options, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    options.config.Validate();
    const std::vector<int>& lens = options.lens.empty() ? options.config.seq_lens : options.lens;
    for (int len : lens) {
      const SamplingPlan plan = PlanSequences(options.frames, len);
      const int middle = MiddleOffset(plan);
      if (options.json) {
        json j;
        j["n_frames"] = plan.n_frames;
        j["seq_len"] = plan.seq_len;
        j["stride"] = plan.stride;
        j["middle_offset"] = middle;
        j["sequences"] = plan.sequences;
        out << j.dump() << "\n";
        continue;
      }
      out << "n_frames=" << plan.n_frames << " seq_len=" << plan.seq_len
          << " stride=" << plan.stride << " middle_offset=" << middle << "\n";
      for (int k = 0; k < plan.stride; ++k) {
        out << "offset " << k << (k == middle ? " (middle):" : ":");
        for (int f : plan.sequences[k]) out << " " << f;
        out << "\n";
      }
    }
  });
}

int RunAugment(const AugmentOptions& options, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    options.config.Validate();
    const Taxonomy taxonomy = LoadTaxonomy(options.config);
    const PipelineConfig& cfg = options.config;
    std::string manifest;
    int count = 0;
    for (const ClipEntry& entry : ListClips(options.input_dir)) {
      const fs::path sidecar = options.input_dir / (entry.clip_id + ".labels");
      if (!fs::exists(sidecar)) {
        throw Error(ErrorKind::kIo, "missing label sidecar " + sidecar.string());
      }
      AugmentedSample sample;
      sample.clip = entry.is_png_dir ? ReadPngClip(entry.path) : ReadRawClip(entry.path);
      sample.labels = ParseLabelSidecar(ReadFile(sidecar), taxonomy, sidecar.string());
      const std::uint64_t clip_seed = SubstreamSeed(cfg.seed, HashString(entry.clip_id));

      if (options.schedule) {
        sample = ApplySchedule(sample, options.epoch,
                               {cfg.augment_probability, cfg.cutoff_epoch, cfg.cutout_fraction},
                               clip_seed, taxonomy);
      } else {
        if (options.hflip) sample = HFlipSample(sample, taxonomy);
        if (options.cutout) {
          const CutoutSquare sq =
              PlanCutout(sample.clip.h, sample.clip.w, cfg.cutout_fraction, clip_seed);
          sample.clip = CutoutClip(sample.clip, cfg.cutout_fraction, clip_seed);
          sample.applied.push_back({"cutout",
                                    {{"side_fraction", cfg.cutout_fraction},
                                     {"y0", sq.y0},
                                     {"x0", sq.x0},
                                     {"side", sq.side}},
                                    clip_seed});
        }
      }
      if (cfg.upsample_factor > 1) {
        sample.clip = UpsampleClip(sample.clip, cfg.upsample_factor);
        sample.applied.push_back(
            {"upsample", {{"factor", cfg.upsample_factor}}, std::nullopt});
      }

      const bool png = options.format == ClipFormat::kPng ||
                       (options.format == ClipFormat::kSame && entry.is_png_dir);
      if (png) {
        WritePngClip(options.output_dir / entry.clip_id, sample.clip);
      } else {
        WriteRawClip(options.output_dir / (entry.clip_id + std::string(kRawClipExtension)),
                     sample.clip);
      }
      WriteFileAtomic(options.output_dir / (entry.clip_id + ".labels"),
                      FormatLabelSidecar(sample.labels, taxonomy));

      json rec;
      rec["clip_id"] = entry.clip_id;
      rec["t"] = sample.clip.t;
      rec["h"] = sample.clip.h;
      rec["w"] = sample.clip.w;
      rec["seed"] = clip_seed;
      json applied = json::array();
      for (const auto& r : sample.applied) applied.push_back(RecordToJson(r));
      rec["applied"] = std::move(applied);
      manifest += rec.dump() + "\n";
      ++count;
    }
    WriteFileAtomic(options.output_dir / "manifest.jsonl", manifest);
    out << "augmented " << count << " clip(s) into " << options.output_dir.string() << "\n";
  });
}

int RunFuse(const FuseOptions& options, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    options.config.Validate();
    const Taxonomy taxonomy = LoadTaxonomy(options.config);
    if (options.spec.has_value() == !options.inputs.empty()) {
      throw Error(ErrorKind::kConfig, "fuse: give exactly one of --spec or --inputs");
    }
    ScoreMatrix fused;
    if (options.spec) {
      fused = BuildEnsemble(LoadEnsembleSpec(*options.spec), taxonomy);
    } else {
      std::vector<ScoreMatrix> sources;
      for (const auto& p : options.inputs) sources.push_back(ReadPredictions(p));
      fused = Fuse(sources, options.config.fusion_op);
    }
    WritePredictions(options.output, fused);
    out << "wrote " << fused.rows() << " clip(s) to " << options.output.string() << "\n";
  });
}

int RunMergeBranches(const MergeOptions& options, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    options.config.Validate();
    const Taxonomy taxonomy = LoadTaxonomy(options.config);
    ScoreMatrix merged = MergeBranches(ReadBranchScores(options.single, Branch::kSingle, taxonomy),
                                       ReadBranchScores(options.group, Branch::kGroup, taxonomy),
                                       taxonomy);
    if (options.standard) {
      merged = CombineWithStandard(merged, ReadPredictions(*options.standard),
                                   options.config.combine_weight);
    }
    WritePredictions(options.output, merged);
    out << "wrote " << merged.rows() << " clip(s) to " << options.output.string() << "\n";
  });
}

int RunEval(const EvalOptions& options, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    options.config.Validate();
    const Taxonomy taxonomy = LoadTaxonomy(options.config);
    std::vector<NamedReport> reports;
    if (options.render) {
      reports = ParseReportRecords(ReadFile(*options.render), options.render->string());
    } else {
      if (!options.predictions || !options.truth) {
        throw Error(ErrorKind::kConfig, "eval: --pred and --truth are required");
      }
      const ScoreMatrix pred = ReadPredictions(*options.predictions);
      const LabelMatrix truth = ReadTruth(*options.truth, taxonomy);
      reports.push_back({options.method, Evaluate(pred, truth, taxonomy)});
    }
    const std::string table = FormatReportTable(reports, taxonomy);
    out << table;
    if (options.report_path) WriteFileAtomic(*options.report_path, table);
    if (options.records_path) {
      WriteFileAtomic(*options.records_path, FormatReportRecords(reports, taxonomy));
    }
  });
}

int RunSimulate(const SimulateOptions& options, std::ostream& out, std::ostream& err) {
  return Guard(err, [&] {
    options.config.Validate();
    const Taxonomy taxonomy = LoadTaxonomy(options.config);
    SimConfig sim{options.clips, options.prevalence, options.noise_sigma, options.miss_rate,
                  options.config.seed};
    sim.Validate();
    const LabelMatrix truth = GenerateTruth(sim);
    WriteTruth(options.output_dir / kSimTruthFile, truth, taxonomy);
    for (int epoch : options.config.epochs) {
      ScoreMatrix scores = GenerateScores(
          truth, sim.noise_sigma, sim.miss_rate,
          SubstreamSeed(sim.seed, 0x5c0'0000ULL + static_cast<std::uint64_t>(epoch)));
      WritePredictions(options.output_dir / SimScoresFile(epoch), scores);
    }
    out << "simulated " << sim.n_clips << " clip(s), " << options.config.epochs.size()
        << " predictor(s) into " << options.output_dir.string() << "\n";
  });
}

}  // namespace atomact
