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

#include "atomact/config.h"

#include <set>
#include <string>

#include <json.hpp>

#include "atomact/errors.h"
#include "atomact/io.h"

namespace atomact {

void PipelineConfig::Validate() const {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::kConfig, msg); };
  if (!(combine_weight >= 0.0 && combine_weight <= 1.0)) fail("combine_weight must lie in [0, 1]");
  if (epochs.empty()) fail("epochs must be nonempty");
  for (int e : epochs) {
    if (e < 1) fail("epochs must be >= 1");
  }
  if (std::set<int>(epochs.begin(), epochs.end()).size() != epochs.size()) {
    fail("epochs must be distinct");
  }
  if (seq_lens.empty()) fail("seq_lens must be nonempty");
  for (int s : seq_lens) {
    if (s < 1) fail("seq_lens must be >= 1");
  }
  if (!(cutout_fraction > 0.0 && cutout_fraction <= 1.0)) {
    fail("cutout_fraction must lie in (0, 1]");
  }
  if (!(augment_probability >= 0.0 && augment_probability <= 1.0)) {
    fail("augment_probability must lie in [0, 1]");
  }
  if (cutoff_epoch < 0) fail("cutoff_epoch must be >= 0");
  if (upsample_factor < 1) fail("upsample_factor must be >= 1");
}

PipelineConfig ParsePipelineConfig(std::string_view json_text,
                                   const std::filesystem::path& base_dir) {
  using nlohmann::json;
  PipelineConfig config;
  try {
    const json j = json::parse(json_text);
    if (!j.is_object()) throw Error(ErrorKind::kConfig, "config must be a JSON object");
    for (const auto& [key, value] : j.items()) {
      if (key == "class_list_path") {
        std::filesystem::path p = value.get<std::string>();
        config.class_list_path = p.is_absolute() || base_dir.empty() ? p : base_dir / p;
      } else if (key == "fusion_op") {
        config.fusion_op = ParseFuseOp(value.get<std::string>());
      } else if (key == "combine_weight") {
        config.combine_weight = value.get<double>();
      } else if (key == "epochs") {
        config.epochs = value.get<std::vector<int>>();
      } else if (key == "seq_lens") {
        config.seq_lens = value.get<std::vector<int>>();
      } else if (key == "cutout_fraction") {
        config.cutout_fraction = value.get<double>();
      } else if (key == "augment_probability") {
        config.augment_probability = value.get<double>();
      } else if (key == "cutoff_epoch") {
        config.cutoff_epoch = value.get<int>();
      } else if (key == "upsample_factor") {
        config.upsample_factor = value.get<int>();
      } else if (key == "seed") {
        config.seed = value.get<std::uint64_t>();
      } else {
        throw Error(ErrorKind::kConfig, "unknown config key '" + key + "'");
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kConfig, std::string("malformed config: ") + e.what());
  } catch (const Error& e) {
    throw Error(ErrorKind::kConfig, e.what());
  }
  config.Validate();
  return config;
}

PipelineConfig LoadPipelineConfig(const std::filesystem::path& path) {
  try {
    return ParsePipelineConfig(ReadFile(path), path.parent_path());
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

Taxonomy LoadTaxonomy(const PipelineConfig& config) {
  if (config.class_list_path) return Taxonomy::FromFile(*config.class_list_path);
  return Taxonomy::Canonical();
}

}  // namespace atomact
