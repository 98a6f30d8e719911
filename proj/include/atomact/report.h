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

#ifndef ATOMACT_REPORT_H_
#define ATOMACT_REPORT_H_

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atomact/evaluation.h"
#include "atomact/taxonomy.h"

namespace atomact {

struct NamedReport {
  std::string method;
  EvalReport report;

  friend bool operator==(const NamedReport&, const NamedReport&) = default;
};

// Report column order after the overall mAP: C, K, P, C+, K+, P+, given as
// AgentSlot indices.
inline constexpr std::array<int, kNumAgents> kReportGroupOrder = {0, 2, 4, 1, 3, 5};

// "0.54", or "n/a" when undefined.
std::string FormatMetric(const std::optional<double>& value);

// The seven metric cells separated by single spaces, e.g.
// "0.54 0.48 0.41 0.49 0.70 0.62 0.53".
std::string FormatRowValues(const EvalReport& report);

// Header plus one row per method; a note line follows for each method with
// excluded classes.
std::string FormatReportTable(std::span<const NamedReport> reports,
                              const Taxonomy& taxonomy = Taxonomy::Canonical());

// Machine-readable form, one JSON record per line: a "report" record per
// method followed by its 64 "class" records. Doubles are written with
// round-trip precision, so ParseReportRecords restores reports exactly.
std::string FormatReportRecords(std::span<const NamedReport> reports,
                                const Taxonomy& taxonomy = Taxonomy::Canonical());
std::vector<NamedReport> ParseReportRecords(std::string_view text,
                                            std::string_view origin = "<report>");

}  // namespace atomact

#endif  // ATOMACT_REPORT_H_
