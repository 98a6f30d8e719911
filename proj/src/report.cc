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

#include "atomact/report.h"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace atomact {
namespace {

using nlohmann::json;

json OptionalToJson(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> OptionalFromJson(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

std::string PadRight(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

std::string FormatMetric(const std::optional<double>& value) {
  if (!value) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", *value);
  return buf;
}

std::string FormatRowValues(const EvalReport& report) {
  std::string out = FormatMetric(report.map);
  for (int slot : kReportGroupOrder) out += " " + FormatMetric(report.group_map[slot]);
  return out;
}

std::string FormatReportTable(std::span<const NamedReport> reports, const Taxonomy& taxonomy) {
  std::size_t width = std::string_view("Method").size();
  for (const auto& r : reports) width = std::max(width, r.method.size());
  width += 2;

  std::string out = PadRight("Method", width) + "mAP";
  for (int slot : kReportGroupOrder) out += " mAP@" + AgentName(kAllAgents[slot]);
  out += '\n';
  for (const auto& r : reports) {
    out += PadRight(r.method, width) + FormatRowValues(r.report) + '\n';
  }
  for (const auto& r : reports) {
    if (r.report.excluded_classes.empty()) continue;
    out += "# " + r.method + ": " + std::to_string(r.report.excluded_classes.size()) +
           " class(es) without positives excluded from means:";
    for (int c : r.report.excluded_classes) out += " " + taxonomy.name(c);
    out += '\n';
  }
  return out;
}

std::string FormatReportRecords(std::span<const NamedReport> reports, const Taxonomy& taxonomy) {
  std::string out;
  for (const auto& r : reports) {
    json head;
    head["type"] = "report";
    head["method"] = r.method;
    head["map"] = OptionalToJson(r.report.map);
    json groups = json::object();
    for (int slot = 0; slot < kNumAgents; ++slot) {
      groups[AgentName(kAllAgents[slot])] = OptionalToJson(r.report.group_map[slot]);
    }
    head["group_map"] = std::move(groups);
    head["n_clips"] = r.report.n_clips;
    head["excluded_classes"] = r.report.excluded_classes;
    out += head.dump() + '\n';
    for (int c = 0; c < kNumClasses; ++c) {
      json rec;
      rec["type"] = "class";
      rec["method"] = r.method;
      rec["index"] = c;
      rec["name"] = taxonomy.name(c);
      rec["ap"] = OptionalToJson(r.report.per_class_ap[c]);
      out += rec.dump() + '\n';
    }
  }
  return out;
}

std::vector<NamedReport> ParseReportRecords(std::string_view text, std::string_view origin) {
  std::vector<NamedReport> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = std::string(origin) + ":" + std::to_string(lineno);
    try {
      const json rec = json::parse(line);
      const std::string type = rec.at("type").get<std::string>();
      if (type == "report") {
        NamedReport r;
        r.method = rec.at("method").get<std::string>();
        r.report.map = OptionalFromJson(rec.at("map"));
        const json& groups = rec.at("group_map");
        for (int slot = 0; slot < kNumAgents; ++slot) {
          r.report.group_map[slot] = OptionalFromJson(groups.at(AgentName(kAllAgents[slot])));
        }
        r.report.n_clips = rec.at("n_clips").get<int>();
        r.report.excluded_classes = rec.at("excluded_classes").get<std::vector<int>>();
        out.push_back(std::move(r));
      } else if (type == "class") {
        if (out.empty() || out.back().method != rec.at("method").get<std::string>()) {
          throw Error(ErrorKind::kParse, where + ": class record without a preceding report");
        }
        const int index = rec.at("index").get<int>();
        if (index < 0 || index >= kNumClasses) {
          throw Error(ErrorKind::kParse, where + ": class index out of range");
        }
        out.back().report.per_class_ap[index] = OptionalFromJson(rec.at("ap"));
      } else {
        throw Error(ErrorKind::kParse, where + ": unknown record type '" + type + "'");
      }
    } catch (const json::exception& e) {
      throw Error(ErrorKind::kParse, where + ": " + e.what());
    }
  }
  return out;
}

}  // namespace atomact
