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

#include "atomact/taxonomy.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

namespace atomact {
namespace {

std::string Upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool CornersAdjacent(int a, int b) {
  const int d = (a - b + 4) % 4;
  return d == 1 || d == 3;
}

std::array<AtomicActivity, kNumClasses> BuildCanonical() {
  std::array<AtomicActivity, kNumClasses> out;
  int next = 0;
  for (const Agent& agent : kAllAgents) {
    const RegionKind kind = agent.category == AgentCategory::kPedestrian
                                ? RegionKind::kCorner
                                : RegionKind::kRoad;
    for (int s = 1; s <= 4; ++s) {
      for (int e = 1; e <= 4; ++e) {
        AtomicActivity a{{kind, s}, {kind, e}, agent};
        if (IsValid(a)) out[next++] = a;
      }
    }
  }
  return out;
}

}  // namespace

int AgentSlot(Agent agent) {
  return static_cast<int>(agent.category) * 2 + (agent.grouped ? 1 : 0);
}

std::string RegionName(Region region) {
  return (region.kind == RegionKind::kRoad ? "Z" : "C") + std::to_string(region.index);
}

std::string AgentName(Agent agent) {
  std::string base;
  switch (agent.category) {
    case AgentCategory::kVehicle:
      base = "C";
      break;
    case AgentCategory::kTwoWheeler:
      base = "K";
      break;
    case AgentCategory::kPedestrian:
      base = "P";
      break;
  }
  return agent.grouped ? base + "+" : base;
}

std::string ClassName(const AtomicActivity& activity) {
  return RegionName(activity.start) + "-" + RegionName(activity.end) + ":" +
         AgentName(activity.agent);
}

std::optional<std::string> ValidityViolation(const AtomicActivity& a) {
  for (const Region& r : {a.start, a.end}) {
    if (r.index < 1 || r.index > 4) {
      return "region index " + std::to_string(r.index) + " outside 1..4";
    }
  }
  if (a.agent.category == AgentCategory::kPedestrian) {
    if (a.start.kind != RegionKind::kCorner || a.end.kind != RegionKind::kCorner) {
      return "pedestrian activities must move between corners (C1..C4)";
    }
    if (!CornersAdjacent(a.start.index, a.end.index)) {
      return "pedestrian activities must connect adjacent corners on C1-C2-C3-C4-C1";
    }
    return std::nullopt;
  }
  if (a.start.kind != RegionKind::kRoad || a.end.kind != RegionKind::kRoad) {
    return "vehicle and two-wheeler activities must move between roads (Z1..Z4)";
  }
  if (a.start.index == a.end.index) {
    return "start and end region must differ";
  }
  return std::nullopt;
}

bool IsValid(const AtomicActivity& activity) {
  return !ValidityViolation(activity).has_value();
}

Region ParseRegion(std::string_view token) {
  const std::string t = Upper(Trim(token));
  if (t.size() == 2 && (t[0] == 'Z' || t[0] == 'C') && t[1] >= '1' && t[1] <= '4') {
    return {t[0] == 'Z' ? RegionKind::kRoad : RegionKind::kCorner, t[1] - '0'};
  }
  throw Error(ErrorKind::kParse, "unknown region token '" + std::string(token) + "'");
}

Agent ParseAgent(std::string_view token) {
  const std::string t = Upper(Trim(token));
  for (const Agent& agent : kAllAgents) {
    if (AgentName(agent) == t) return agent;
  }
  throw Error(ErrorKind::kParse, "unknown agent token '" + std::string(token) + "'");
}

AtomicActivity ParseClass(std::string_view name) {
  const std::string_view trimmed = Trim(name);
  const auto colon = trimmed.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::kParse,
                "class name '" + std::string(trimmed) + "' lacks ':<AGENT>'");
  }
  const std::string_view regions = trimmed.substr(0, colon);
  const auto dash = regions.find('-');
  if (dash == std::string_view::npos) {
    throw Error(ErrorKind::kParse, "class name '" + std::string(trimmed) +
                                       "' lacks '<REGION>-<REGION>'");
  }
  AtomicActivity a{ParseRegion(regions.substr(0, dash)),
                   ParseRegion(regions.substr(dash + 1)),
                   ParseAgent(trimmed.substr(colon + 1))};
  if (auto violation = ValidityViolation(a)) {
    throw Error(ErrorKind::kValidity,
                "invalid activity '" + std::string(trimmed) + "': " + *violation);
  }
  return a;
}

Region FlipRegion(Region region) {
  if (region.kind == RegionKind::kRoad) {
    if (region.index == 2) return {RegionKind::kRoad, 4};
    if (region.index == 4) return {RegionKind::kRoad, 2};
    return region;
  }
  return {RegionKind::kCorner, 5 - region.index};
}

AtomicActivity FlipActivity(const AtomicActivity& activity) {
  return {FlipRegion(activity.start), FlipRegion(activity.end), activity.agent};
}

const std::array<AtomicActivity, kNumClasses>& CanonicalActivities() {
  static const std::array<AtomicActivity, kNumClasses> kCanonical = BuildCanonical();
  return kCanonical;
}

std::string_view BranchName(Branch branch) {
  return branch == Branch::kSingle ? "single" : "group";
}

Branch ParseBranch(std::string_view token) {
  const std::string t = Upper(Trim(token));
  if (t == "SINGLE") return Branch::kSingle;
  if (t == "GROUP") return Branch::kGroup;
  throw Error(ErrorKind::kParse, "unknown branch '" + std::string(token) +
                                     "' (expected single or group)");
}

Taxonomy::Taxonomy(const std::array<AtomicActivity, kNumClasses>& activities)
    : activities_(activities) {
  for (int i = 0; i < kNumClasses; ++i) {
    names_[i] = ClassName(activities_[i]);
    index_by_name_.emplace(names_[i], i);
    (activities_[i].agent.grouped ? partition_.group : partition_.single).push_back(i);
    agent_classes_[AgentSlot(activities_[i].agent)].push_back(i);
  }
  for (int i = 0; i < kNumClasses; ++i) {
    flip_[i] = IndexOf(FlipActivity(activities_[i]));
  }
}

const Taxonomy& Taxonomy::Canonical() {
  static const Taxonomy kTaxonomy(CanonicalActivities());
  return kTaxonomy;
}

Taxonomy Taxonomy::FromNames(std::span<const std::string> names) {
  if (names.size() != kNumClasses) {
    throw Error(ErrorKind::kDimension, "class list has " + std::to_string(names.size()) +
                                           " entries, expected 64");
  }
  std::array<AtomicActivity, kNumClasses> activities;
  std::set<AtomicActivity> seen;
  for (int i = 0; i < kNumClasses; ++i) {
    activities[i] = ParseClass(names[i]);
    if (!seen.insert(activities[i]).second) {
      throw Error(ErrorKind::kValidity, "class list line " + std::to_string(i + 1) +
                                            ": duplicate class '" + names[i] + "'");
    }
  }
  return Taxonomy(activities);
}

Taxonomy Taxonomy::FromFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open class list " + path.string());
  std::vector<std::string> names;
  std::string line;
  while (std::getline(in, line)) {
    if (Trim(line).empty()) continue;
    names.emplace_back(Trim(line));
  }
  try {
    return FromNames(names);
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

int Taxonomy::IndexOf(const AtomicActivity& activity) const {
  const auto it = index_by_name_.find(ClassName(activity));
  if (it == index_by_name_.end()) {
    throw Error(ErrorKind::kValidity, "activity '" + ClassName(activity) +
                                          "' is not one of the 64 classes");
  }
  return it->second;
}

int Taxonomy::IndexOfName(std::string_view name) const {
  return IndexOf(ParseClass(name));
}

std::vector<std::pair<int, AtomicActivity>> AllClasses() {
  std::vector<std::pair<int, AtomicActivity>> out;
  out.reserve(kNumClasses);
  const auto& acts = CanonicalActivities();
  for (int i = 0; i < kNumClasses; ++i) out.emplace_back(i, acts[i]);
  return out;
}

}  // namespace atomact
