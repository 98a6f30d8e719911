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

#ifndef ATOMACT_TAXONOMY_H_
#define ATOMACT_TAXONOMY_H_

#include <array>
#include <compare>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "atomact/errors.h"

namespace atomact {

inline constexpr int kNumClasses = 64;
inline constexpr int kNumBranchClasses = 32;
inline constexpr int kNumAgents = 6;

enum class RegionKind { kRoad, kCorner };

// Z1..Z4 are the road arms (Z1 at the ego camera, Z3 opposite); C1..C4 are
// the pedestrian corners, adjacent along C1-C2-C3-C4-C1.
struct Region {
  RegionKind kind = RegionKind::kRoad;
  int index = 1;  // 1..4

  friend constexpr auto operator<=>(const Region&, const Region&) = default;
};

enum class AgentCategory { kVehicle, kTwoWheeler, kPedestrian };

struct Agent {
  AgentCategory category = AgentCategory::kVehicle;
  bool grouped = false;

  friend constexpr auto operator<=>(const Agent&, const Agent&) = default;
};

// Agents in canonical (and EvalReport key) order: C, C+, K, K+, P, P+.
inline constexpr std::array<Agent, kNumAgents> kAllAgents = {{
    {AgentCategory::kVehicle, false},
    {AgentCategory::kVehicle, true},
    {AgentCategory::kTwoWheeler, false},
    {AgentCategory::kTwoWheeler, true},
    {AgentCategory::kPedestrian, false},
    {AgentCategory::kPedestrian, true},
}};

// Position of `agent` in kAllAgents.
int AgentSlot(Agent agent);

struct AtomicActivity {
  Region start;
  Region end;
  Agent agent;

  friend constexpr auto operator<=>(const AtomicActivity&,
                                    const AtomicActivity&) = default;
};

std::string RegionName(Region region);
std::string AgentName(Agent agent);
// Canonical "<REGION>-<REGION>:<AGENT>" form, e.g. "Z1-Z4:C+".
std::string ClassName(const AtomicActivity& activity);

// Returns a description of the violated rule, or nullopt when valid.
std::optional<std::string> ValidityViolation(const AtomicActivity& activity);
bool IsValid(const AtomicActivity& activity);

Region ParseRegion(std::string_view token);
Agent ParseAgent(std::string_view token);

// Parses "<REGION>-<REGION>:<AGENT>" (case-insensitive). Throws kParse for a
// malformed token and kValidity for a well-formed but impossible activity.
AtomicActivity ParseClass(std::string_view name);

// Mirror map of a horizontally flipped ego view: Z1, Z3 fixed; Z2<->Z4,
// C1<->C4, C2<->C3.
Region FlipRegion(Region region);
AtomicActivity FlipActivity(const AtomicActivity& activity);

// The 64 valid activities in canonical order: agent-major over kAllAgents,
// then ordered (start, end) pairs sorted by region index.
const std::array<AtomicActivity, kNumClasses>& CanonicalActivities();

enum class Branch { kSingle, kGroup };

std::string_view BranchName(Branch branch);
Branch ParseBranch(std::string_view token);

struct BranchPartition {
  std::vector<int> single;  // ascending class indices with grouped == false
  std::vector<int> group;

  const std::vector<int>& of(Branch branch) const {
    return branch == Branch::kSingle ? single : group;
  }
};

// An indexing of the 64 activities. Canonical() is the built-in order; a
// class-list file can supply a different one.
class Taxonomy {
 public:
  static const Taxonomy& Canonical();
  static Taxonomy FromNames(std::span<const std::string> names);
  static Taxonomy FromFile(const std::filesystem::path& path);

  const AtomicActivity& activity(int index) const { return activities_[index]; }
  const std::string& name(int index) const { return names_[index]; }
  const std::array<AtomicActivity, kNumClasses>& activities() const {
    return activities_;
  }

  int IndexOf(const AtomicActivity& activity) const;
  // Parses then looks up; throws like ParseClass.
  int IndexOfName(std::string_view name) const;

  // flip_permutation()[i] is the index of FlipActivity(activity(i)).
  const std::array<int, kNumClasses>& flip_permutation() const { return flip_; }
  const BranchPartition& partition() const { return partition_; }
  // Class indices belonging to each agent, indexed by AgentSlot.
  const std::array<std::vector<int>, kNumAgents>& agent_classes() const {
    return agent_classes_;
  }

 private:
  explicit Taxonomy(const std::array<AtomicActivity, kNumClasses>& activities);

  std::array<AtomicActivity, kNumClasses> activities_;
  std::array<std::string, kNumClasses> names_;
  std::unordered_map<std::string, int> index_by_name_;
  std::array<int, kNumClasses> flip_{};
  BranchPartition partition_;
  std::array<std::vector<int>, kNumAgents> agent_classes_;
};

// (index, activity) pairs of the canonical taxonomy.
std::vector<std::pair<int, AtomicActivity>> AllClasses();

inline const BranchPartition& GetBranchPartition(
    const Taxonomy& taxonomy = Taxonomy::Canonical()) {
  return taxonomy.partition();
}

// Permutes a 64-entry label or score vector through the class-level flip.
// out[flip(i)] = v[i].
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> FlipLabelVector(
    const Eigen::DenseBase<Derived>& v,
    const Taxonomy& taxonomy = Taxonomy::Canonical()) {
  if (v.size() != kNumClasses) {
    throw Error(ErrorKind::kDimension,
                "label vector has " + std::to_string(v.size()) +
                    " entries, expected 64");
  }
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> out(kNumClasses);
  const auto& perm = taxonomy.flip_permutation();
  for (int i = 0; i < kNumClasses; ++i) out(perm[i]) = v(i);
  return out;
}

}  // namespace atomact

#endif  // ATOMACT_TAXONOMY_H_
