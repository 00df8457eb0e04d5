// Copyright 2026 The TrajTok Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trajtok {

inline constexpr double kPi = 3.14159265358979323846;

/// Wraps an angle into the half-open interval (-pi, pi].
inline double wrap_angle(double a) {
  a = std::remainder(a, 2.0 * kPi);
  if (a <= -kPi) {
    a += 2.0 * kPi;
  }
  return a;
}

enum class AgentType { Vehicle, Pedestrian, Cyclist };

std::string to_string(AgentType type);

/// Accepts "vehicle", "pedestrian", "cyclist" and the alias "bicycle".
std::optional<AgentType> agent_type_from_string(std::string_view name);

/// 2D pose: position in meters, heading in radians.
/// Every operation that produces a Pose keeps yaw in (-pi, pi].
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double yaw = 0.0;

  friend bool operator==(const Pose&, const Pose&) = default;
};

inline bool is_finite(const Pose& p) {
  return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.yaw);
}

/// Fixed-length motion primitive in the agent-centric frame: the anchor
/// pose itself is implicit at the origin with heading zero and is not
/// stored; points[0] is the displacement after one step.
struct Trajectory {
  std::vector<Pose> points;
  AgentType agent_type = AgentType::Vehicle;

  std::size_t length() const noexcept { return points.size(); }
  const Pose& endpoint() const { return points.back(); }

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

bool is_finite(const Trajectory& t);

/// Global-frame agent state used as the anchor of a rollout interval.
struct AgentState {
  Pose pose;
  AgentType agent_type = AgentType::Vehicle;
};

/// Agent-centric trajectories plus bookkeeping from normalization.
/// After flip_augment the multiset of trajectories is closed under
/// flip_trajectory and flip_applied is true.
struct NormalizedDataset {
  std::vector<Trajectory> trajectories;
  std::uint64_t drop_count = 0;
  bool flip_applied = false;

  std::size_t size() const noexcept { return trajectories.size(); }
  bool empty() const noexcept { return trajectories.empty(); }
};

}  // namespace trajtok
