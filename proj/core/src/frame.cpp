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

#include "trajtok/frame.hpp"

#include <cmath>
#include <string>

#include "trajtok/error.hpp"

namespace trajtok {

Trajectory normalize_to_agent_frame(std::span<const Pose> global_states,
                                    AgentType agent_type,
                                    std::size_t token_length) {
  if (global_states.size() != token_length + 1) {
    throw LengthMismatchError(
        "expected " + std::to_string(token_length + 1) + " global poses, got " +
        std::to_string(global_states.size()));
  }
  for (const Pose& p : global_states) {
    if (!is_finite(p)) {
      throw NonFiniteError("global pose has a NaN or infinite coordinate");
    }
  }

  const Pose& anchor = global_states.front();
  const double c = std::cos(anchor.yaw);
  const double s = std::sin(anchor.yaw);

  Trajectory out;
  out.agent_type = agent_type;
  out.points.reserve(token_length);
  for (std::size_t k = 1; k < global_states.size(); ++k) {
    const double dx = global_states[k].x - anchor.x;
    const double dy = global_states[k].y - anchor.y;
    out.points.push_back(Pose{
        c * dx + s * dy,
        -s * dx + c * dy,
        wrap_angle(global_states[k].yaw - anchor.yaw),
    });
  }
  return out;
}

Pose flip_pose(const Pose& p) {
  return Pose{p.x, -p.y, wrap_angle(-p.yaw)};
}

Trajectory flip_trajectory(const Trajectory& t) {
  Trajectory out;
  out.agent_type = t.agent_type;
  out.points.reserve(t.points.size());
  for (const Pose& p : t.points) {
    out.points.push_back(flip_pose(p));
  }
  return out;
}

NormalizedDataset flip_augment(const NormalizedDataset& d) {
  if (d.flip_applied) {
    throw AlreadyAugmentedError("dataset is already flip-augmented");
  }
  NormalizedDataset out;
  out.drop_count = d.drop_count;
  out.flip_applied = true;
  out.trajectories.reserve(d.trajectories.size() * 2);
  out.trajectories = d.trajectories;
  for (const Trajectory& t : d.trajectories) {
    out.trajectories.push_back(flip_trajectory(t));
  }
  return out;
}

std::vector<Pose> apply_token_global(const AgentState& anchor,
                                     const Trajectory& token) {
  if (token.points.empty()) {
    throw LengthMismatchError("token trajectory is empty");
  }
  const double c = std::cos(anchor.pose.yaw);
  const double s = std::sin(anchor.pose.yaw);

  std::vector<Pose> out;
  out.reserve(token.points.size());
  for (const Pose& p : token.points) {
    out.push_back(Pose{
        anchor.pose.x + c * p.x - s * p.y,
        anchor.pose.y + s * p.x + c * p.y,
        wrap_angle(anchor.pose.yaw + p.yaw),
    });
  }
  return out;
}

}  // namespace trajtok
