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

#include <span>
#include <vector>

#include "trajtok/types.hpp"

namespace trajtok {

/// Expresses the last token_length poses of a global rollout in the frame
/// of the first pose (origin at its position, heading zero along its yaw).
///
/// global_states must hold exactly token_length + 1 finite poses: the
/// anchor followed by one pose per step. The anchor itself is not part of
/// the returned trajectory.
///
/// Throws LengthMismatchError or NonFiniteError.
Trajectory normalize_to_agent_frame(std::span<const Pose> global_states,
                                    AgentType agent_type,
                                    std::size_t token_length);

/// Reflects a trajectory about the x-axis: (x, y, yaw) -> (x, -y, -yaw),
/// yaw re-wrapped into (-pi, pi]. An involution; yaw == pi is a fixed
/// point because -pi wraps back to pi.
Trajectory flip_trajectory(const Trajectory& t);

Pose flip_pose(const Pose& p);

/// Concatenates the dataset with its reflection: every input trajectory
/// is kept (in order) and all flipped copies are appended after them.
/// Duplicates are intentionally not removed so empirical endpoint
/// densities are preserved. The output is exactly twice the input size.
///
/// Throws AlreadyAugmentedError if d.flip_applied is already set.
NormalizedDataset flip_augment(const NormalizedDataset& d);

/// Places an agent-frame token into the global frame: each point is
/// rotated by anchor.yaw, translated by the anchor position, and each
/// yaw is offset by anchor.yaw (wrapped). Inverse of
/// normalize_to_agent_frame over the same anchor.
///
/// Throws LengthMismatchError if the token is empty.
std::vector<Pose> apply_token_global(const AgentState& anchor,
                                     const Trajectory& token);

}  // namespace trajtok
