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

#include <cstddef>
#include <span>
#include <vector>

#include "trajtok/types.hpp"
#include "trajtok/vocab.hpp"

namespace trajtok {

/// Mean-squared planar distance between two equal-length trajectories:
/// (1/L) * sum_l ((ax-bx)^2 + (ay-by)^2). Yaw is excluded so the value
/// stays in m^2 rather than mixing units.
struct TokenDistance {
  double squared_error = 0.0;
};

/// Throws LengthMismatchError.
TokenDistance token_distance(const Trajectory& a, const Trajectory& b);

/// Nearest token id under token_distance; ties break to the lowest id.
///
/// Throws EmptyVocabularyError, AgentTypeMismatchError, LengthMismatchError.
int encode(const Vocabulary& v, const Trajectory& t);

/// Batch encode. Same contract as encode per element, one flattened scan
/// buffer shared across queries.
std::vector<int> encode_batch(const Vocabulary& v,
                              std::span<const Trajectory> trajectories);

/// Stored token trajectory for an id (copy).
///
/// Throws IndexOutOfRangeError.
Trajectory decode(const Vocabulary& v, int id);

enum class SmoothingMode { Uniform, Spatial };

/// Per-label target probabilities for one ground-truth token.
/// probs[gt_index] is exactly 1 - epsilon in both modes. Spatial targets
/// sum to 1; uniform targets follow the literal uniform rule, whose mass
/// over all labels is 1 - epsilon/|V| (see smoothing_targets_uniform).
struct SmoothingTargets {
  std::vector<double> probs;
  std::size_t gt_index = 0;
  SmoothingMode mode = SmoothingMode::Uniform;
};

/// Uniform label smoothing: the ground truth gets 1 - epsilon and every
/// other label gets epsilon/|V|. Note the divisor is the full vocabulary
/// size, so the vector sums to 1 - epsilon/|V|, not 1; this matches the
/// conventional formula as written. Pass normalized = true to divide by
/// |V| - 1 instead, which restores an exact unit sum.
///
/// Throws BadEpsilonError, BadIndexError, Error (|V| < 2).
SmoothingTargets smoothing_targets_uniform(std::size_t vocab_size,
                                           std::size_t gt_index, double epsilon,
                                           bool normalized = false);

/// Spatial-aware label smoothing: each non-ground-truth label i gets
/// weight k_i = 1 / (token_distance(c_i, c_gt) + distance_floor) and
/// probability epsilon * k_i / sum(k). Labels near the ground truth
/// receive more mass; the vector sums to 1.
///
/// Throws BadEpsilonError, BadIndexError, Error (|V| < 2).
SmoothingTargets smoothing_targets_spatial(const Vocabulary& v,
                                           std::size_t gt_index, double epsilon,
                                           double distance_floor);

}  // namespace trajtok
