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

#include "trajtok/codec.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "trajtok/error.hpp"

namespace trajtok {

TokenDistance token_distance(const Trajectory& a, const Trajectory& b) {
  if (a.length() != b.length()) {
    throw LengthMismatchError("trajectories of length " +
                              std::to_string(a.length()) + " and " +
                              std::to_string(b.length()) + " are not comparable");
  }
  double sum = 0.0;
  for (std::size_t l = 0; l < a.length(); ++l) {
    const double dx = a.points[l].x - b.points[l].x;
    const double dy = a.points[l].y - b.points[l].y;
    sum += dx * dx + dy * dy;
  }
  return TokenDistance{sum / static_cast<double>(a.length())};
}

namespace {

void check_query(const Vocabulary& v, const Trajectory& t) {
  if (v.tokens.empty()) {
    throw EmptyVocabularyError("cannot encode against an empty vocabulary");
  }
  if (t.agent_type != v.agent_type) {
    throw AgentTypeMismatchError("trajectory agent type " + to_string(t.agent_type) +
                                 " does not match vocabulary agent type " +
                                 to_string(v.agent_type));
  }
  if (t.length() != v.tokens.front().trajectory.length()) {
    throw LengthMismatchError("query length does not match token length");
  }
}

// Token planar coordinates flattened to one contiguous buffer so the
// argmin scan stays cache-friendly for large vocabularies.
std::vector<double> flatten_tokens(const Vocabulary& v) {
  const std::size_t len = v.tokens.front().trajectory.length();
  std::vector<double> flat;
  flat.reserve(v.tokens.size() * len * 2);
  for (const TrajToken& token : v.tokens) {
    for (const Pose& p : token.trajectory.points) {
      flat.push_back(p.x);
      flat.push_back(p.y);
    }
  }
  return flat;
}

// Exhaustive argmin with an early abort once the running sum passes the
// best seen so far. Strict improvement keeps the lowest id on ties.
int nearest_token(std::span<const double> flat, std::size_t token_count,
                  const Trajectory& t) {
  const std::size_t len = t.length();
  int best = 0;
  double best_sum = std::numeric_limits<double>::infinity();
  const double* cursor = flat.data();
  for (std::size_t id = 0; id < token_count; ++id, cursor += 2 * len) {
    double sum = 0.0;
    for (std::size_t l = 0; l < len; ++l) {
      const double dx = t.points[l].x - cursor[2 * l];
      const double dy = t.points[l].y - cursor[2 * l + 1];
      sum += dx * dx + dy * dy;
      if (sum >= best_sum) break;
    }
    if (sum < best_sum) {
      best_sum = sum;
      best = static_cast<int>(id);
    }
  }
  return best;
}

}  // namespace

int encode(const Vocabulary& v, const Trajectory& t) {
  check_query(v, t);
  const std::vector<double> flat = flatten_tokens(v);
  return nearest_token(flat, v.tokens.size(), t);
}

std::vector<int> encode_batch(const Vocabulary& v,
                              std::span<const Trajectory> trajectories) {
  std::vector<int> ids;
  ids.reserve(trajectories.size());
  if (trajectories.empty()) return ids;
  if (v.tokens.empty()) {
    throw EmptyVocabularyError("cannot encode against an empty vocabulary");
  }
  const std::vector<double> flat = flatten_tokens(v);
  for (const Trajectory& t : trajectories) {
    check_query(v, t);
    ids.push_back(nearest_token(flat, v.tokens.size(), t));
  }
  return ids;
}

Trajectory decode(const Vocabulary& v, int id) {
  if (id < 0 || static_cast<std::size_t>(id) >= v.tokens.size()) {
    throw IndexOutOfRangeError("token id " + std::to_string(id) +
                               " outside vocabulary of size " +
                               std::to_string(v.tokens.size()));
  }
  return v.tokens[static_cast<std::size_t>(id)].trajectory;
}

namespace {

void check_smoothing_args(std::size_t vocab_size, std::size_t gt_index,
                          double epsilon) {
  if (vocab_size < 2) {
    throw Error("label smoothing needs a vocabulary of at least 2 tokens");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw BadEpsilonError("epsilon must lie strictly between 0 and 1");
  }
  if (gt_index >= vocab_size) {
    throw BadIndexError("ground-truth index " + std::to_string(gt_index) +
                        " outside vocabulary of size " + std::to_string(vocab_size));
  }
}

}  // namespace

SmoothingTargets smoothing_targets_uniform(std::size_t vocab_size,
                                           std::size_t gt_index, double epsilon,
                                           bool normalized) {
  check_smoothing_args(vocab_size, gt_index, epsilon);
  const double divisor =
      normalized ? static_cast<double>(vocab_size - 1) : static_cast<double>(vocab_size);
  SmoothingTargets out;
  out.gt_index = gt_index;
  out.mode = SmoothingMode::Uniform;
  out.probs.assign(vocab_size, epsilon / divisor);
  out.probs[gt_index] = 1.0 - epsilon;
  return out;
}

SmoothingTargets smoothing_targets_spatial(const Vocabulary& v,
                                           std::size_t gt_index, double epsilon,
                                           double distance_floor) {
  check_smoothing_args(v.tokens.size(), gt_index, epsilon);
  if (!(distance_floor > 0.0)) {
    throw BadEpsilonError("distance floor must be positive");
  }

  const Trajectory& gt = v.tokens[gt_index].trajectory;
  SmoothingTargets out;
  out.gt_index = gt_index;
  out.mode = SmoothingMode::Spatial;
  out.probs.assign(v.tokens.size(), 0.0);

  std::vector<double> weight(v.tokens.size(), 0.0);
  double total = 0.0;
  for (std::size_t i = 0; i < v.tokens.size(); ++i) {
    if (i == gt_index) continue;
    weight[i] = 1.0 / (token_distance(v.tokens[i].trajectory, gt).squared_error +
                       distance_floor);
    total += weight[i];
  }
  for (std::size_t i = 0; i < v.tokens.size(); ++i) {
    if (i == gt_index) continue;
    out.probs[i] = epsilon * weight[i] / total;
  }
  out.probs[gt_index] = 1.0 - epsilon;
  return out;
}

}  // namespace trajtok
