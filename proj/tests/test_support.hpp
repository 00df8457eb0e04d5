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

// Shared generators and independent oracles for the test suites. The
// oracles deliberately recompute results by the most literal method
// available (per-cell window scans, whole-matrix recomputation, explicit
// cover simulation) so they stay independent of the library's fast paths.

#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "trajtok/frame.hpp"
#include "trajtok/grid.hpp"
#include "trajtok/random.hpp"
#include "trajtok/types.hpp"
#include "trajtok/vocab.hpp"

namespace testsupport {

using trajtok::AgentType;
using trajtok::CellIndex;
using trajtok::GridSpec;
using trajtok::NormalizedDataset;
using trajtok::OccupancyMap;
using trajtok::Pose;
using trajtok::Trajectory;

inline constexpr int kSteps = 5;

inline Pose random_pose(std::mt19937_64& rng, double span = 10.0) {
  return Pose{trajtok::uniform_double(rng, -span, span),
              trajtok::uniform_double(rng, -span, span),
              trajtok::wrap_angle(trajtok::uniform_double(rng, -trajtok::kPi,
                                                          trajtok::kPi))};
}

inline Trajectory random_trajectory(std::mt19937_64& rng, int steps = kSteps,
                                    double span = 10.0,
                                    AgentType type = AgentType::Vehicle) {
  Trajectory t;
  t.agent_type = type;
  for (int s = 0; s < steps; ++s) {
    t.points.push_back(random_pose(rng, span));
  }
  return t;
}

/// Straight line along +x ending at distance `reach`.
inline Trajectory straight(double reach, int steps = kSteps,
                           AgentType type = AgentType::Vehicle) {
  Trajectory t;
  t.agent_type = type;
  for (int s = 1; s <= steps; ++s) {
    t.points.push_back(
        Pose{reach * static_cast<double>(s) / static_cast<double>(steps), 0.0, 0.0});
  }
  return t;
}

/// Straight line to an arbitrary endpoint, heading along the chord.
inline Trajectory line_to(double x, double y, int steps = kSteps,
                          AgentType type = AgentType::Vehicle) {
  Trajectory t;
  t.agent_type = type;
  const double yaw = trajtok::wrap_angle(std::atan2(y, x));
  for (int s = 1; s <= steps; ++s) {
    const double f = static_cast<double>(s) / static_cast<double>(steps);
    t.points.push_back(Pose{x * f, y * f, yaw});
  }
  return t;
}

inline NormalizedDataset dataset_of(std::vector<Trajectory> trajectories,
                                    bool flip_applied = true) {
  NormalizedDataset d;
  d.trajectories = std::move(trajectories);
  d.flip_applied = flip_applied;
  return d;
}

/// Independent window-count oracle: literal double loop over the k x k
/// window, clipped at the borders.
inline int brute_window_count(const std::vector<std::uint8_t>& occupied,
                              int height, int width, int ci, int cj, int window) {
  const int r = (window - 1) / 2;
  int count = 0;
  for (int i = std::max(0, ci - r); i <= std::min(height - 1, ci + r); ++i) {
    for (int j = std::max(0, cj - r); j <= std::min(width - 1, cj + r); ++j) {
      count += occupied[static_cast<std::size_t>(i) * width + j] ? 1 : 0;
    }
  }
  return count;
}

/// Independent mean-squared planar distance, summed in reverse order so
/// it does not share an accumulation path with the implementation.
inline double brute_token_distance(const Trajectory& a, const Trajectory& b) {
  double sum = 0.0;
  for (std::size_t l = a.length(); l-- > 0;) {
    const double dx = a.points[l].x - b.points[l].x;
    const double dy = a.points[l].y - b.points[l].y;
    sum += dx * dx + dy * dy;
  }
  return sum / static_cast<double>(a.length());
}

inline bool trajectories_close(const Trajectory& a, const Trajectory& b,
                               double tol) {
  if (a.length() != b.length()) return false;
  for (std::size_t l = 0; l < a.length(); ++l) {
    if (std::abs(a.points[l].x - b.points[l].x) > tol) return false;
    if (std::abs(a.points[l].y - b.points[l].y) > tol) return false;
    if (std::abs(trajtok::wrap_angle(a.points[l].yaw - b.points[l].yaw)) > tol) {
      return false;
    }
  }
  return true;
}

/// Exhaustive mirror search: true iff some token matches flip(t).
inline bool has_mirror_token(const trajtok::Vocabulary& v, const Trajectory& t,
                             double tol) {
  const Trajectory mirrored = trajtok::flip_trajectory(t);
  for (const trajtok::TrajToken& candidate : v.tokens) {
    if (trajectories_close(candidate.trajectory, mirrored, tol)) return true;
  }
  return false;
}

/// One token per grid cell, interpolated to the center with heading 0:
/// the naive rule-based vocabulary without any data filtering.
inline trajtok::Vocabulary naive_full_grid_vocab(const GridSpec& grid,
                                                 AgentType type,
                                                 int steps = kSteps) {
  trajtok::Vocabulary v;
  v.agent_type = type;
  v.grid = grid;
  v.params.token_length = steps;
  for (int i = 0; i < grid.height; ++i) {
    for (int j = 0; j < grid.width; ++j) {
      trajtok::TrajToken token;
      token.id = static_cast<int>(v.tokens.size());
      token.cell = CellIndex{i, j};
      token.source = trajtok::TokenSource::Interpolated;
      Pose center = trajtok::cell_center(grid, token.cell);
      token.trajectory = trajtok::interp_token(center, steps, type);
      v.tokens.push_back(std::move(token));
    }
  }
  return v;
}

}  // namespace testsupport
