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

#include "trajtok/vocab.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trajtok/error.hpp"

namespace trajtok {

std::string to_string(TokenSource source) {
  switch (source) {
    case TokenSource::Mean:
      return "mean";
    case TokenSource::Interpolated:
      return "interp";
    case TokenSource::Sampled:
      return "sampled";
  }
  return "mean";
}

std::optional<TokenSource> token_source_from_string(std::string_view name) {
  if (name == "mean") return TokenSource::Mean;
  if (name == "interp") return TokenSource::Interpolated;
  if (name == "sampled") return TokenSource::Sampled;
  return std::nullopt;
}

namespace {

// Shared accumulation for both mean_token overloads. trajectory_at(n)
// must yield the n-th group member; all members must share one length.
template <typename TrajectoryAt>
Trajectory mean_of_group(std::size_t group_size, TrajectoryAt&& trajectory_at) {
  if (group_size == 0) {
    throw EmptyCellError("cannot average an empty trajectory group");
  }
  const Trajectory& first = trajectory_at(0);
  const std::size_t len = first.length();

  std::vector<double> sum_x(len, 0.0), sum_y(len, 0.0);
  std::vector<double> sum_sin(len, 0.0), sum_cos(len, 0.0);
  for (std::size_t n = 0; n < group_size; ++n) {
    const Trajectory& t = trajectory_at(n);
    if (t.length() != len) {
      throw LengthMismatchError("trajectory group has mixed lengths");
    }
    for (std::size_t l = 0; l < len; ++l) {
      sum_x[l] += t.points[l].x;
      sum_y[l] += t.points[l].y;
      sum_sin[l] += std::sin(t.points[l].yaw);
      sum_cos[l] += std::cos(t.points[l].yaw);
    }
  }

  Trajectory out;
  out.agent_type = first.agent_type;
  out.points.reserve(len);
  const double inv = 1.0 / static_cast<double>(group_size);
  for (std::size_t l = 0; l < len; ++l) {
    out.points.push_back(Pose{
        sum_x[l] * inv,
        sum_y[l] * inv,
        wrap_angle(std::atan2(sum_sin[l], sum_cos[l])),
    });
  }
  return out;
}

}  // namespace

Trajectory mean_token(std::span<const Trajectory> group) {
  return mean_of_group(group.size(),
                       [&](std::size_t n) -> const Trajectory& { return group[n]; });
}

Trajectory mean_token(const NormalizedDataset& d,
                      std::span<const std::uint32_t> members) {
  return mean_of_group(members.size(), [&](std::size_t n) -> const Trajectory& {
    return d.trajectories[members[n]];
  });
}

double estimate_cell_yaw(const NormalizedDataset& d, const OccupancyResult& occ,
                         CellIndex cell) {
  const OccupancyMap& m = occ.map;
  const int r = (m.window - 1) / 2;
  const int i0 = std::max(0, cell.i - r);
  const int i1 = std::min(m.grid.height - 1, cell.i + r);
  const int j0 = std::max(0, cell.j - r);
  const int j1 = std::min(m.grid.width - 1, cell.j + r);

  double sum_sin = 0.0;
  double sum_cos = 0.0;
  bool any = false;
  for (int i = i0; i <= i1; ++i) {
    for (int j = j0; j <= j1; ++j) {
      const std::size_t idx = m.index(i, j);
      if (!m.occupied[idx]) continue;
      for (const std::uint32_t t : occ.cell_members[idx]) {
        const Pose& end = d.trajectories[t].endpoint();
        sum_sin += std::sin(end.yaw);
        sum_cos += std::cos(end.yaw);
        any = true;
      }
    }
  }
  if (!any) {
    // Empty window; point the heading away from the origin.
    const Pose center = cell_center(m.grid, cell);
    return wrap_angle(std::atan2(center.y, center.x));
  }
  return wrap_angle(std::atan2(sum_sin, sum_cos));
}

Trajectory interp_token(const Pose& endpoint, int token_length,
                        AgentType agent_type) {
  Trajectory out;
  out.agent_type = agent_type;
  out.points.reserve(static_cast<std::size_t>(token_length));

  const double chord = std::hypot(endpoint.x, endpoint.y);
  if (chord < kDegenerateChord) {
    out.points.assign(static_cast<std::size_t>(token_length), Pose{0.0, 0.0, 0.0});
    return out;
  }

  // Cubic Hermite from the origin: start tangent along +x, end tangent
  // along the endpoint heading, both scaled to the chord length.
  const double m0x = chord;
  const double m0y = 0.0;
  const double m1x = chord * std::cos(endpoint.yaw);
  const double m1y = chord * std::sin(endpoint.yaw);

  for (int step = 1; step <= token_length; ++step) {
    const double t = static_cast<double>(step) / static_cast<double>(token_length);
    const double t2 = t * t;
    const double t3 = t2 * t;
    // Basis for p0 = 0 omitted; at t = 1 the remaining basis is exactly
    // (0, 1, 0), so the last sample reproduces the endpoint bit-for-bit.
    const double h10 = t3 - 2.0 * t2 + t;
    const double h01 = -2.0 * t3 + 3.0 * t2;
    const double h11 = t3 - t2;
    const double x = h10 * m0x + h01 * endpoint.x + h11 * m1x;
    const double y = h10 * m0y + h01 * endpoint.y + h11 * m1y;

    const double d10 = 3.0 * t2 - 4.0 * t + 1.0;
    const double d01 = -6.0 * t2 + 6.0 * t;
    const double d11 = 3.0 * t2 - 2.0 * t;
    const double dx = d10 * m0x + d01 * endpoint.x + d11 * m1x;
    const double dy = d10 * m0y + d01 * endpoint.y + d11 * m1y;

    out.points.push_back(Pose{x, y, wrap_angle(std::atan2(dy, dx))});
  }
  return out;
}

BuildResult build_vocabulary(const NormalizedDataset& d, const GridSpec& grid,
                             const BuildParams& params) {
  if (d.trajectories.empty()) {
    throw EmptyDatasetError("cannot build a vocabulary from an empty dataset");
  }
  for (const Trajectory& t : d.trajectories) {
    if (t.length() != static_cast<std::size_t>(params.token_length)) {
      throw LengthMismatchError(
          "dataset trajectory length " + std::to_string(t.length()) +
          " does not match the configured token length " +
          std::to_string(params.token_length));
    }
  }

  OccupancyResult occ = build_occupancy(grid, d, params.window);
  const CellClassification cls =
      classify_cells(occ.map, params.filter_threshold, params.expand_threshold);

  BuildResult result;
  Vocabulary& v = result.vocabulary;
  BuildReport& report = result.report;

  v.agent_type = d.trajectories.front().agent_type;
  v.grid = grid;
  v.tokenizer = kTokenizerGrid;
  v.params = params;
  report.trajectories_dropped = occ.dropped_out_of_range;
  report.trajectories_used = d.trajectories.size() - occ.dropped_out_of_range;
  report.warnings = occ.warnings;

  for (int i = 0; i < grid.height; ++i) {
    for (int j = 0; j < grid.width; ++j) {
      const std::size_t idx = occ.map.index(i, j);
      switch (cls.provenance[idx]) {
        case CellProvenance::DataKept: {
          ++report.cells_data_kept;
          TrajToken token;
          token.id = static_cast<int>(v.tokens.size());
          token.cell = CellIndex{i, j};
          token.source = TokenSource::Mean;
          token.trajectory = mean_token(d, occ.cell_members[idx]);
          v.tokens.push_back(std::move(token));
          break;
        }
        case CellProvenance::Expanded: {
          ++report.cells_expanded;
          Pose endpoint = cell_center(grid, CellIndex{i, j});
          endpoint.yaw = estimate_cell_yaw(d, occ, CellIndex{i, j});
          if (std::hypot(endpoint.x, endpoint.y) < kDegenerateChord) {
            ++report.degenerate_interpolations;
          }
          TrajToken token;
          token.id = static_cast<int>(v.tokens.size());
          token.cell = CellIndex{i, j};
          token.source = TokenSource::Interpolated;
          token.trajectory =
              interp_token(endpoint, params.token_length, v.agent_type);
          v.tokens.push_back(std::move(token));
          break;
        }
        case CellProvenance::DataFiltered:
          ++report.cells_data_filtered;
          break;
        case CellProvenance::Empty:
          ++report.cells_empty;
          break;
      }
    }
  }
  return result;
}

GridSpec default_grid(AgentType type) {
  switch (type) {
    case AgentType::Vehicle:
      return make_grid_spec(-5.0, 20.0, 0.1, -1.5, 4.5, 0.05);
    case AgentType::Cyclist:
      return make_grid_spec(-1.0, 8.0, 0.05, -1.0, 1.0, 0.05);
    case AgentType::Pedestrian:
      return make_grid_spec(-1.5, 4.5, 0.05, -2.0, 2.0, 0.05);
  }
  return make_grid_spec(-5.0, 20.0, 0.1, -1.5, 4.5, 0.05);
}

}  // namespace trajtok
