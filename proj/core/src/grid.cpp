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

#include "trajtok/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "trajtok/error.hpp"

namespace trajtok {

namespace {

// Number of cells along one axis; the range must divide evenly.
int axis_cells(double lo, double hi, double interval, const char* axis) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && std::isfinite(interval))) {
    throw DegenerateGridError(std::string(axis) + " axis has non-finite bounds");
  }
  if (!(lo < hi)) {
    throw DegenerateGridError(std::string(axis) + " range is empty or inverted");
  }
  if (!(interval > 0.0)) {
    throw DegenerateGridError(std::string(axis) + " interval must be positive");
  }
  const double cells = (hi - lo) / interval;
  const long rounded = std::lround(cells);
  if (rounded < 1 || std::abs((hi - lo) - static_cast<double>(rounded) * interval) > 1e-9) {
    throw DegenerateGridError(std::string(axis) +
                              " range is not an integer multiple of the interval");
  }
  return static_cast<int>(rounded);
}

}  // namespace

GridSpec make_grid_spec(double x_min, double x_max, double x_interval,
                        double y_min, double y_max, double y_interval) {
  GridSpec g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.y_min = y_min;
  g.y_max = y_max;
  g.x_interval = x_interval;
  g.y_interval = y_interval;
  g.width = axis_cells(x_min, x_max, x_interval, "x");
  g.height = axis_cells(y_min, y_max, y_interval, "y");
  return g;
}

std::optional<CellIndex> bin_endpoint(const GridSpec& grid, const Pose& p) {
  if (!(p.x >= grid.x_min && p.x < grid.x_max && p.y >= grid.y_min &&
        p.y < grid.y_max)) {
    return std::nullopt;
  }
  // The min() guards the one-ulp case where the quotient of a point just
  // under the upper bound rounds up to the cell count.
  const int j = std::min(grid.width - 1,
                         static_cast<int>(std::floor((p.x - grid.x_min) / grid.x_interval)));
  const int i = std::min(grid.height - 1,
                         static_cast<int>(std::floor((p.y - grid.y_min) / grid.y_interval)));
  return CellIndex{i, j};
}

Pose cell_center(const GridSpec& grid, CellIndex cell) {
  return Pose{
      grid.x_min + (static_cast<double>(cell.j) + 0.5) * grid.x_interval,
      grid.y_min + (static_cast<double>(cell.i) + 0.5) * grid.y_interval,
      0.0,
  };
}

OccupancyResult build_occupancy(const GridSpec& grid, const NormalizedDataset& d,
                                int window) {
  if (window < 1 || window % 2 == 0) {
    throw Error("neighborhood window must be an odd integer >= 1");
  }

  OccupancyResult out;
  OccupancyMap& m = out.map;
  m.grid = grid;
  m.window = window;
  const std::size_t cells = grid.cell_count();
  m.occupied.assign(cells, 0);
  m.count.assign(cells, 0);
  m.neighborhood.assign(cells, 0);
  out.cell_members.assign(cells, {});

  if (!d.flip_applied) {
    out.warnings.push_back(
        "dataset is not flip-augmented; the vocabulary will follow the raw "
        "endpoint distribution");
  }

  for (std::uint32_t t = 0; t < d.trajectories.size(); ++t) {
    const auto cell = bin_endpoint(grid, d.trajectories[t].endpoint());
    if (!cell) {
      ++out.dropped_out_of_range;
      continue;
    }
    const std::size_t idx = m.index(cell->i, cell->j);
    m.occupied[idx] = 1;
    ++m.count[idx];
    out.cell_members[idx].push_back(t);
  }

  if (out.dropped_out_of_range == d.trajectories.size()) {
    throw EmptyDatasetError("no trajectory endpoint falls inside the grid");
  }

  // Window counts via a summed-area table; borders clip, nothing wraps.
  const int h = grid.height;
  const int w = grid.width;
  std::vector<std::uint32_t> prefix(static_cast<std::size_t>(h + 1) * (w + 1), 0);
  const auto pref = [&](int i, int j) -> std::uint32_t& {
    return prefix[static_cast<std::size_t>(i) * (w + 1) + static_cast<std::size_t>(j)];
  };
  for (int i = 0; i < h; ++i) {
    for (int j = 0; j < w; ++j) {
      pref(i + 1, j + 1) = m.occupied[m.index(i, j)] + pref(i, j + 1) +
                           pref(i + 1, j) - pref(i, j);
    }
  }
  const int r = (window - 1) / 2;
  for (int i = 0; i < h; ++i) {
    const int i0 = std::max(0, i - r);
    const int i1 = std::min(h - 1, i + r);
    for (int j = 0; j < w; ++j) {
      const int j0 = std::max(0, j - r);
      const int j1 = std::min(w - 1, j + r);
      m.neighborhood[m.index(i, j)] =
          pref(i1 + 1, j1 + 1) - pref(i0, j1 + 1) - pref(i1 + 1, j0) + pref(i0, j0);
    }
  }

  return out;
}

CellClassification classify_cells(const OccupancyMap& m, int filter_threshold,
                                  int expand_threshold) {
  const int window_area = m.window * m.window;
  if (filter_threshold < 1 || filter_threshold > expand_threshold ||
      expand_threshold > window_area) {
    throw BadThresholdsError(
        "thresholds must satisfy 1 <= filter (" + std::to_string(filter_threshold) +
        ") <= expand (" + std::to_string(expand_threshold) + ") <= window^2 (" +
        std::to_string(window_area) + ")");
  }

  const std::size_t cells = m.grid.cell_count();
  CellClassification out;
  out.valid.assign(cells, 0);
  out.provenance.assign(cells, CellProvenance::Empty);

  for (std::size_t idx = 0; idx < cells; ++idx) {
    const auto nb = static_cast<int>(m.neighborhood[idx]);
    if (m.occupied[idx]) {
      if (nb >= filter_threshold) {
        out.valid[idx] = 1;
        out.provenance[idx] = CellProvenance::DataKept;
      } else {
        out.provenance[idx] = CellProvenance::DataFiltered;
      }
    } else if (nb >= expand_threshold) {
      out.valid[idx] = 1;
      out.provenance[idx] = CellProvenance::Expanded;
    }
  }
  return out;
}

}  // namespace trajtok
