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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "trajtok/types.hpp"

namespace trajtok {

/// Uniform endpoint grid over [x_min, x_max) x [y_min, y_max).
/// Rows (index i, count height) run along y; columns (index j, count
/// width) run along x. Cells are half-open on both axes: a cell owns its
/// low edges, and points exactly on x_max or y_max fall outside.
struct GridSpec {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  double x_interval = 0.0;
  double y_interval = 0.0;
  int height = 0;
  int width = 0;

  std::size_t cell_count() const noexcept {
    return static_cast<std::size_t>(height) * static_cast<std::size_t>(width);
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Row/column address of one grid cell. (-1, -1) means "no cell".
struct CellIndex {
  int i = -1;
  int j = -1;

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

/// Validates bounds and intervals and derives (height, width). Ranges
/// must be integer multiples of their intervals to within 1e-9 m.
///
/// Throws DegenerateGridError.
GridSpec make_grid_spec(double x_min, double x_max, double x_interval,
                        double y_min, double y_max, double y_interval);

/// Cell containing an endpoint, or nullopt when the point lies outside
/// [x_min, x_max) x [y_min, y_max). Out-of-range is a value, not an error.
std::optional<CellIndex> bin_endpoint(const GridSpec& grid, const Pose& p);

/// Center of a cell, heading zero.
Pose cell_center(const GridSpec& grid, CellIndex cell);

/// Per-cell endpoint statistics of a dataset, including the k x k
/// neighborhood occupancy counts used by cell classification. Windows are
/// clipped at the map borders; counts are not rescaled there.
struct OccupancyMap {
  GridSpec grid;
  int window = 5;  // odd k; neighborhood counts occupied cells in k x k
  std::vector<std::uint8_t> occupied;       // height * width, row-major
  std::vector<std::uint32_t> count;         // trajectories per cell
  std::vector<std::uint32_t> neighborhood;  // occupied cells per window

  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(grid.width) +
           static_cast<std::size_t>(j);
  }
};

/// OccupancyMap plus the per-cell trajectory groups needed downstream.
struct OccupancyResult {
  OccupancyMap map;
  /// Indices into the source dataset's trajectory array, one list per
  /// cell in row-major order. Order within a cell follows dataset order.
  std::vector<std::vector<std::uint32_t>> cell_members;
  std::uint64_t dropped_out_of_range = 0;
  std::vector<std::string> warnings;
};

/// Bins every trajectory endpoint into the grid and fills occupancy,
/// per-cell counts, and window neighborhood counts. Trajectories whose
/// endpoint falls outside the grid are dropped (and counted); a dataset
/// that leaves the grid entirely empty is an error.
///
/// window must be an odd integer >= 1. A non-flip-augmented dataset is
/// accepted with a warning in the result.
///
/// Throws EmptyDatasetError, Error (bad window).
OccupancyResult build_occupancy(const GridSpec& grid,
                                const NormalizedDataset& d, int window);

enum class CellProvenance : std::uint8_t {
  Empty,         // no data, not expanded
  DataKept,      // occupied with enough support in the window
  DataFiltered,  // occupied but isolated; treated as noise
  Expanded,      // empty but surrounded by dense occupancy
};

/// Validity decision for every cell, with the reason it was made.
struct CellClassification {
  std::vector<std::uint8_t> valid;
  std::vector<CellProvenance> provenance;
};

/// Single-pass classification against the original occupancy map (the
/// decision is never iterated to a fixpoint):
///   occupied  -> valid iff neighborhood >= filter_threshold
///   empty     -> valid iff neighborhood >= expand_threshold
/// Requires 1 <= filter_threshold <= expand_threshold <= window^2.
///
/// Throws BadThresholdsError.
CellClassification classify_cells(const OccupancyMap& m, int filter_threshold,
                                  int expand_threshold);

}  // namespace trajtok
