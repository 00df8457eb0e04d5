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
#include <span>
#include <string>
#include <vector>

#include "trajtok/grid.hpp"
#include "trajtok/types.hpp"

namespace trajtok {

enum class TokenSource : std::uint8_t {
  Mean,          // pointwise average of the trajectories in one cell
  Interpolated,  // synthesized curve to the center of an expanded cell
  Sampled,       // verbatim dataset trajectory (k-disks baseline)
};

std::string to_string(TokenSource source);
std::optional<TokenSource> token_source_from_string(std::string_view name);

struct TrajToken {
  int id = 0;
  Trajectory trajectory;
  CellIndex cell;  // (-1, -1) when the endpoint is outside the grid
  TokenSource source = TokenSource::Mean;
};

/// Grid-pipeline build parameters.
struct BuildParams {
  int window = 5;            // odd k; side of the neighborhood window
  int filter_threshold = 3;  // occupied cells required to keep a data cell
  int expand_threshold = 13; // occupied cells required to validate an empty cell
  int token_length = 5;      // poses per token

  friend bool operator==(const BuildParams&, const BuildParams&) = default;
};

/// Parameters a k-disks vocabulary was built with, kept for provenance.
struct KDisksInfo {
  std::uint64_t target_size = 0;
  double radius = 0.0;
  int rounds = 1;
  std::uint64_t seed = 0;

  friend bool operator==(const KDisksInfo&, const KDisksInfo&) = default;
};

inline constexpr const char* kTokenizerGrid = "trajtok";
inline constexpr const char* kTokenizerKDisks = "kdisks-approx";

/// Ordered list of trajectory tokens. For grid-built vocabularies, ids
/// run 0..size-1 in row-major cell order, so identical inputs always
/// produce bit-identical vocabularies. Immutable by convention once built.
struct Vocabulary {
  AgentType agent_type = AgentType::Vehicle;
  GridSpec grid;
  std::string tokenizer = kTokenizerGrid;
  BuildParams params;
  std::optional<KDisksInfo> kdisks;
  std::vector<TrajToken> tokens;

  std::size_t size() const noexcept { return tokens.size(); }
};

/// Pointwise average of a non-empty group of equal-length trajectories:
/// arithmetic in x and y, circular in yaw (atan2 of mean sin/cos, so the
/// +-pi seam is handled correctly).
///
/// Throws EmptyCellError, LengthMismatchError.
Trajectory mean_token(std::span<const Trajectory> group);

/// Same, with the group given as indices into a dataset.
Trajectory mean_token(const NormalizedDataset& d,
                      std::span<const std::uint32_t> members);

/// Heading estimate for a cell without data of its own: circular mean of
/// the endpoint yaws of every trajectory binned into an occupied cell of
/// the k x k window around it (each trajectory counts once, so cells are
/// weighted by their trajectory count). If the window holds no data at
/// all the heading of the cell center seen from the origin is used.
double estimate_cell_yaw(const NormalizedDataset& d, const OccupancyResult& occ,
                         CellIndex cell);

/// Chord length below which an endpoint counts as degenerate and
/// interp_token emits an all-zero trajectory instead of a curve.
inline constexpr double kDegenerateChord = 1e-6;

/// Synthesizes a token trajectory from the origin to the given endpoint
/// with a cubic Hermite curve: start tangent along +x, end tangent along
/// endpoint.yaw, both with magnitude equal to the chord length. Sampled
/// at parameters 1/L .. 1; per-point yaw is the tangent direction. The
/// last sample equals the endpoint exactly. Collinear boundary data
/// degenerates to the straight line.
Trajectory interp_token(const Pose& endpoint, int token_length,
                        AgentType agent_type);

/// Cell and trajectory counters from one vocabulary build.
struct BuildReport {
  std::uint64_t cells_data_kept = 0;
  std::uint64_t cells_data_filtered = 0;
  std::uint64_t cells_expanded = 0;
  std::uint64_t cells_empty = 0;
  std::uint64_t trajectories_used = 0;
  std::uint64_t trajectories_dropped = 0;  // endpoint outside the grid
  std::uint64_t degenerate_interpolations = 0;
  std::vector<std::string> warnings;
};

struct BuildResult {
  Vocabulary vocabulary;
  BuildReport report;
};

/// Full grid pipeline: bin endpoints, classify cells against the window
/// occupancy, then emit one token per valid cell — the group mean where
/// the cell has data, an interpolated curve to the cell center where the
/// cell was validated by expansion. Deterministic; ids follow row-major
/// cell order.
///
/// Every trajectory must have length params.token_length.
///
/// Throws EmptyDatasetError, BadThresholdsError, LengthMismatchError.
BuildResult build_vocabulary(const NormalizedDataset& d, const GridSpec& grid,
                             const BuildParams& params);

/// Table of per-agent grid defaults (vehicle, cyclist, pedestrian).
GridSpec default_grid(AgentType type);

}  // namespace trajtok
