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

#include "trajtok/grid.hpp"
#include "trajtok/types.hpp"
#include "trajtok/vocab.hpp"

namespace trajtok {

struct KDisksParams {
  std::uint64_t target_size = 1024;
  double radius = 0.25;  // meters, endpoint disk radius
  int rounds = 8;
  std::uint64_t seed = 0;
};

/// Randomized greedy disk-cover baseline ("kdisks-approx"): per round,
/// repeatedly draw a uniformly random remaining trajectory, keep it as a
/// token, and remove every trajectory whose endpoint lies within radius
/// of the kept endpoint; stop at target_size or exhaustion. The round
/// covering the most dataset endpoints wins (ties to the lowest round
/// index). Tokens are verbatim dataset trajectories, so coverage can
/// never exceed that of the dataset itself. Deterministic given the seed.
///
/// The grid is carried on the result for range bookkeeping only; it does
/// not influence selection. Token cells are the binned endpoints, or
/// (-1, -1) for endpoints outside the grid.
///
/// Throws EmptyDatasetError, Error (bad parameters).
Vocabulary build_kdisks_vocab(const NormalizedDataset& d, const GridSpec& grid,
                              const KDisksParams& params);

}  // namespace trajtok
