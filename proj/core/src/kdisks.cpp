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

#include "trajtok/kdisks.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "trajtok/error.hpp"
#include "trajtok/random.hpp"

namespace trajtok {

namespace {

struct Round {
  std::vector<std::uint32_t> picks;  // dataset indices, in selection order
  std::size_t covered = 0;           // endpoints within radius of a pick
};

Round run_round(const std::vector<double>& ex, const std::vector<double>& ey,
                std::uint64_t target_size, double radius, std::uint64_t seed) {
  const std::size_t n = ex.size();
  const double r2 = radius * radius;

  // Swap-remove pool of remaining trajectory indices.
  std::vector<std::uint32_t> pool(n);
  for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(i);

  std::mt19937_64 rng(seed);
  Round round;
  while (!pool.empty() && round.picks.size() < target_size) {
    const std::size_t at = uniform_below(rng, pool.size());
    const std::uint32_t pick = pool[at];
    round.picks.push_back(pick);

    // Remove everything inside the disk around the picked endpoint,
    // including the pick itself.
    const double px = ex[pick];
    const double py = ey[pick];
    std::size_t i = 0;
    while (i < pool.size()) {
      const double dx = ex[pool[i]] - px;
      const double dy = ey[pool[i]] - py;
      if (dx * dx + dy * dy <= r2) {
        pool[i] = pool.back();
        pool.pop_back();
      } else {
        ++i;
      }
    }
  }
  // Anything still in the pool is, by construction, farther than radius
  // from every pick.
  round.covered = n - pool.size();
  return round;
}

}  // namespace

Vocabulary build_kdisks_vocab(const NormalizedDataset& d, const GridSpec& grid,
                              const KDisksParams& params) {
  if (d.trajectories.empty()) {
    throw EmptyDatasetError("cannot sample tokens from an empty dataset");
  }
  if (params.target_size < 1) {
    throw Error("target size must be at least 1");
  }
  if (!(params.radius > 0.0)) {
    throw Error("disk radius must be positive");
  }
  if (params.rounds < 1) {
    throw Error("round count must be at least 1");
  }

  std::vector<double> ex(d.trajectories.size());
  std::vector<double> ey(d.trajectories.size());
  for (std::size_t i = 0; i < d.trajectories.size(); ++i) {
    ex[i] = d.trajectories[i].endpoint().x;
    ey[i] = d.trajectories[i].endpoint().y;
  }

  Round best;
  int best_round = -1;
  for (int r = 0; r < params.rounds; ++r) {
    Round round = run_round(ex, ey, params.target_size, params.radius,
                            mix_seed(params.seed, static_cast<std::uint64_t>(r)));
    if (best_round < 0 || round.covered > best.covered) {
      best = std::move(round);
      best_round = r;
    }
  }

  Vocabulary v;
  v.agent_type = d.trajectories.front().agent_type;
  v.grid = grid;
  v.tokenizer = kTokenizerKDisks;
  v.params.token_length = static_cast<int>(d.trajectories.front().length());
  v.kdisks = KDisksInfo{params.target_size, params.radius, params.rounds,
                        params.seed};
  v.tokens.reserve(best.picks.size());
  for (const std::uint32_t pick : best.picks) {
    TrajToken token;
    token.id = static_cast<int>(v.tokens.size());
    token.trajectory = d.trajectories[pick];
    token.source = TokenSource::Sampled;
    const auto cell = bin_endpoint(grid, token.trajectory.endpoint());
    token.cell = cell.value_or(CellIndex{-1, -1});
    v.tokens.push_back(std::move(token));
  }
  return v;
}

}  // namespace trajtok
