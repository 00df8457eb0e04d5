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

#include "trajtok/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "trajtok/codec.hpp"
#include "trajtok/error.hpp"
#include "trajtok/frame.hpp"

namespace trajtok {

namespace {

void check_eval_inputs(const Vocabulary& v, const NormalizedDataset& held_out) {
  if (v.tokens.empty()) {
    throw EmptyVocabularyError("cannot evaluate an empty vocabulary");
  }
  if (held_out.trajectories.empty()) {
    throw EmptyDatasetError("cannot evaluate against an empty held-out set");
  }
}

double endpoint_error(const Trajectory& a, const Trajectory& b) {
  return std::hypot(a.endpoint().x - b.endpoint().x,
                    a.endpoint().y - b.endpoint().y);
}

bool matches_within(const Trajectory& a, const Trajectory& b, double tol) {
  if (a.length() != b.length()) return false;
  for (std::size_t l = 0; l < a.length(); ++l) {
    if (std::abs(a.points[l].x - b.points[l].x) > tol) return false;
    if (std::abs(a.points[l].y - b.points[l].y) > tol) return false;
    if (std::abs(wrap_angle(a.points[l].yaw - b.points[l].yaw)) > tol) return false;
  }
  return true;
}

std::set<CellIndex> token_cells(const Vocabulary& v) {
  std::set<CellIndex> cells;
  for (const TrajToken& t : v.tokens) {
    cells.insert(t.cell);
  }
  return cells;
}

Vocabulary build_from_config(const BuilderConfig& config,
                             const NormalizedDataset& d) {
  if (const auto* grid_cfg = std::get_if<GridBuilderConfig>(&config)) {
    return build_vocabulary(d, grid_cfg->grid, grid_cfg->params).vocabulary;
  }
  const auto& kd = std::get<KDisksBuilderConfig>(config);
  return build_kdisks_vocab(d, kd.grid, kd.params);
}

}  // namespace

std::pair<double, double> reconstruction_error(const Vocabulary& v,
                                               const NormalizedDataset& held_out) {
  check_eval_inputs(v, held_out);
  const std::vector<int> ids = encode_batch(v, held_out.trajectories);
  double sum = 0.0;
  double worst = 0.0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const double err = endpoint_error(
        held_out.trajectories[i],
        v.tokens[static_cast<std::size_t>(ids[i])].trajectory);
    sum += err;
    worst = std::max(worst, err);
  }
  return {sum / static_cast<double>(ids.size()), worst};
}

double symmetry_score(const Vocabulary& v, double tol) {
  if (v.tokens.empty()) return 0.0;

  std::size_t eligible = 0;
  std::size_t matched = 0;
  for (const TrajToken& token : v.tokens) {
    const Pose mirrored_end = flip_pose(token.trajectory.endpoint());
    if (!(mirrored_end.x >= v.grid.x_min && mirrored_end.x < v.grid.x_max &&
          mirrored_end.y >= v.grid.y_min && mirrored_end.y < v.grid.y_max)) {
      continue;  // mirror falls outside the grid range; exempt
    }
    ++eligible;
    const Trajectory mirrored = flip_trajectory(token.trajectory);
    for (const TrajToken& candidate : v.tokens) {
      if (matches_within(candidate.trajectory, mirrored, tol)) {
        ++matched;
        break;
      }
    }
  }
  if (eligible == 0) return 1.0;
  return static_cast<double>(matched) / static_cast<double>(eligible);
}

double utilization(const Vocabulary& v, const NormalizedDataset& held_out) {
  check_eval_inputs(v, held_out);
  const std::vector<int> ids = encode_batch(v, held_out.trajectories);
  std::vector<std::uint8_t> used(v.tokens.size(), 0);
  for (const int id : ids) {
    used[static_cast<std::size_t>(id)] = 1;
  }
  const auto selected = std::count(used.begin(), used.end(), std::uint8_t{1});
  return static_cast<double>(selected) / static_cast<double>(v.tokens.size());
}

std::size_t robustness_probe(const BuilderConfig& config,
                             const NormalizedDataset& d,
                             std::span<const Trajectory> noise) {
  const Vocabulary clean = build_from_config(config, d);

  NormalizedDataset noised = d;
  noised.trajectories.insert(noised.trajectories.end(), noise.begin(), noise.end());
  const Vocabulary dirty = build_from_config(config, noised);

  const std::set<CellIndex> a = token_cells(clean);
  const std::set<CellIndex> b = token_cells(dirty);
  std::vector<CellIndex> diff;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(diff));
  return diff.size();
}

EvalReport evaluate(const Vocabulary& v, const NormalizedDataset& held_out,
                    std::span<const double> coverage_deltas, double symmetry_tol) {
  check_eval_inputs(v, held_out);

  EvalReport report;
  report.vocab_size = v.tokens.size();

  const std::vector<int> ids = encode_batch(v, held_out.trajectories);
  double sum = 0.0;
  double worst = 0.0;
  std::vector<std::size_t> within(coverage_deltas.size(), 0);
  std::vector<std::uint8_t> used(v.tokens.size(), 0);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const double err = endpoint_error(
        held_out.trajectories[i],
        v.tokens[static_cast<std::size_t>(ids[i])].trajectory);
    sum += err;
    worst = std::max(worst, err);
    for (std::size_t k = 0; k < coverage_deltas.size(); ++k) {
      if (err <= coverage_deltas[k]) ++within[k];
    }
    used[static_cast<std::size_t>(ids[i])] = 1;
  }

  const auto n = static_cast<double>(ids.size());
  report.mean_endpoint_error = sum / n;
  report.max_endpoint_error = worst;
  for (std::size_t k = 0; k < coverage_deltas.size(); ++k) {
    report.coverage.emplace_back(coverage_deltas[k],
                                 static_cast<double>(within[k]) / n);
  }
  const auto selected = std::count(used.begin(), used.end(), std::uint8_t{1});
  report.utilization =
      static_cast<double>(selected) / static_cast<double>(v.tokens.size());
  report.symmetry = symmetry_score(v, symmetry_tol);
  return report;
}

EvalReport evaluate(const Vocabulary& v, const NormalizedDataset& held_out) {
  return evaluate(v, held_out, kDefaultCoverageDeltas, kDefaultSymmetryTol);
}

}  // namespace trajtok
