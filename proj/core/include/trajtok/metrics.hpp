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
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "trajtok/kdisks.hpp"
#include "trajtok/types.hpp"
#include "trajtok/vocab.hpp"

namespace trajtok {

/// Quantitative vocabulary report. All fractions are in [0, 1].
struct EvalReport {
  std::size_t vocab_size = 0;
  double mean_endpoint_error = 0.0;  // meters, encode-decode reconstruction
  double max_endpoint_error = 0.0;
  std::vector<std::pair<double, double>> coverage;  // (delta, fraction <= delta)
  double symmetry = 0.0;
  double utilization = 0.0;
  std::optional<std::size_t> robustness_delta;
};

inline constexpr double kDefaultCoverageDeltas[] = {0.1, 0.25, 0.5};
inline constexpr double kDefaultSymmetryTol = 1e-9;

/// Encodes then decodes every held-out trajectory and reports the
/// (mean, max) Euclidean endpoint error in meters.
///
/// Throws EmptyDatasetError, EmptyVocabularyError.
std::pair<double, double> reconstruction_error(const Vocabulary& v,
                                               const NormalizedDataset& held_out);

/// Fraction of tokens whose reflection is matched by some token within
/// tol at every point (positions and yaw), counted only over tokens whose
/// mirrored endpoint lies inside the grid range. Tokens with no in-range
/// mirror are exempt, which matters for y-asymmetric grids.
double symmetry_score(const Vocabulary& v, double tol);

/// Fraction of token ids selected at least once when encoding held_out.
///
/// Throws EmptyDatasetError, EmptyVocabularyError.
double utilization(const Vocabulary& v, const NormalizedDataset& held_out);

/// One builder configuration for robustness probing.
struct GridBuilderConfig {
  GridSpec grid;
  BuildParams params;
};
struct KDisksBuilderConfig {
  GridSpec grid;
  KDisksParams params;
};
using BuilderConfig = std::variant<GridBuilderConfig, KDisksBuilderConfig>;

/// Builds vocabularies with and without the noise trajectories appended
/// and returns the size of the symmetric difference between the two token
/// cell sets (endpoint cells for k-disks tokens). Noise endpoints are
/// expected to be at least `window` cells (Chebyshev) from every
/// data-occupied cell; under that condition the grid pipeline with
/// filter_threshold >= 2 is unaffected.
std::size_t robustness_probe(const BuilderConfig& config,
                             const NormalizedDataset& d,
                             std::span<const Trajectory> noise);

/// Assembles the full report (reconstruction, coverage at each delta,
/// symmetry, utilization) over one held-out dataset. robustness_delta is
/// left unset; fill it from robustness_probe when a builder config and
/// noise set are available.
EvalReport evaluate(const Vocabulary& v, const NormalizedDataset& held_out,
                    std::span<const double> coverage_deltas,
                    double symmetry_tol = kDefaultSymmetryTol);

EvalReport evaluate(const Vocabulary& v, const NormalizedDataset& held_out);

}  // namespace trajtok
