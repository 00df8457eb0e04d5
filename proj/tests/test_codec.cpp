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
#include <numeric>
#include <random>

#include <doctest.h>

#include "trajtok/error.hpp"
#include "trajtok/frame.hpp"
#include "test_support.hpp"

using namespace trajtok;
using testsupport::kSteps;

namespace {

// Hand-assembled vocabulary from explicit trajectories (grid-independent).
Vocabulary vocab_of(std::vector<Trajectory> trajectories,
                    AgentType type = AgentType::Vehicle) {
  Vocabulary v;
  v.agent_type = type;
  v.grid = make_grid_spec(-50, 50, 1.0, -50, 50, 1.0);
  v.params.token_length = static_cast<int>(trajectories.front().length());
  for (auto& t : trajectories) {
    TrajToken token;
    token.id = static_cast<int>(v.tokens.size());
    token.trajectory = std::move(t);
    token.cell = bin_endpoint(v.grid, token.trajectory.endpoint())
                     .value_or(CellIndex{-1, -1});
    v.tokens.push_back(std::move(token));
  }
  return v;
}

}  // namespace

TEST_CASE("token_distance: identical trajectories are at distance zero") {
  const Trajectory t = testsupport::straight(2.0);
  CHECK(token_distance(t, t).squared_error == 0.0);
}

TEST_CASE("token_distance: a constant (0.3, 0.4) offset gives 0.25") {
  std::mt19937_64 rng(97);
  const Trajectory a = testsupport::random_trajectory(rng);
  Trajectory b = a;
  for (Pose& p : b.points) {
    p.x += 0.3;
    p.y += 0.4;
  }
  CHECK(token_distance(a, b).squared_error == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("token_distance is symmetric and matches the reverse-order oracle") {
  std::mt19937_64 rng(101);
  for (int n = 0; n < 100; ++n) {
    const Trajectory a = testsupport::random_trajectory(rng);
    const Trajectory b = testsupport::random_trajectory(rng);
    const double ab = token_distance(a, b).squared_error;
    const double ba = token_distance(b, a).squared_error;
    CHECK(ab == doctest::Approx(ba).epsilon(1e-14));
    CHECK(ab == doctest::Approx(testsupport::brute_token_distance(a, b))
                    .epsilon(1e-12));
    CHECK(ab >= 0.0);
  }
}

TEST_CASE("token_distance ignores yaw") {
  const Trajectory a = testsupport::straight(1.0);
  Trajectory b = a;
  for (Pose& p : b.points) p.yaw = 2.0;
  CHECK(token_distance(a, b).squared_error == 0.0);
}

TEST_CASE("token_distance rejects mixed lengths") {
  CHECK_THROWS_AS(
      token_distance(testsupport::straight(1.0, 5), testsupport::straight(1.0, 4)),
      LengthMismatchError);
}

TEST_CASE("encode: an exact token match wins with distance zero") {
  std::mt19937_64 rng(103);
  std::vector<Trajectory> tokens;
  for (int n = 0; n < 10; ++n) {
    tokens.push_back(testsupport::random_trajectory(rng));
  }
  const Vocabulary v = vocab_of(tokens);
  CHECK(encode(v, v.tokens[7].trajectory) == 7);
}

TEST_CASE("encode picks the nearer of two straight tokens") {
  const Vocabulary v =
      vocab_of({testsupport::straight(1.0), testsupport::straight(2.0)});
  const Trajectory query = testsupport::straight(1.1);

  // Brute-force oracle over both distances.
  const double d0 = testsupport::brute_token_distance(query, v.tokens[0].trajectory);
  const double d1 = testsupport::brute_token_distance(query, v.tokens[1].trajectory);
  REQUIRE(d0 < d1);
  CHECK(encode(v, query) == 0);
}

TEST_CASE("encode ties break to the lowest id") {
  // Two tokens mirror-symmetric about the x-axis are equidistant from any
  // query on the axis.
  const Trajectory up = testsupport::line_to(1.0, 0.5);
  const Vocabulary v = vocab_of({up, flip_trajectory(up)});
  CHECK(encode(v, testsupport::straight(1.0)) == 0);
}

TEST_CASE("encode/decode round trip over every id") {
  std::mt19937_64 rng(107);
  std::vector<Trajectory> tokens;
  for (int n = 0; n < 50; ++n) {
    tokens.push_back(testsupport::random_trajectory(rng));
  }
  const Vocabulary v = vocab_of(tokens);
  for (int id = 0; id < static_cast<int>(v.size()); ++id) {
    CHECK(encode(v, decode(v, id)) == id);
  }
}

TEST_CASE("encode_batch agrees with encode") {
  std::mt19937_64 rng(109);
  std::vector<Trajectory> tokens;
  for (int n = 0; n < 20; ++n) tokens.push_back(testsupport::random_trajectory(rng));
  const Vocabulary v = vocab_of(tokens);

  std::vector<Trajectory> queries;
  for (int n = 0; n < 100; ++n) queries.push_back(testsupport::random_trajectory(rng));
  const std::vector<int> batch = encode_batch(v, queries);
  REQUIRE(batch.size() == queries.size());
  for (std::size_t n = 0; n < queries.size(); ++n) {
    CHECK(batch[n] == encode(v, queries[n]));
  }
}

TEST_CASE("encode input validation") {
  const Vocabulary empty;
  CHECK_THROWS_AS(encode(empty, testsupport::straight(1.0)), EmptyVocabularyError);

  const Vocabulary v = vocab_of({testsupport::straight(1.0)});
  Trajectory wrong_type = testsupport::straight(1.0);
  wrong_type.agent_type = AgentType::Pedestrian;
  CHECK_THROWS_AS(encode(v, wrong_type), AgentTypeMismatchError);

  CHECK_THROWS_AS(encode(v, testsupport::straight(1.0, 4)), LengthMismatchError);
}

TEST_CASE("decode bounds") {
  const Vocabulary v = vocab_of({testsupport::straight(1.0)});
  CHECK(testsupport::trajectories_close(decode(v, 0), v.tokens[0].trajectory, 0.0));
  CHECK_THROWS_AS(decode(v, 1), IndexOutOfRangeError);
  CHECK_THROWS_AS(decode(v, -1), IndexOutOfRangeError);
}

TEST_CASE("encode maps flipped queries to mirror tokens on a symmetric vocabulary") {
  std::mt19937_64 rng(113);
  std::vector<Trajectory> half;
  for (int n = 0; n < 12; ++n) {
    half.push_back(testsupport::line_to(uniform_double(rng, 0.5, 5.0),
                                        uniform_double(rng, 0.2, 3.0)));
  }
  std::vector<Trajectory> all = half;
  for (const Trajectory& t : half) all.push_back(flip_trajectory(t));
  const Vocabulary v = vocab_of(all);

  for (int n = 0; n < 50; ++n) {
    const Trajectory q = testsupport::random_trajectory(rng, kSteps, 4.0);
    const int id = encode(v, q);
    const int mirror_id = encode(v, flip_trajectory(q));
    // Mirror ids pair across the two halves whenever the minimizer is
    // unique; verify via the distances themselves.
    const double best = token_distance(q, v.tokens[id].trajectory).squared_error;
    bool unique = true;
    for (const TrajToken& t : v.tokens) {
      if (t.id != id &&
          token_distance(q, t.trajectory).squared_error <= best + 1e-15) {
        unique = false;
        break;
      }
    }
    if (unique) {
      const int expected = id < 12 ? id + 12 : id - 12;
      CHECK(mirror_id == expected);
    }
  }
}

TEST_CASE("uniform smoothing reproduces the closed-form vector exactly") {
  const SmoothingTargets t = smoothing_targets_uniform(4, 2, 0.1);
  REQUIRE(t.probs.size() == 4);
  CHECK(t.probs[0] == 0.025);
  CHECK(t.probs[1] == 0.025);
  CHECK(t.probs[2] == 0.9);  // 1 - 0.1, the ground-truth mass
  CHECK(t.probs[3] == 0.025);
  CHECK(t.mode == SmoothingMode::Uniform);

  // Literal rule: the vector sums to 1 - eps/|V|, not 1.
  const double sum = std::accumulate(t.probs.begin(), t.probs.end(), 0.0);
  CHECK(sum == doctest::Approx(1.0 - 0.1 / 4.0).epsilon(1e-12));
}

TEST_CASE("uniform smoothing: normalized variant sums to one") {
  const SmoothingTargets t =
      smoothing_targets_uniform(4, 2, 0.1, /*normalized=*/true);
  const double sum = std::accumulate(t.probs.begin(), t.probs.end(), 0.0);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t.probs[0] == doctest::Approx(0.1 / 3.0));
}

TEST_CASE("uniform smoothing: epsilon -> 0 approaches one-hot") {
  const SmoothingTargets t = smoothing_targets_uniform(4, 1, 1e-12);
  CHECK(t.probs[1] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(t.probs[0] == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("smoothing argument validation") {
  CHECK_THROWS_AS(smoothing_targets_uniform(4, 2, 0.0), BadEpsilonError);
  CHECK_THROWS_AS(smoothing_targets_uniform(4, 2, 1.0), BadEpsilonError);
  CHECK_THROWS_AS(smoothing_targets_uniform(4, 2, -0.5), BadEpsilonError);
  CHECK_THROWS_AS(smoothing_targets_uniform(4, 4, 0.1), BadIndexError);
  CHECK_THROWS_AS(smoothing_targets_uniform(1, 0, 0.1), Error);

  const Vocabulary v =
      vocab_of({testsupport::straight(1.0), testsupport::straight(2.0)});
  CHECK_THROWS_AS(smoothing_targets_spatial(v, 0, 0.1, 0.0), BadEpsilonError);
  CHECK_THROWS_AS(smoothing_targets_spatial(v, 2, 0.1, 0.01), BadIndexError);
}

TEST_CASE("spatial smoothing matches the hand-evaluated 3-token example") {
  // Token 0 is the ground truth; tokens 1 and 2 sit at constant offsets
  // (1, 0) and (2, 0), so the mean squared distances are exactly 1 and 4.
  const Trajectory gt = testsupport::straight(1.0);
  Trajectory near = gt;
  Trajectory far = gt;
  for (Pose& p : near.points) p.x += 1.0;
  for (Pose& p : far.points) p.x += 2.0;
  const Vocabulary v = vocab_of({gt, near, far});

  const SmoothingTargets t = smoothing_targets_spatial(v, 0, 0.1, 0.01);

  // Hand evaluation: k1 = 1/(1 + 0.01), k2 = 1/(4 + 0.01), normalized to
  // a total non-ground-truth mass of 0.1.
  const double k1 = 1.0 / 1.01;
  const double k2 = 1.0 / 4.01;
  const double expected1 = 0.1 * k1 / (k1 + k2);
  const double expected2 = 0.1 * k2 / (k1 + k2);
  CHECK(t.probs[0] == 0.9);
  CHECK(std::abs(t.probs[1] - expected1) < 1e-12);
  CHECK(std::abs(t.probs[2] - expected2) < 1e-12);
  CHECK(std::abs(expected1 - 0.0798804780876494) < 1e-12);
  CHECK(std::abs(expected2 - 0.0201195219123506) < 1e-12);
  const double sum = std::accumulate(t.probs.begin(), t.probs.end(), 0.0);
  CHECK(std::abs(sum - 1.0) < 1e-12);
}

TEST_CASE("spatial smoothing: equidistant tokens share mass equally") {
  const Trajectory gt = testsupport::straight(1.0);
  const Trajectory up = testsupport::line_to(1.0, 0.5);
  const Vocabulary v = vocab_of({gt, up, flip_trajectory(up)});
  const SmoothingTargets t = smoothing_targets_spatial(v, 0, 0.1, 0.01);
  CHECK(t.probs[1] == doctest::Approx(t.probs[2]).epsilon(1e-14));
}

TEST_CASE("spatial smoothing: all-equal distances reduce to uniform over non-gt") {
  std::vector<Trajectory> tokens{testsupport::straight(1.0)};
  // Four tokens at identical distance from the ground truth.
  for (const double angle : {0.5, 1.5, 2.5, 3.5}) {
    Trajectory t = testsupport::straight(1.0);
    for (Pose& p : t.points) {
      p.x += std::cos(angle);
      p.y += std::sin(angle);
    }
    tokens.push_back(std::move(t));
  }
  const Vocabulary v = vocab_of(tokens);
  const SmoothingTargets t = smoothing_targets_spatial(v, 0, 0.1, 0.01);
  for (std::size_t i = 1; i < t.probs.size(); ++i) {
    CHECK(t.probs[i] == doctest::Approx(0.1 / 4.0).epsilon(1e-12));
  }
}

TEST_CASE("spatial smoothing is monotone in distance and sums to one") {
  std::mt19937_64 rng(127);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Trajectory> tokens;
    const int size = 3 + static_cast<int>(uniform_below(rng, 40));
    for (int n = 0; n < size; ++n) {
      tokens.push_back(testsupport::random_trajectory(rng));
    }
    const Vocabulary v = vocab_of(tokens);
    const std::size_t gt = uniform_below(rng, v.size());
    const SmoothingTargets t = smoothing_targets_spatial(v, gt, 0.1, 0.01);

    CHECK(t.probs[gt] == 0.9);
    const double sum = std::accumulate(t.probs.begin(), t.probs.end(), 0.0);
    CHECK(std::abs(sum - 1.0) < 1e-12);

    for (std::size_t a = 0; a < v.size(); ++a) {
      if (a == gt) continue;
      CHECK(t.probs[a] >= 0.0);
      for (std::size_t b = 0; b < v.size(); ++b) {
        if (b == gt || a == b) continue;
        const double da =
            token_distance(v.tokens[a].trajectory, v.tokens[gt].trajectory)
                .squared_error;
        const double db =
            token_distance(v.tokens[b].trajectory, v.tokens[gt].trajectory)
                .squared_error;
        if (da < db) CHECK(t.probs[a] > t.probs[b]);
      }
    }
  }
}
