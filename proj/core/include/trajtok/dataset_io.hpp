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
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "trajtok/types.hpp"

namespace trajtok {

// Dataset file format (line-delimited text):
//   # comments and blank lines are ignored
//   trajtok-dataset v1 steps=<L>
//   <agent_type>,<id>,<x0>,<y0>,<yaw0>,...,<xL>,<yL>,<yawL>
// Each record carries L+1 global poses, anchor first. Reals are written
// with 17 significant digits so doubles round-trip exactly.

/// One raw record: global poses, anchor first.
struct DatasetRecord {
  AgentType agent_type = AgentType::Vehicle;
  std::uint64_t id = 0;
  std::vector<Pose> global_poses;
};

/// Writes the header and one line per record.
///
/// Throws IoError, LengthMismatchError (record length != steps + 1).
void write_dataset(const std::filesystem::path& path,
                   std::span<const DatasetRecord> records, int steps);

struct RawDataset {
  std::vector<DatasetRecord> records;
  int steps = 0;
  std::uint64_t skipped = 0;  // malformed lines in lenient mode
};

/// Reads records without normalizing. Strict mode throws on the first
/// malformed line; lenient mode skips it and records a diagnostic.
///
/// Throws IoError, ParseError.
RawDataset read_dataset_records(const std::filesystem::path& path,
                                bool strict = true,
                                std::vector<std::string>* diagnostics = nullptr);

struct DatasetReadResult {
  NormalizedDataset dataset;
  int steps = 0;
  std::vector<std::string> diagnostics;  // lenient-mode skip reasons
};

/// Reads and normalizes every record to the agent-centric frame of its
/// anchor pose. In lenient mode malformed or non-finite records are
/// skipped and counted in dataset.drop_count.
///
/// Throws IoError, ParseError.
DatasetReadResult read_dataset(const std::filesystem::path& path,
                               bool strict = true);

struct SyntheticParams {
  std::size_t count = 1000;          // kinematic records
  AgentType agent_type = AgentType::Vehicle;
  std::uint64_t seed = 0;
  double noise_fraction = 0.0;       // extra far-field records, as a fraction of count
  int steps = 5;                     // poses per record beyond the anchor
};

/// Deterministic synthetic data: kinematic-bicycle rollouts at 0.1 s per
/// step with speed, acceleration, and steering drawn from ranges suited
/// to the agent type, anchored at random global poses. noise_fraction
/// adds round(noise_fraction * count) records driving straight to a
/// uniformly random far-field endpoint. Identical params give
/// byte-identical files.
std::vector<DatasetRecord> gen_synthetic(const SyntheticParams& params);

}  // namespace trajtok
