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

#include <filesystem>
#include <span>
#include <vector>

#include "trajtok/vocab.hpp"

namespace trajtok {

// Vocabulary file format:
//   trajtok-vocab v1
//   agent_type=<vehicle|pedestrian|cyclist>
//   tokenizer=<trajtok|kdisks-approx>
//   grid=<x_min>,<x_max>,<x_interval>,<y_min>,<y_max>,<y_interval>,<H>,<W>
//   params=window:<k>,filter:<t>,expand:<t>,steps:<L>
//   [kdisks=target:<n>,radius:<r>,rounds:<n>,seed:<s>]
//   size=<|V|>
//   <id>,<mean|interp|sampled>,<i>,<j>,<x1>,<y1>,<yaw1>,...
// Reals use 17 significant digits; read(write(v)) reproduces v bit-exactly.

/// Throws IoError.
void write_vocabulary(const std::filesystem::path& path, const Vocabulary& v);

/// Throws IoError, ParseError.
Vocabulary read_vocabulary(const std::filesystem::path& path);

// Token-id files: "trajtok-ids v1" header, then one id per line.
void write_ids(const std::filesystem::path& path, std::span<const int> ids);
std::vector<int> read_ids(const std::filesystem::path& path);

// Probability files: "trajtok-probs v1" header, then one
// space-separated probability row per line, 17 significant digits.
void write_probs(const std::filesystem::path& path,
                 std::span<const std::vector<double>> rows);
std::vector<std::vector<double>> read_probs(const std::filesystem::path& path);

}  // namespace trajtok
