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
#include <string>

#include "trajtok/vocab.hpp"

namespace trajtok {

/// Renders every token as a polyline fanning out from the origin in the
/// agent frame (x right, y up), colored by token source, with the grid
/// bounds and axes drawn behind them.
std::string render_svg(const Vocabulary& v);

/// Throws IoError, EmptyVocabularyError.
void export_svg(const Vocabulary& v, const std::filesystem::path& path);

}  // namespace trajtok
