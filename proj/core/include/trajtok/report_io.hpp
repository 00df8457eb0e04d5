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

#include "trajtok/metrics.hpp"

namespace trajtok {

/// Line-oriented key=value block ("trajtok-report v1" header line first).
std::string report_to_text(const EvalReport& report);

/// The same report as a JSON object string.
std::string report_to_json(const EvalReport& report);

/// Throws IoError.
void write_report(const std::filesystem::path& path, const EvalReport& report);
void write_report_json(const std::filesystem::path& path,
                       const EvalReport& report);

}  // namespace trajtok
