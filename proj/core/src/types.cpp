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

#include "trajtok/types.hpp"

#include <algorithm>

namespace trajtok {

std::string to_string(AgentType type) {
  switch (type) {
    case AgentType::Vehicle:
      return "vehicle";
    case AgentType::Pedestrian:
      return "pedestrian";
    case AgentType::Cyclist:
      return "cyclist";
  }
  return "vehicle";
}

std::optional<AgentType> agent_type_from_string(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "vehicle") return AgentType::Vehicle;
  if (lower == "pedestrian") return AgentType::Pedestrian;
  if (lower == "cyclist" || lower == "bicycle") return AgentType::Cyclist;
  return std::nullopt;
}

bool is_finite(const Trajectory& t) {
  for (const Pose& p : t.points) {
    if (!is_finite(p)) return false;
  }
  return true;
}

}  // namespace trajtok
