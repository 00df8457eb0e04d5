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

#include "trajtok/dataset_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "trajtok/error.hpp"
#include "trajtok/frame.hpp"
#include "trajtok/random.hpp"
#include "io_util.hpp"

namespace trajtok {

namespace {

constexpr std::string_view kDatasetMagic = "trajtok-dataset";
constexpr std::string_view kDatasetVersion = "v1";
constexpr double kStepSeconds = 0.1;

std::string header_line(int steps) {
  std::ostringstream os;
  os << kDatasetMagic << ' ' << kDatasetVersion << " steps=" << steps;
  return os.str();
}

int parse_header(std::string_view line, std::size_t line_no) {
  const auto fields = detail::split(line, ' ');
  if (fields.size() != 3 || fields[0] != kDatasetMagic ||
      fields[1] != kDatasetVersion || !fields[2].starts_with("steps=")) {
    throw ParseError(line_no, "expected dataset header '" +
                                  std::string(kDatasetMagic) + " " +
                                  std::string(kDatasetVersion) + " steps=<n>'");
  }
  const auto steps = detail::parse_int(fields[2].substr(6));
  if (!steps || *steps < 1) {
    throw ParseError(line_no, "invalid steps value in dataset header");
  }
  return static_cast<int>(*steps);
}

DatasetRecord parse_record(std::string_view line, int steps, std::size_t line_no) {
  const auto fields = detail::split(line, ',');
  const std::size_t expected = 2 + 3 * static_cast<std::size_t>(steps + 1);
  if (fields.size() != expected) {
    throw ParseError(line_no, "expected " + std::to_string(expected) +
                                  " fields, got " + std::to_string(fields.size()));
  }

  DatasetRecord record;
  const auto type = agent_type_from_string(detail::trim(fields[0]));
  if (!type) {
    throw ParseError(line_no, "unknown agent type '" + std::string(fields[0]) + "'");
  }
  record.agent_type = *type;

  const auto id = detail::parse_int(detail::trim(fields[1]));
  if (!id || *id < 0) {
    throw ParseError(line_no, "invalid record id '" + std::string(fields[1]) + "'");
  }
  record.id = static_cast<std::uint64_t>(*id);

  record.global_poses.reserve(static_cast<std::size_t>(steps) + 1);
  for (int k = 0; k <= steps; ++k) {
    const std::size_t base = 2 + 3 * static_cast<std::size_t>(k);
    Pose p;
    double* coords[3] = {&p.x, &p.y, &p.yaw};
    for (int c = 0; c < 3; ++c) {
      const auto value = detail::parse_double(detail::trim(fields[base + c]));
      if (!value) {
        throw ParseError(line_no,
                         "invalid number '" + std::string(fields[base + c]) + "'");
      }
      *coords[c] = *value;
    }
    record.global_poses.push_back(p);
  }
  return record;
}

}  // namespace

void write_dataset(const std::filesystem::path& path,
                   std::span<const DatasetRecord> records, int steps) {
  for (const DatasetRecord& r : records) {
    if (r.global_poses.size() != static_cast<std::size_t>(steps) + 1) {
      throw LengthMismatchError("record " + std::to_string(r.id) + " has " +
                                std::to_string(r.global_poses.size()) +
                                " poses, expected " + std::to_string(steps + 1));
    }
  }

  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << header_line(steps) << '\n';
  for (const DatasetRecord& r : records) {
    out << to_string(r.agent_type) << ',' << r.id;
    for (const Pose& p : r.global_poses) {
      out << ',' << detail::format_double(p.x) << ',' << detail::format_double(p.y)
          << ',' << detail::format_double(p.yaw);
    }
    out << '\n';
  }
  if (!out) {
    throw IoError("failed while writing '" + path.string() + "'");
  }
}

RawDataset read_dataset_records(const std::filesystem::path& path, bool strict,
                                std::vector<std::string>* diagnostics) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }

  RawDataset out;
  bool have_header = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view trimmed = detail::trim(line);
    if (trimmed.empty() || trimmed.front() == '#') continue;
    if (!have_header) {
      out.steps = parse_header(trimmed, line_no);
      have_header = true;
      continue;
    }
    try {
      out.records.push_back(parse_record(trimmed, out.steps, line_no));
    } catch (const ParseError& e) {
      if (strict) throw;
      if (diagnostics) diagnostics->push_back(e.what());
      ++out.skipped;
    }
  }
  return out;
}

DatasetReadResult read_dataset(const std::filesystem::path& path, bool strict) {
  DatasetReadResult result;
  RawDataset raw = read_dataset_records(path, strict, &result.diagnostics);
  result.steps = raw.steps;
  result.dataset.flip_applied = false;
  result.dataset.drop_count = raw.skipped;
  result.dataset.trajectories.reserve(raw.records.size());

  for (const DatasetRecord& record : raw.records) {
    try {
      result.dataset.trajectories.push_back(normalize_to_agent_frame(
          record.global_poses, record.agent_type,
          static_cast<std::size_t>(raw.steps)));
    } catch (const Error& e) {
      if (strict) {
        throw ParseError(0, "record " + std::to_string(record.id) + ": " + e.what());
      }
      result.diagnostics.push_back("record " + std::to_string(record.id) + ": " +
                                   e.what());
      ++result.dataset.drop_count;
    }
  }
  return result;
}

namespace {

struct MotionRanges {
  double wheelbase;
  double speed_min, speed_max;
  double accel_min, accel_max;
  double steer_max;
  double reverse_fraction;  // probability of starting with reverse speed
  double reverse_speed_max;
};

MotionRanges ranges_for(AgentType type) {
  switch (type) {
    case AgentType::Vehicle:
      return {2.8, 0.0, 18.0, -4.0, 3.0, 0.45, 0.05, 2.0};
    case AgentType::Cyclist:
      return {1.2, 0.0, 7.0, -2.0, 1.5, 0.35, 0.0, 0.0};
    case AgentType::Pedestrian:
      return {0.6, 0.0, 2.2, -0.8, 0.8, 0.9, 0.02, 0.8};
  }
  return {2.8, 0.0, 18.0, -4.0, 3.0, 0.45, 0.05, 2.0};
}

std::vector<Pose> rollout_bicycle(std::mt19937_64& rng, const MotionRanges& mr,
                                  int steps) {
  Pose pose{uniform_double(rng, -1000.0, 1000.0),
            uniform_double(rng, -1000.0, 1000.0),
            wrap_angle(uniform_double(rng, -kPi, kPi))};
  double speed = uniform_double(rng, mr.speed_min, mr.speed_max);
  if (mr.reverse_fraction > 0.0 && uniform_unit(rng) < mr.reverse_fraction) {
    speed = -uniform_double(rng, 0.0, mr.reverse_speed_max);
  }
  const double accel = uniform_double(rng, mr.accel_min, mr.accel_max);
  const double steer = uniform_double(rng, -mr.steer_max, mr.steer_max);

  std::vector<Pose> poses;
  poses.reserve(static_cast<std::size_t>(steps) + 1);
  poses.push_back(pose);
  for (int s = 0; s < steps; ++s) {
    speed += accel * kStepSeconds;
    if (speed < 0.0 && accel > mr.accel_min) speed = 0.0;  // braking stops, no flip to reverse
    pose.yaw = wrap_angle(pose.yaw +
                          speed * std::tan(steer) / mr.wheelbase * kStepSeconds);
    pose.x += speed * std::cos(pose.yaw) * kStepSeconds;
    pose.y += speed * std::sin(pose.yaw) * kStepSeconds;
    poses.push_back(pose);
  }
  return poses;
}

std::vector<Pose> rollout_far_field(std::mt19937_64& rng, int steps) {
  const Pose anchor{uniform_double(rng, -1000.0, 1000.0),
                    uniform_double(rng, -1000.0, 1000.0),
                    wrap_angle(uniform_double(rng, -kPi, kPi))};
  // Straight drive to a uniformly random endpoint well beyond kinematic
  // reach, expressed in the anchor frame.
  const double ex = uniform_double(rng, -40.0, 40.0);
  const double ey = uniform_double(rng, -40.0, 40.0);
  const double heading = std::atan2(ey, ex);

  Trajectory agent_frame;
  for (int s = 1; s <= steps; ++s) {
    const double f = static_cast<double>(s) / static_cast<double>(steps);
    agent_frame.points.push_back(Pose{ex * f, ey * f, wrap_angle(heading)});
  }
  std::vector<Pose> poses = apply_token_global(AgentState{anchor}, agent_frame);
  poses.insert(poses.begin(), anchor);
  return poses;
}

}  // namespace

std::vector<DatasetRecord> gen_synthetic(const SyntheticParams& params) {
  const MotionRanges mr = ranges_for(params.agent_type);
  std::mt19937_64 rng(mix_seed(params.seed, 0));

  const auto noise_count = static_cast<std::size_t>(
      std::llround(params.noise_fraction * static_cast<double>(params.count)));

  std::vector<DatasetRecord> records;
  records.reserve(params.count + noise_count);
  for (std::size_t n = 0; n < params.count; ++n) {
    DatasetRecord r;
    r.agent_type = params.agent_type;
    r.id = n;
    r.global_poses = rollout_bicycle(rng, mr, params.steps);
    records.push_back(std::move(r));
  }
  for (std::size_t n = 0; n < noise_count; ++n) {
    DatasetRecord r;
    r.agent_type = params.agent_type;
    r.id = params.count + n;
    r.global_poses = rollout_far_field(rng, params.steps);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace trajtok
