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

#include "trajtok/report_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "trajtok/error.hpp"
#include "io_util.hpp"

namespace trajtok {

std::string report_to_text(const EvalReport& report) {
  std::ostringstream os;
  os << "trajtok-report v1\n";
  os << "vocab_size=" << report.vocab_size << '\n';
  os << "mean_endpoint_error=" << detail::format_double(report.mean_endpoint_error)
     << '\n';
  os << "max_endpoint_error=" << detail::format_double(report.max_endpoint_error)
     << '\n';
  for (const auto& [delta, fraction] : report.coverage) {
    os << "coverage@" << detail::format_double(delta) << '='
       << detail::format_double(fraction) << '\n';
  }
  os << "symmetry=" << detail::format_double(report.symmetry) << '\n';
  os << "utilization=" << detail::format_double(report.utilization) << '\n';
  if (report.robustness_delta) {
    os << "robustness_delta=" << *report.robustness_delta << '\n';
  }
  return os.str();
}

std::string report_to_json(const EvalReport& report) {
  nlohmann::json j;
  j["format"] = "trajtok-report";
  j["version"] = 1;
  j["vocab_size"] = report.vocab_size;
  j["mean_endpoint_error"] = report.mean_endpoint_error;
  j["max_endpoint_error"] = report.max_endpoint_error;
  nlohmann::json coverage = nlohmann::json::array();
  for (const auto& [delta, fraction] : report.coverage) {
    coverage.push_back({{"delta", delta}, {"fraction", fraction}});
  }
  j["coverage"] = std::move(coverage);
  j["symmetry"] = report.symmetry;
  j["utilization"] = report.utilization;
  if (report.robustness_delta) {
    j["robustness_delta"] = *report.robustness_delta;
  }
  return j.dump(2) + "\n";
}

namespace {

void write_text_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << body;
  if (!out) {
    throw IoError("failed while writing '" + path.string() + "'");
  }
}

}  // namespace

void write_report(const std::filesystem::path& path, const EvalReport& report) {
  write_text_file(path, report_to_text(report));
}

void write_report_json(const std::filesystem::path& path,
                       const EvalReport& report) {
  write_text_file(path, report_to_json(report));
}

}  // namespace trajtok
