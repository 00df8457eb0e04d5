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

#include "trajtok/svg.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "trajtok/error.hpp"
#include "io_util.hpp"

namespace trajtok {

namespace {

const char* stroke_for(TokenSource source) {
  switch (source) {
    case TokenSource::Mean:
      return "#1f77b4";
    case TokenSource::Interpolated:
      return "#ff7f0e";
    case TokenSource::Sampled:
      return "#2ca02c";
  }
  return "#1f77b4";
}

std::string coord(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

}  // namespace

std::string render_svg(const Vocabulary& v) {
  if (v.tokens.empty()) {
    throw EmptyVocabularyError("nothing to render");
  }
  const GridSpec& g = v.grid;

  // Token fans can spill past the grid when endpoints were out of range
  // (k-disks); pad the viewport to whatever is actually drawn.
  double x_lo = std::min(g.x_min, 0.0);
  double x_hi = std::max(g.x_max, 0.0);
  double y_lo = std::min(g.y_min, 0.0);
  double y_hi = std::max(g.y_max, 0.0);
  for (const TrajToken& token : v.tokens) {
    for (const Pose& p : token.trajectory.points) {
      x_lo = std::min(x_lo, p.x);
      x_hi = std::max(x_hi, p.x);
      y_lo = std::min(y_lo, p.y);
      y_hi = std::max(y_hi, p.y);
    }
  }
  const double margin = 0.05 * std::max(x_hi - x_lo, y_hi - y_lo);
  x_lo -= margin;
  x_hi += margin;
  y_lo -= margin;
  y_hi += margin;

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  // User units are meters; the group flips y so +y points up.
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << coord(x_lo) << ' '
     << coord(-y_hi) << ' ' << coord(x_hi - x_lo) << ' ' << coord(y_hi - y_lo)
     << "\" width=\"900\" height=\""
     << coord(900.0 * (y_hi - y_lo) / (x_hi - x_lo)) << "\">\n";
  os << "  <g transform=\"scale(1,-1)\">\n";

  const double hairline = 0.01 * std::max(x_hi - x_lo, y_hi - y_lo);
  os << "    <rect x=\"" << coord(g.x_min) << "\" y=\"" << coord(g.y_min)
     << "\" width=\"" << coord(g.x_max - g.x_min) << "\" height=\""
     << coord(g.y_max - g.y_min)
     << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"" << coord(hairline)
     << "\"/>\n";
  os << "    <line x1=\"" << coord(x_lo) << "\" y1=\"0\" x2=\"" << coord(x_hi)
     << "\" y2=\"0\" stroke=\"#dddddd\" stroke-width=\"" << coord(hairline)
     << "\"/>\n";
  os << "    <line x1=\"0\" y1=\"" << coord(y_lo) << "\" x2=\"0\" y2=\""
     << coord(y_hi) << "\" stroke=\"#dddddd\" stroke-width=\"" << coord(hairline)
     << "\"/>\n";

  const double stroke = 0.3 * std::min(g.x_interval, g.y_interval);
  for (const TrajToken& token : v.tokens) {
    os << "    <polyline points=\"0,0";
    for (const Pose& p : token.trajectory.points) {
      os << ' ' << detail::format_double(p.x) << ',' << detail::format_double(p.y);
    }
    os << "\" fill=\"none\" stroke=\"" << stroke_for(token.source)
       << "\" stroke-width=\"" << coord(stroke) << "\" stroke-opacity=\"0.6\"/>\n";
  }

  os << "  </g>\n";
  os << "</svg>\n";
  return os.str();
}

void export_svg(const Vocabulary& v, const std::filesystem::path& path) {
  const std::string body = render_svg(v);
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << body;
  if (!out) {
    throw IoError("failed while writing '" + path.string() + "'");
  }
}

}  // namespace trajtok
