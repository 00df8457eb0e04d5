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

#include "trajtok/vocab_io.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "trajtok/error.hpp"
#include "io_util.hpp"

namespace trajtok {

namespace {

constexpr std::string_view kVocabMagic = "trajtok-vocab v1";
constexpr std::string_view kIdsMagic = "trajtok-ids v1";
constexpr std::string_view kProbsMagic = "trajtok-probs v1";

// Pulls "key=value" or throws.
std::string_view expect_kv(std::string_view line, std::string_view key,
                           std::size_t line_no) {
  if (!line.starts_with(key) || line.size() <= key.size() ||
      line[key.size()] != '=') {
    throw ParseError(line_no, "expected '" + std::string(key) + "=...'");
  }
  return line.substr(key.size() + 1);
}

double required_double(std::string_view field, std::size_t line_no) {
  const auto value = detail::parse_double(field);
  if (!value) {
    throw ParseError(line_no, "invalid number '" + std::string(field) + "'");
  }
  return *value;
}

long long required_int(std::string_view field, std::size_t line_no) {
  const auto value = detail::parse_int(field);
  if (!value) {
    throw ParseError(line_no, "invalid integer '" + std::string(field) + "'");
  }
  return *value;
}

// Reads the next significant (non-blank, non-comment) line.
bool next_line(std::istream& in, std::string& line, std::size_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view t = detail::trim(line);
    if (!t.empty() && t.front() != '#') {
      line.assign(t);
      return true;
    }
  }
  return false;
}

}  // namespace

void write_vocabulary(const std::filesystem::path& path, const Vocabulary& v) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  const auto real = [](double x) { return detail::format_double(x); };

  out << kVocabMagic << '\n';
  out << "agent_type=" << to_string(v.agent_type) << '\n';
  out << "tokenizer=" << v.tokenizer << '\n';
  out << "grid=" << real(v.grid.x_min) << ',' << real(v.grid.x_max) << ','
      << real(v.grid.x_interval) << ',' << real(v.grid.y_min) << ','
      << real(v.grid.y_max) << ',' << real(v.grid.y_interval) << ','
      << v.grid.height << ',' << v.grid.width << '\n';
  out << "params=window:" << v.params.window << ",filter:" << v.params.filter_threshold
      << ",expand:" << v.params.expand_threshold << ",steps:" << v.params.token_length
      << '\n';
  if (v.kdisks) {
    out << "kdisks=target:" << v.kdisks->target_size << ",radius:"
        << real(v.kdisks->radius) << ",rounds:" << v.kdisks->rounds
        << ",seed:" << v.kdisks->seed << '\n';
  }
  out << "size=" << v.tokens.size() << '\n';

  for (const TrajToken& token : v.tokens) {
    out << token.id << ',' << to_string(token.source) << ',' << token.cell.i << ','
        << token.cell.j;
    for (const Pose& p : token.trajectory.points) {
      out << ',' << real(p.x) << ',' << real(p.y) << ',' << real(p.yaw);
    }
    out << '\n';
  }
  if (!out) {
    throw IoError("failed while writing '" + path.string() + "'");
  }
}

Vocabulary read_vocabulary(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }

  Vocabulary v;
  std::string line;
  std::size_t line_no = 0;

  if (!next_line(in, line, line_no) || line != kVocabMagic) {
    throw ParseError(line_no, "expected header '" + std::string(kVocabMagic) + "'");
  }

  if (!next_line(in, line, line_no)) throw ParseError(line_no, "truncated file");
  const auto type = agent_type_from_string(expect_kv(line, "agent_type", line_no));
  if (!type) throw ParseError(line_no, "unknown agent type");
  v.agent_type = *type;

  if (!next_line(in, line, line_no)) throw ParseError(line_no, "truncated file");
  v.tokenizer = std::string(expect_kv(line, "tokenizer", line_no));
  if (v.tokenizer != kTokenizerGrid && v.tokenizer != kTokenizerKDisks) {
    throw ParseError(line_no, "unknown tokenizer '" + v.tokenizer + "'");
  }

  if (!next_line(in, line, line_no)) throw ParseError(line_no, "truncated file");
  {
    const auto fields = detail::split(expect_kv(line, "grid", line_no), ',');
    if (fields.size() != 8) throw ParseError(line_no, "grid needs 8 fields");
    v.grid.x_min = required_double(fields[0], line_no);
    v.grid.x_max = required_double(fields[1], line_no);
    v.grid.x_interval = required_double(fields[2], line_no);
    v.grid.y_min = required_double(fields[3], line_no);
    v.grid.y_max = required_double(fields[4], line_no);
    v.grid.y_interval = required_double(fields[5], line_no);
    v.grid.height = static_cast<int>(required_int(fields[6], line_no));
    v.grid.width = static_cast<int>(required_int(fields[7], line_no));
    if (v.grid.height < 1 || v.grid.width < 1) {
      throw ParseError(line_no, "grid dimensions must be positive");
    }
  }

  if (!next_line(in, line, line_no)) throw ParseError(line_no, "truncated file");
  {
    const auto fields = detail::split(expect_kv(line, "params", line_no), ',');
    if (fields.size() != 4) throw ParseError(line_no, "params needs 4 fields");
    const auto field_value = [&](std::string_view field, std::string_view key) {
      if (!field.starts_with(key) || field.size() <= key.size() ||
          field[key.size()] != ':') {
        throw ParseError(line_no, "expected '" + std::string(key) + ":<value>'");
      }
      return required_int(field.substr(key.size() + 1), line_no);
    };
    v.params.window = static_cast<int>(field_value(fields[0], "window"));
    v.params.filter_threshold = static_cast<int>(field_value(fields[1], "filter"));
    v.params.expand_threshold = static_cast<int>(field_value(fields[2], "expand"));
    v.params.token_length = static_cast<int>(field_value(fields[3], "steps"));
  }

  if (!next_line(in, line, line_no)) throw ParseError(line_no, "truncated file");
  if (line.starts_with("kdisks=")) {
    const auto fields = detail::split(expect_kv(line, "kdisks", line_no), ',');
    if (fields.size() != 4) throw ParseError(line_no, "kdisks needs 4 fields");
    KDisksInfo info;
    const auto tagged = [&](std::string_view field, std::string_view key) {
      if (!field.starts_with(key) || field.size() <= key.size() ||
          field[key.size()] != ':') {
        throw ParseError(line_no, "expected '" + std::string(key) + ":<value>'");
      }
      return field.substr(key.size() + 1);
    };
    info.target_size =
        static_cast<std::uint64_t>(required_int(tagged(fields[0], "target"), line_no));
    info.radius = required_double(tagged(fields[1], "radius"), line_no);
    info.rounds = static_cast<int>(required_int(tagged(fields[2], "rounds"), line_no));
    info.seed =
        static_cast<std::uint64_t>(required_int(tagged(fields[3], "seed"), line_no));
    v.kdisks = info;
    if (!next_line(in, line, line_no)) throw ParseError(line_no, "truncated file");
  }

  const auto size = required_int(expect_kv(line, "size", line_no), line_no);
  if (size < 0) throw ParseError(line_no, "negative vocabulary size");
  v.tokens.reserve(static_cast<std::size_t>(size));

  const auto steps = static_cast<std::size_t>(v.params.token_length);
  for (long long n = 0; n < size; ++n) {
    if (!next_line(in, line, line_no)) {
      throw ParseError(line_no, "expected " + std::to_string(size) +
                                    " token lines, got " + std::to_string(n));
    }
    const auto fields = detail::split(line, ',');
    if (fields.size() != 4 + 3 * steps) {
      throw ParseError(line_no, "token line needs " + std::to_string(4 + 3 * steps) +
                                    " fields, got " + std::to_string(fields.size()));
    }
    TrajToken token;
    token.id = static_cast<int>(required_int(fields[0], line_no));
    if (token.id != static_cast<int>(n)) {
      throw ParseError(line_no, "token ids must be dense and ascending");
    }
    const auto source = token_source_from_string(fields[1]);
    if (!source) {
      throw ParseError(line_no, "unknown token source '" + std::string(fields[1]) + "'");
    }
    token.source = *source;
    token.cell.i = static_cast<int>(required_int(fields[2], line_no));
    token.cell.j = static_cast<int>(required_int(fields[3], line_no));
    token.trajectory.agent_type = v.agent_type;
    token.trajectory.points.reserve(steps);
    for (std::size_t l = 0; l < steps; ++l) {
      token.trajectory.points.push_back(Pose{
          required_double(fields[4 + 3 * l], line_no),
          required_double(fields[5 + 3 * l], line_no),
          required_double(fields[6 + 3 * l], line_no),
      });
    }
    v.tokens.push_back(std::move(token));
  }
  return v;
}

void write_ids(const std::filesystem::path& path, std::span<const int> ids) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << kIdsMagic << '\n';
  for (const int id : ids) {
    out << id << '\n';
  }
  if (!out) {
    throw IoError("failed while writing '" + path.string() + "'");
  }
}

std::vector<int> read_ids(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no) || line != kIdsMagic) {
    throw ParseError(line_no, "expected header '" + std::string(kIdsMagic) + "'");
  }
  std::vector<int> ids;
  while (next_line(in, line, line_no)) {
    ids.push_back(static_cast<int>(required_int(line, line_no)));
  }
  return ids;
}

void write_probs(const std::filesystem::path& path,
                 std::span<const std::vector<double>> rows) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open '" + path.string() + "' for writing");
  }
  out << kProbsMagic << '\n';
  for (const std::vector<double>& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ' ';
      out << detail::format_double(row[i]);
    }
    out << '\n';
  }
  if (!out) {
    throw IoError("failed while writing '" + path.string() + "'");
  }
}

std::vector<std::vector<double>> read_probs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open '" + path.string() + "' for reading");
  }
  std::string line;
  std::size_t line_no = 0;
  if (!next_line(in, line, line_no) || line != kProbsMagic) {
    throw ParseError(line_no, "expected header '" + std::string(kProbsMagic) + "'");
  }
  std::vector<std::vector<double>> rows;
  while (next_line(in, line, line_no)) {
    std::vector<double> row;
    for (const std::string_view field : detail::split(line, ' ')) {
      if (field.empty()) continue;
      row.push_back(required_double(field, line_no));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace trajtok
