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

// End-to-end tests against the installed binary; TRAJTOK_CLI is injected
// by the build system.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>

#include "trajtok/codec.hpp"
#include "trajtok/vocab_io.hpp"
#include "test_support.hpp"

namespace fs = std::filesystem;

namespace {

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path p = fs::temp_directory_path() /
                 ("trajtok-cli-" + std::to_string(::getpid()));
    fs::create_directories(p);
    return p;
  }();
  return dir;
}

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const fs::path out_file = work_dir() / "last-stdout.txt";
  const std::string command = std::string(TRAJTOK_CLI) + " " + args + " > " +
                              out_file.string() + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  std::ifstream in(out_file);
  std::ostringstream os;
  os << in.rdbuf();
  result.out = os.str();
  return result;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string q(const fs::path& p) { return p.string(); }

}  // namespace

TEST_CASE("cli: gen is deterministic and build reports the stock grid") {
  const fs::path data = work_dir() / "data.txt";
  const RunResult gen =
      run("gen --n 400 --agent-type vehicle --seed 21 --out " + q(data));
  REQUIRE(gen.exit_code == 0);

  const fs::path data2 = work_dir() / "data2.txt";
  run("gen --n 400 --agent-type vehicle --seed 21 --out " + q(data2));
  CHECK(slurp(data) == slurp(data2));

  const fs::path vocab = work_dir() / "vocab.txt";
  const RunResult build = run("build --tokenizer trajtok --agent-type vehicle --data " +
                              q(data) + " --out " + q(vocab));
  REQUIRE(build.exit_code == 0);
  CHECK(build.out.find("H=120") != std::string::npos);
  CHECK(build.out.find("W=250") != std::string::npos);
  CHECK(fs::exists(vocab));
}

TEST_CASE("cli: encode -> decode -> encode is the identity on ids") {
  const fs::path data = work_dir() / "data.txt";
  const fs::path vocab = work_dir() / "vocab.txt";
  REQUIRE(fs::exists(vocab));  // produced by the previous case

  const fs::path ids = work_dir() / "ids.txt";
  REQUIRE(run("encode --vocab " + q(vocab) + " --data " + q(data) + " --out " +
              q(ids)).exit_code == 0);

  const fs::path decoded = work_dir() / "decoded.txt";
  REQUIRE(run("decode --vocab " + q(vocab) + " --ids " + q(ids) +
              " --anchor-data " + q(data) + " --out " + q(decoded)).exit_code == 0);

  const fs::path ids2 = work_dir() / "ids2.txt";
  REQUIRE(run("encode --vocab " + q(vocab) + " --data " + q(decoded) + " --out " +
              q(ids2)).exit_code == 0);

  CHECK(trajtok::read_ids(ids) == trajtok::read_ids(ids2));
}

TEST_CASE("cli: smooth emits the closed-form uniform vector") {
  // Four straight tokens of different reach.
  trajtok::Vocabulary v;
  v.agent_type = trajtok::AgentType::Vehicle;
  v.grid = trajtok::make_grid_spec(-5, 20, 0.1, -1.5, 4.5, 0.05);
  for (int n = 0; n < 4; ++n) {
    trajtok::TrajToken token;
    token.id = n;
    token.trajectory = testsupport::straight(1.0 + n);
    token.cell = trajtok::bin_endpoint(v.grid, token.trajectory.endpoint())
                     .value_or(trajtok::CellIndex{-1, -1});
    v.tokens.push_back(std::move(token));
  }
  const fs::path vocab4 = work_dir() / "vocab4.txt";
  trajtok::write_vocabulary(vocab4, v);

  const fs::path gt = work_dir() / "gt.txt";
  trajtok::write_ids(gt, std::vector<int>{2});

  const fs::path probs = work_dir() / "probs.txt";
  const RunResult smooth =
      run("smooth --vocab " + q(vocab4) + " --gt-ids " + q(gt) +
          " --mode uniform --eps 0.1 --out " + q(probs));
  REQUIRE(smooth.exit_code == 0);

  const auto rows = trajtok::read_probs(probs);
  REQUIRE(rows.size() == 1);
  REQUIRE(rows[0].size() == 4);
  CHECK(rows[0][0] == 0.025);
  CHECK(rows[0][1] == 0.025);
  CHECK(rows[0][2] == 0.9);
  CHECK(rows[0][3] == 0.025);

  const fs::path sprobs = work_dir() / "sprobs.txt";
  REQUIRE(run("smooth --vocab " + q(vocab4) + " --gt-ids " + q(gt) +
              " --mode spatial --eps 0.1 --eps1 0.01 --out " + q(sprobs))
              .exit_code == 0);
  const auto srows = trajtok::read_probs(sprobs);
  REQUIRE(srows.size() == 1);
  double sum = 0.0;
  for (const double p : srows[0]) sum += p;
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cli: eval writes text and json reports") {
  const fs::path data = work_dir() / "data.txt";
  const fs::path vocab = work_dir() / "vocab.txt";
  const fs::path report = work_dir() / "report.txt";
  const fs::path json = work_dir() / "report.json";

  const RunResult eval = run("eval --vocab " + q(vocab) + " --data " + q(data) +
                             " --report " + q(report) + " --json " + q(json));
  REQUIRE(eval.exit_code == 0);
  const std::string text = slurp(report);
  CHECK(text.find("trajtok-report v1") != std::string::npos);
  CHECK(text.find("vocab_size=") != std::string::npos);
  CHECK(text.find("utilization=") != std::string::npos);
  CHECK(slurp(json).find("\"vocab_size\"") != std::string::npos);
}

TEST_CASE("cli: compare runs two vocabularies over one dataset") {
  const fs::path data = work_dir() / "data.txt";
  const fs::path vocab = work_dir() / "vocab.txt";
  const fs::path kvocab = work_dir() / "kvocab.txt";
  REQUIRE(run("build --tokenizer kdisks --agent-type vehicle --seed 3 --data " +
              q(data) + " --out " + q(kvocab)).exit_code == 0);

  const RunResult compare = run("compare --vocab-a " + q(vocab) + " --vocab-b " +
                                q(kvocab) + " --data " + q(data));
  REQUIRE(compare.exit_code == 0);
  CHECK(compare.out.find("# delta (B - A)") != std::string::npos);
}

TEST_CASE("cli: viz renders an svg") {
  const fs::path vocab = work_dir() / "vocab.txt";
  const fs::path svg = work_dir() / "vocab.svg";
  REQUIRE(run("viz --vocab " + q(vocab) + " --out " + q(svg)).exit_code == 0);
  const std::string body = slurp(svg);
  CHECK(body.find("<svg") != std::string::npos);
  CHECK(body.find("<polyline") != std::string::npos);
}

TEST_CASE("cli: exit codes distinguish usage and data errors") {
  CHECK(run("bogus-subcommand").exit_code == 1);
  CHECK(run("encode --vocab nope.txt --data nope.txt --out x.txt").exit_code == 2);
  CHECK(run("--help").exit_code == 0);

  // Malformed data in strict mode is a data error with a line number.
  const fs::path bad = work_dir() / "bad.txt";
  {
    std::ofstream out(bad);
    out << "trajtok-dataset v1 steps=5\n";
    out << "vehicle,0,zzz\n";
  }
  const fs::path vocab = work_dir() / "vocab.txt";
  const RunResult strict =
      run("encode --vocab " + q(vocab) + " --data " + q(bad) + " --out x.txt");
  CHECK(strict.exit_code == 2);
  CHECK(strict.out.find("line 2") != std::string::npos);
}
