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

// Command-line batch tool over the core library. Exit codes: 0 success,
// 1 usage error, 2 data/file error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trajtok/codec.hpp"
#include "trajtok/dataset_io.hpp"
#include "trajtok/error.hpp"
#include "trajtok/frame.hpp"
#include "trajtok/kdisks.hpp"
#include "trajtok/metrics.hpp"
#include "trajtok/report_io.hpp"
#include "trajtok/svg.hpp"
#include "trajtok/vocab.hpp"
#include "trajtok/vocab_io.hpp"

namespace {

using trajtok::AgentType;
using trajtok::NormalizedDataset;
using trajtok::Vocabulary;

struct AgentConfig {
  double x_min, x_max, x_interval;
  double y_min, y_max, y_interval;
  trajtok::BuildParams params;
};

struct KDisksConfig {
  std::uint64_t target_size = 1024;
  double radius = 0.25;
  int rounds = 8;
};

struct Config {
  AgentConfig agents[3];  // indexed by AgentType
  KDisksConfig kdisks;
};

AgentConfig default_agent_config(AgentType type) {
  const trajtok::GridSpec g = trajtok::default_grid(type);
  return AgentConfig{g.x_min, g.x_max, g.x_interval,
                     g.y_min, g.y_max, g.y_interval,
                     trajtok::BuildParams{}};
}

Config default_config() {
  Config c;
  c.agents[static_cast<int>(AgentType::Vehicle)] =
      default_agent_config(AgentType::Vehicle);
  c.agents[static_cast<int>(AgentType::Pedestrian)] =
      default_agent_config(AgentType::Pedestrian);
  c.agents[static_cast<int>(AgentType::Cyclist)] =
      default_agent_config(AgentType::Cyclist);
  return c;
}

void apply_json_overrides(AgentConfig& cfg, const nlohmann::json& j) {
  const auto set_double = [&](const char* key, double& value) {
    if (j.contains(key)) value = j.at(key).get<double>();
  };
  const auto set_int = [&](const char* key, int& value) {
    if (j.contains(key)) value = j.at(key).get<int>();
  };
  set_double("x_min", cfg.x_min);
  set_double("x_max", cfg.x_max);
  set_double("x_interval", cfg.x_interval);
  set_double("y_min", cfg.y_min);
  set_double("y_max", cfg.y_max);
  set_double("y_interval", cfg.y_interval);
  set_int("window", cfg.params.window);
  set_int("filter_threshold", cfg.params.filter_threshold);
  set_int("expand_threshold", cfg.params.expand_threshold);
  set_int("token_length", cfg.params.token_length);
}

Config load_config(const std::string& path) {
  Config cfg = default_config();
  if (path.empty()) return cfg;

  std::ifstream in(path);
  if (!in) {
    throw trajtok::IoError("cannot open config '" + path + "'");
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw trajtok::ParseError(0, "config '" + path + "': " + e.what());
  }
  for (const char* name : {"vehicle", "pedestrian", "cyclist"}) {
    if (!j.contains(name)) continue;
    const AgentType type = *trajtok::agent_type_from_string(name);
    apply_json_overrides(cfg.agents[static_cast<int>(type)], j.at(name));
  }
  if (j.contains("kdisks")) {
    const auto& k = j.at("kdisks");
    if (k.contains("target_size")) cfg.kdisks.target_size = k.at("target_size").get<std::uint64_t>();
    if (k.contains("radius")) cfg.kdisks.radius = k.at("radius").get<double>();
    if (k.contains("rounds")) cfg.kdisks.rounds = k.at("rounds").get<int>();
  }
  return cfg;
}

AgentType parse_agent_type(const std::string& name) {
  const auto type = trajtok::agent_type_from_string(name);
  if (!type) {
    throw CLI::ValidationError("--agent-type",
                               "expected vehicle, pedestrian, or cyclist");
  }
  return *type;
}

NormalizedDataset load_normalized(const std::string& path, bool lenient,
                                  int expected_steps) {
  trajtok::DatasetReadResult result = trajtok::read_dataset(path, !lenient);
  for (const std::string& d : result.diagnostics) {
    std::cerr << "warning: " << path << ": " << d << '\n';
  }
  if (expected_steps > 0 && result.steps != expected_steps) {
    throw trajtok::Error("dataset steps=" + std::to_string(result.steps) +
                         " does not match expected token length " +
                         std::to_string(expected_steps));
  }
  return std::move(result.dataset);
}

int run_build(const std::string& tokenizer, const std::string& agent_name,
              const std::string& config_path, const std::string& data_path,
              const std::string& out_path, std::uint64_t seed, bool lenient,
              bool no_flip) {
  const AgentType type = parse_agent_type(agent_name);
  const Config cfg = load_config(config_path);
  const AgentConfig& agent = cfg.agents[static_cast<int>(type)];
  const trajtok::GridSpec grid =
      trajtok::make_grid_spec(agent.x_min, agent.x_max, agent.x_interval,
                              agent.y_min, agent.y_max, agent.y_interval);

  NormalizedDataset data =
      load_normalized(data_path, lenient, agent.params.token_length);
  std::cout << "tokenizer: " << tokenizer << '\n';
  std::cout << "agent type: " << to_string(type) << '\n';
  std::cout << "grid: H=" << grid.height << " W=" << grid.width << " ("
            << grid.cell_count() << " cells)\n";
  std::cout << "input trajectories: " << data.size() << " (" << data.drop_count
            << " dropped while parsing)\n";

  Vocabulary vocab;
  if (tokenizer == trajtok::kTokenizerGrid) {
    if (!no_flip) {
      data = trajtok::flip_augment(data);
      std::cout << "flip augmented: " << data.size() << " trajectories\n";
    }
    trajtok::BuildResult result =
        trajtok::build_vocabulary(data, grid, agent.params);
    for (const std::string& w : result.report.warnings) {
      std::cerr << "warning: " << w << '\n';
    }
    std::cout << "cells: kept=" << result.report.cells_data_kept
              << " filtered=" << result.report.cells_data_filtered
              << " expanded=" << result.report.cells_expanded
              << " empty=" << result.report.cells_empty << '\n';
    std::cout << "out-of-range endpoints: " << result.report.trajectories_dropped
              << '\n';
    vocab = std::move(result.vocabulary);
  } else if (tokenizer == "kdisks" || tokenizer == trajtok::kTokenizerKDisks) {
    trajtok::KDisksParams params;
    params.target_size = cfg.kdisks.target_size;
    params.radius = cfg.kdisks.radius;
    params.rounds = cfg.kdisks.rounds;
    params.seed = seed;
    vocab = trajtok::build_kdisks_vocab(data, grid, params);
  } else {
    throw CLI::ValidationError("--tokenizer", "expected trajtok or kdisks");
  }

  std::cout << "vocabulary size: " << vocab.size() << '\n';
  trajtok::write_vocabulary(out_path, vocab);
  std::cout << "wrote " << out_path << '\n';
  return 0;
}

int run_encode(const std::string& vocab_path, const std::string& data_path,
               const std::string& out_path, bool lenient) {
  const Vocabulary vocab = trajtok::read_vocabulary(vocab_path);
  const NormalizedDataset data =
      load_normalized(data_path, lenient, vocab.params.token_length);
  const std::vector<int> ids = trajtok::encode_batch(vocab, data.trajectories);
  trajtok::write_ids(out_path, ids);
  std::cout << "encoded " << ids.size() << " trajectories -> " << out_path << '\n';
  return 0;
}

int run_decode(const std::string& vocab_path, const std::string& ids_path,
               const std::string& anchor_path, const std::string& out_path) {
  const Vocabulary vocab = trajtok::read_vocabulary(vocab_path);
  const std::vector<int> ids = trajtok::read_ids(ids_path);

  std::vector<trajtok::AgentState> anchors;
  if (!anchor_path.empty()) {
    const trajtok::RawDataset raw = trajtok::read_dataset_records(anchor_path);
    if (raw.records.size() != ids.size()) {
      throw trajtok::Error("anchor data has " + std::to_string(raw.records.size()) +
                           " records but there are " + std::to_string(ids.size()) +
                           " ids");
    }
    anchors.reserve(raw.records.size());
    for (const trajtok::DatasetRecord& r : raw.records) {
      anchors.push_back(trajtok::AgentState{r.global_poses.front(), r.agent_type});
    }
  } else {
    anchors.assign(ids.size(),
                   trajtok::AgentState{trajtok::Pose{}, vocab.agent_type});
  }

  std::vector<trajtok::DatasetRecord> records;
  records.reserve(ids.size());
  for (std::size_t n = 0; n < ids.size(); ++n) {
    const trajtok::Trajectory token = trajtok::decode(vocab, ids[n]);
    trajtok::DatasetRecord record;
    record.agent_type = vocab.agent_type;
    record.id = n;
    record.global_poses = trajtok::apply_token_global(anchors[n], token);
    record.global_poses.insert(record.global_poses.begin(), anchors[n].pose);
    records.push_back(std::move(record));
  }
  trajtok::write_dataset(out_path, records, vocab.params.token_length);
  std::cout << "decoded " << ids.size() << " tokens -> " << out_path << '\n';
  return 0;
}

int run_smooth(const std::string& vocab_path, const std::string& ids_path,
               const std::string& mode, double eps, double eps1,
               bool normalized, const std::string& out_path) {
  const Vocabulary vocab = trajtok::read_vocabulary(vocab_path);
  const std::vector<int> ids = trajtok::read_ids(ids_path);

  std::vector<std::vector<double>> rows;
  rows.reserve(ids.size());
  for (const int gt : ids) {
    if (gt < 0) {
      throw trajtok::BadIndexError("negative ground-truth id " + std::to_string(gt));
    }
    trajtok::SmoothingTargets targets;
    if (mode == "uniform") {
      targets = trajtok::smoothing_targets_uniform(
          vocab.size(), static_cast<std::size_t>(gt), eps, normalized);
    } else if (mode == "spatial") {
      targets = trajtok::smoothing_targets_spatial(
          vocab, static_cast<std::size_t>(gt), eps, eps1);
    } else {
      throw CLI::ValidationError("--mode", "expected uniform or spatial");
    }
    rows.push_back(std::move(targets.probs));
  }
  trajtok::write_probs(out_path, rows);
  std::cout << "wrote " << rows.size() << " probability rows -> " << out_path << '\n';
  return 0;
}

int run_eval(const std::string& vocab_path, const std::string& data_path,
             const std::string& report_path, const std::string& json_path,
             bool lenient) {
  const Vocabulary vocab = trajtok::read_vocabulary(vocab_path);
  const NormalizedDataset data =
      load_normalized(data_path, lenient, vocab.params.token_length);
  const trajtok::EvalReport report = trajtok::evaluate(vocab, data);
  std::cout << trajtok::report_to_text(report);
  if (!report_path.empty()) {
    trajtok::write_report(report_path, report);
    std::cout << "wrote " << report_path << '\n';
  }
  if (!json_path.empty()) {
    trajtok::write_report_json(json_path, report);
    std::cout << "wrote " << json_path << '\n';
  }
  return 0;
}

int run_compare(const std::string& vocab_a, const std::string& vocab_b,
                const std::string& data_path, bool lenient) {
  const Vocabulary a = trajtok::read_vocabulary(vocab_a);
  const Vocabulary b = trajtok::read_vocabulary(vocab_b);
  const NormalizedDataset data =
      load_normalized(data_path, lenient, a.params.token_length);
  const trajtok::EvalReport ra = trajtok::evaluate(a, data);
  const trajtok::EvalReport rb = trajtok::evaluate(b, data);

  std::cout << "# A: " << vocab_a << " (" << a.tokenizer << ")\n";
  std::cout << trajtok::report_to_text(ra);
  std::cout << "# B: " << vocab_b << " (" << b.tokenizer << ")\n";
  std::cout << trajtok::report_to_text(rb);
  std::cout << "# delta (B - A)\n";
  std::cout << "vocab_size_delta="
            << (static_cast<long long>(rb.vocab_size) -
                static_cast<long long>(ra.vocab_size))
            << '\n';
  std::cout << "mean_endpoint_error_delta="
            << rb.mean_endpoint_error - ra.mean_endpoint_error << '\n';
  std::cout << "symmetry_delta=" << rb.symmetry - ra.symmetry << '\n';
  std::cout << "utilization_delta=" << rb.utilization - ra.utilization << '\n';
  return 0;
}

int run_gen(std::size_t n, const std::string& agent_name, std::uint64_t seed,
            double noise, const std::string& out_path) {
  trajtok::SyntheticParams params;
  params.count = n;
  params.agent_type = parse_agent_type(agent_name);
  params.seed = seed;
  params.noise_fraction = noise;
  const std::vector<trajtok::DatasetRecord> records = trajtok::gen_synthetic(params);
  trajtok::write_dataset(out_path, records, params.steps);
  std::cout << "wrote " << records.size() << " records -> " << out_path << '\n';
  return 0;
}

int run_viz(const std::string& vocab_path, const std::string& out_path) {
  const Vocabulary vocab = trajtok::read_vocabulary(vocab_path);
  trajtok::export_svg(vocab, out_path);
  std::cout << "wrote " << vocab.size() << " token polylines -> " << out_path << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trajtok: trajectory vocabulary builder, codec, and evaluator"};
  app.require_subcommand(1);

  // build
  std::string tokenizer = "trajtok";
  std::string agent_name = "vehicle";
  std::string config_path, data_path, out_path;
  std::uint64_t seed = 0;
  bool lenient = false;
  bool no_flip = false;
  CLI::App* build = app.add_subcommand("build", "Build a trajectory vocabulary");
  build->add_option("--tokenizer", tokenizer, "trajtok or kdisks");
  build->add_option("--agent-type", agent_name, "vehicle, pedestrian, or cyclist");
  build->add_option("--config", config_path, "JSON config overriding the defaults");
  build->add_option("--data", data_path, "dataset file")->required();
  build->add_option("--out", out_path, "output vocabulary file")->required();
  build->add_option("--seed", seed, "random seed (kdisks only)");
  build->add_flag("--lenient", lenient, "skip malformed dataset lines");
  build->add_flag("--no-flip", no_flip, "skip flip augmentation (trajtok only)");

  // encode
  std::string enc_vocab, enc_data, enc_out;
  bool enc_lenient = false;
  CLI::App* enc = app.add_subcommand("encode", "Encode trajectories to token ids");
  enc->add_option("--vocab", enc_vocab)->required();
  enc->add_option("--data", enc_data)->required();
  enc->add_option("--out", enc_out)->required();
  enc->add_flag("--lenient", enc_lenient);

  // decode
  std::string dec_vocab, dec_ids, dec_anchor, dec_out;
  CLI::App* dec = app.add_subcommand("decode", "Decode token ids to trajectories");
  dec->add_option("--vocab", dec_vocab)->required();
  dec->add_option("--ids", dec_ids)->required();
  dec->add_option("--anchor-data", dec_anchor,
                  "dataset whose anchor poses place tokens in the global frame");
  dec->add_option("--out", dec_out)->required();

  // smooth
  std::string sm_vocab, sm_ids, sm_mode = "uniform", sm_out;
  double sm_eps = 0.1;
  double sm_eps1 = 0.01;
  bool sm_normalized = false;
  CLI::App* sm = app.add_subcommand("smooth", "Label-smoothing target rows");
  sm->add_option("--vocab", sm_vocab)->required();
  sm->add_option("--gt-ids", sm_ids)->required();
  sm->add_option("--mode", sm_mode, "uniform or spatial");
  sm->add_option("--eps", sm_eps, "total non-ground-truth probability mass");
  sm->add_option("--eps1", sm_eps1, "squared-distance floor (spatial mode)");
  sm->add_flag("--normalized", sm_normalized,
               "uniform mode: divide by |V|-1 so rows sum to 1");
  sm->add_option("--out", sm_out)->required();

  // eval
  std::string ev_vocab, ev_data, ev_report, ev_json;
  bool ev_lenient = false;
  CLI::App* ev = app.add_subcommand("eval", "Evaluate a vocabulary on a dataset");
  ev->add_option("--vocab", ev_vocab)->required();
  ev->add_option("--data", ev_data)->required();
  ev->add_option("--report", ev_report, "key=value report file");
  ev->add_option("--json", ev_json, "JSON report file");
  ev->add_flag("--lenient", ev_lenient);

  // compare
  std::string cp_a, cp_b, cp_data;
  bool cp_lenient = false;
  CLI::App* cp = app.add_subcommand("compare", "Evaluate two vocabularies side by side");
  cp->add_option("--vocab-a", cp_a)->required();
  cp->add_option("--vocab-b", cp_b)->required();
  cp->add_option("--data", cp_data)->required();
  cp->add_flag("--lenient", cp_lenient);

  // gen
  std::size_t gen_n = 1000;
  std::string gen_agent = "vehicle", gen_out;
  std::uint64_t gen_seed = 0;
  double gen_noise = 0.0;
  CLI::App* gn = app.add_subcommand("gen", "Generate a synthetic dataset");
  gn->add_option("--n", gen_n, "number of kinematic records");
  gn->add_option("--agent-type", gen_agent);
  gn->add_option("--seed", gen_seed);
  gn->add_option("--noise", gen_noise, "far-field noise records as a fraction of --n");
  gn->add_option("--out", gen_out)->required();

  // viz
  std::string vz_vocab, vz_out;
  CLI::App* vz = app.add_subcommand("viz", "Render a vocabulary to SVG");
  vz->add_option("--vocab", vz_vocab)->required();
  vz->add_option("--out", vz_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*build) {
      return run_build(tokenizer, agent_name, config_path, data_path, out_path,
                       seed, lenient, no_flip);
    }
    if (*enc) return run_encode(enc_vocab, enc_data, enc_out, enc_lenient);
    if (*dec) return run_decode(dec_vocab, dec_ids, dec_anchor, dec_out);
    if (*sm) {
      return run_smooth(sm_vocab, sm_ids, sm_mode, sm_eps, sm_eps1, sm_normalized,
                        sm_out);
    }
    if (*ev) return run_eval(ev_vocab, ev_data, ev_report, ev_json, ev_lenient);
    if (*cp) return run_compare(cp_a, cp_b, cp_data, cp_lenient);
    if (*gn) return run_gen(gen_n, gen_agent, gen_seed, gen_noise, gen_out);
    if (*vz) return run_viz(vz_vocab, vz_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const trajtok::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
