// Copyright 2026 The qct authors
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

// Command-line front end: one subcommand per scenario, JSON configs, CSV or
// JSON result tables. A --config file takes precedence over per-flag options.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qct/io/config.hpp"
#include "qct/io/emit.hpp"
#include "qct/io/run.hpp"

namespace {

using json = nlohmann::ordered_json;

struct CommonFlags {
  std::string config_path;
  std::string out_path;
  std::string format = "csv";
  std::uint64_t seed = 0;
};

struct FlagCapture {
  json values;

  template <typename T>
  void set(const std::string& key, const T& v) {
    values[key] = v;
  }
};

json load_config_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw qct::io::ConfigError("config: cannot open file " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  json doc;
  try {
    doc = json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw qct::io::ConfigError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw qct::io::ConfigError("config: top-level value must be an object");
  return doc;
}

int run_scenario(const std::string& scenario, const CommonFlags& common, const FlagCapture& flags) {
  json merged = flags.values;
  merged["scenario"] = scenario;
  if (!common.config_path.empty()) {
    const json file = load_config_file(common.config_path);
    for (const auto& [key, value] : file.items()) merged[key] = value;
    if (file.contains("scenario") && file.at("scenario") != scenario)
      throw qct::io::ConfigError("scenario: config file says \"" +
                                 file.at("scenario").get<std::string>() +
                                 "\" but the subcommand is \"" + scenario + "\"");
  }

  const qct::io::RunConfig config = qct::io::parse_config(merged.dump());
  const qct::io::RunResult result = qct::io::run(config);

  if (common.format == "csv")
    qct::io::write_output(qct::io::to_csv(result), common.out_path);
  else
    qct::io::write_output(qct::io::to_json(result), common.out_path);

  return result.solver_ok() ? 0 : 2;
}

CLI::Option* add_common(CLI::App* cmd, CommonFlags& common) {
  cmd->add_option("--config", common.config_path, "JSON config file; overrides per-flag options");
  cmd->add_option("--out", common.out_path, "output path (stdout when omitted)");
  cmd->add_option("--format", common.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  return cmd->add_option("--seed", common.seed, "RNG seed (stochastic scenarios)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence-transfer criterion toolkit"};
  app.require_subcommand(1);

  CommonFlags common;
  FlagCapture flags;
  std::string scenario;

  // one-qubit transfer
  auto* oq = app.add_subcommand("onequbit", "one-qubit transfer scenario");
  int oq_network = 4, oq_rsp = 1, oq_ckpt = 1;
  std::vector<double> oq_vis;
  oq->add_option("--network", oq_network, "network size (4 or 6)");
  oq->add_option("--rsp", oq_rsp, "input-state setting 1..3");
  oq->add_option("--checkpoint", oq_ckpt, "checkpoint setting 1..3");
  oq->add_option("--visibilities", oq_vis, "pair visibilities")->delimiter(',');
  CLI::Option* oq_seed = add_common(oq, common);
  oq->callback([&]() {
    scenario = "one-qubit";
    if (oq_seed->count()) flags.set("seed", common.seed);
    if (oq->count("--network")) flags.set("network", oq_network);
    if (oq->count("--rsp")) flags.set("rsp", oq_rsp);
    if (oq->count("--checkpoint")) flags.set("checkpoint", oq_ckpt);
    if (oq->count("--visibilities")) flags.set("visibilities", oq_vis);
  });

  // two-qubit transfer
  auto* tq = app.add_subcommand("twoqubit", "two-qubit transfer scenario");
  int tq_network = 4, tq_ckpt = 1;
  std::string tq_variant = "capable";
  std::vector<double> tq_vis;
  tq->add_option("--network", tq_network, "network size (4 or 6)");
  tq->add_option("--variant", tq_variant, "capable or control");
  tq->add_option("--checkpoint", tq_ckpt, "checkpoint setting 1..3");
  tq->add_option("--visibilities", tq_vis, "pair visibilities")->delimiter(',');
  CLI::Option* tq_seed = add_common(tq, common);
  tq->callback([&]() {
    scenario = "two-qubit";
    if (tq_seed->count()) flags.set("seed", common.seed);
    if (tq->count("--network")) flags.set("network", tq_network);
    if (tq->count("--variant")) flags.set("variant", tq_variant);
    if (tq->count("--checkpoint")) flags.set("checkpoint", tq_ckpt);
    if (tq->count("--visibilities")) flags.set("visibilities", tq_vis);
  });

  // triangular network
  auto* tr = app.add_subcommand("triangle", "triangular-network criterion");
  int tr_restarts = 200;
  tr->add_option("--restarts", tr_restarts, "multi-start count");
  CLI::Option* tr_seed = add_common(tr, common);
  tr->callback([&]() {
    scenario = "triangle";
    if (tr_seed->count()) flags.set("seed", common.seed);
    if (tr->count("--restarts")) flags.set("restarts", tr_restarts);
  });

  // DQD sweep
  auto* dq = app.add_subcommand("dqd", "double-quantum-dot temporal sweep");
  double dq_gl = 4.0, dq_gr = 0.1, dq_delta = 1.0, dq_t0max = 6.0, dq_taumax = 6.0, dq_dt = 1e-3;
  int dq_t0p = 121, dq_taup = 121, dq_threads = 1;
  dq->add_option("--gamma-l", dq_gl, "left tunneling rate");
  dq->add_option("--gamma-r", dq_gr, "right tunneling rate");
  dq->add_option("--delta", dq_delta, "inter-dot tunneling amplitude");
  dq->add_option("--t0-max", dq_t0max, "largest t0");
  dq->add_option("--tau-max", dq_taumax, "largest tau");
  dq->add_option("--t0-points", dq_t0p, "t0 grid points");
  dq->add_option("--tau-points", dq_taup, "tau grid points");
  dq->add_option("--dt", dq_dt, "integrator step");
  dq->add_option("--threads", dq_threads, "worker threads for the sweep");
  CLI::Option* dq_seed = add_common(dq, common);
  dq->callback([&]() {
    scenario = "dqd";
    if (dq_seed->count()) flags.set("seed", common.seed);
    if (dq->count("--gamma-l")) flags.set("gamma_l", dq_gl);
    if (dq->count("--gamma-r")) flags.set("gamma_r", dq_gr);
    if (dq->count("--delta")) flags.set("delta", dq_delta);
    if (dq->count("--t0-max")) flags.set("t0_max", dq_t0max);
    if (dq->count("--tau-max")) flags.set("tau_max", dq_taumax);
    if (dq->count("--t0-points")) flags.set("t0_points", dq_t0p);
    if (dq->count("--tau-points")) flags.set("tau_points", dq_taup);
    if (dq->count("--dt")) flags.set("dt", dq_dt);
    if (dq->count("--threads")) flags.set("threads", dq_threads);
  });

  // LP self-test
  auto* st = app.add_subcommand("lp-selftest", "simplex vs Monte-Carlo consistency run");
  int st_cases = 50, st_trials = 2000;
  st->add_option("--cases", st_cases, "random kernel instances");
  st->add_option("--trials", st_trials, "Monte-Carlo trials per instance");
  CLI::Option* st_seed = add_common(st, common);
  st->callback([&]() {
    scenario = "lp-selftest";
    if (st_seed->count()) flags.set("seed", common.seed);
    if (st->count("--cases")) flags.set("cases", st_cases);
    if (st->count("--trials")) flags.set("trials", st_trials);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    return run_scenario(scenario, common, flags);
  } catch (const qct::io::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
