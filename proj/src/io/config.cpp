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

#include "qct/io/config.hpp"

#include <set>

#include <nlohmann/json.hpp>

namespace qct::io {

using json = nlohmann::ordered_json;

std::string scenario_name(Scenario s) {
  switch (s) {
    case Scenario::OneQubit: return "one-qubit";
    case Scenario::TwoQubit: return "two-qubit";
    case Scenario::Triangle: return "triangle";
    case Scenario::Dqd: return "dqd";
    case Scenario::LpSelftest: return "lp-selftest";
  }
  throw ConfigError("scenario: invalid value");
}

Scenario scenario_from_name(const std::string& name) {
  if (name == "one-qubit") return Scenario::OneQubit;
  if (name == "two-qubit") return Scenario::TwoQubit;
  if (name == "triangle") return Scenario::Triangle;
  if (name == "dqd") return Scenario::Dqd;
  if (name == "lp-selftest") return Scenario::LpSelftest;
  throw ConfigError("scenario: unknown value \"" + name +
                    "\" (expected one-qubit, two-qubit, triangle, dqd or lp-selftest)");
}

namespace {

const std::set<std::string>& allowed_keys(Scenario s) {
  static const std::set<std::string> one_qubit{"scenario", "network", "rsp",
                                               "checkpoint", "visibilities", "seed"};
  static const std::set<std::string> two_qubit{"scenario", "network", "variant",
                                               "checkpoint", "visibilities", "seed"};
  static const std::set<std::string> triangle{"scenario", "restarts", "seed"};
  static const std::set<std::string> dqd{"scenario",  "gamma_l",    "gamma_r", "delta",
                                         "t0_max",    "tau_max",    "t0_points",
                                         "tau_points", "dt",        "threads", "seed"};
  static const std::set<std::string> selftest{"scenario", "cases", "trials", "seed"};
  switch (s) {
    case Scenario::OneQubit: return one_qubit;
    case Scenario::TwoQubit: return two_qubit;
    case Scenario::Triangle: return triangle;
    case Scenario::Dqd: return dqd;
    case Scenario::LpSelftest: return selftest;
  }
  throw ConfigError("scenario: invalid value");
}

int get_int(const json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_integer())
    throw ConfigError(key + ": must be an integer");
  return v.get<int>();
}

double get_double(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number())
    throw ConfigError(key + ": must be a number");
  return v.get<double>();
}

void validate(RunConfig& c) {
  const std::size_t n_pairs = c.network == 4 ? 2 : 3;
  switch (c.scenario) {
    case Scenario::OneQubit:
    case Scenario::TwoQubit:
      if (c.network != 4 && c.network != 6)
        throw ConfigError("network: must be 4 or 6");
      if (c.scenario == Scenario::OneQubit && (c.rsp < 1 || c.rsp > 3))
        throw ConfigError("rsp: must be in 1..3");
      if (c.checkpoint < 1 || c.checkpoint > 3)
        throw ConfigError("checkpoint: must be in 1..3");
      if (c.scenario == Scenario::TwoQubit && c.variant != "capable" && c.variant != "control")
        throw ConfigError("variant: must be \"capable\" or \"control\"");
      if (c.visibilities.empty()) c.visibilities.assign(n_pairs, 1.0);
      if (c.visibilities.size() != n_pairs)
        throw ConfigError("visibilities: expected " + std::to_string(n_pairs) +
                          " entries for this network size");
      for (double v : c.visibilities)
        if (!(v >= 0.0 && v <= 1.0))
          throw ConfigError("visibilities: entries must lie in [0, 1]");
      break;
    case Scenario::Triangle:
      if (c.restarts < 1) throw ConfigError("restarts: must be >= 1");
      if (!c.seed_set) throw ConfigError("seed: required for the triangle scenario");
      break;
    case Scenario::LpSelftest:
      if (c.cases < 1) throw ConfigError("cases: must be >= 1");
      if (c.trials < 1) throw ConfigError("trials: must be >= 1");
      if (!c.seed_set) throw ConfigError("seed: required for lp-selftest");
      break;
    case Scenario::Dqd:
      if (!(c.gamma_l >= 0.0)) throw ConfigError("gamma_l: must be >= 0");
      if (!(c.gamma_r >= 0.0)) throw ConfigError("gamma_r: must be >= 0");
      if (!(c.t0_max > 0.0)) throw ConfigError("t0_max: must be > 0");
      if (!(c.tau_max > 0.0)) throw ConfigError("tau_max: must be > 0");
      if (c.t0_points < 2) throw ConfigError("t0_points: must be >= 2");
      if (c.tau_points < 2) throw ConfigError("tau_points: must be >= 2");
      if (!(c.dt > 0.0)) throw ConfigError("dt: must be > 0");
      if (c.threads < 1) throw ConfigError("threads: must be >= 1");
      break;
  }
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config: top-level JSON value must be an object");
  if (!doc.contains("scenario")) throw ConfigError("scenario: key is required");
  if (!doc.at("scenario").is_string()) throw ConfigError("scenario: must be a string");

  RunConfig c;
  c.scenario = scenario_from_name(doc.at("scenario").get<std::string>());

  const auto& allowed = allowed_keys(c.scenario);
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!allowed.count(key))
      throw ConfigError(key + ": unknown key for scenario \"" + scenario_name(c.scenario) + "\"");
  }

  c.network = get_int(doc, "network", c.network);
  c.rsp = get_int(doc, "rsp", c.rsp);
  c.checkpoint = get_int(doc, "checkpoint", c.checkpoint);
  if (doc.contains("variant")) {
    if (!doc.at("variant").is_string()) throw ConfigError("variant: must be a string");
    c.variant = doc.at("variant").get<std::string>();
  }
  if (doc.contains("visibilities")) {
    if (!doc.at("visibilities").is_array())
      throw ConfigError("visibilities: must be an array of numbers");
    for (const auto& v : doc.at("visibilities")) {
      if (!v.is_number()) throw ConfigError("visibilities: must be an array of numbers");
      c.visibilities.push_back(v.get<double>());
    }
  }
  c.restarts = get_int(doc, "restarts", c.restarts);
  c.cases = get_int(doc, "cases", c.cases);
  c.trials = get_int(doc, "trials", c.trials);
  c.gamma_l = get_double(doc, "gamma_l", c.gamma_l);
  c.gamma_r = get_double(doc, "gamma_r", c.gamma_r);
  c.delta = get_double(doc, "delta", c.delta);
  c.t0_max = get_double(doc, "t0_max", c.t0_max);
  c.tau_max = get_double(doc, "tau_max", c.tau_max);
  c.t0_points = get_int(doc, "t0_points", c.t0_points);
  c.tau_points = get_int(doc, "tau_points", c.tau_points);
  c.dt = get_double(doc, "dt", c.dt);
  c.threads = get_int(doc, "threads", c.threads);
  if (doc.contains("seed")) {
    const auto& v = doc.at("seed");
    if (!v.is_number_integer())
      throw ConfigError("seed: must be a nonnegative integer");
    if (!v.is_number_unsigned() && v.get<std::int64_t>() < 0)
      throw ConfigError("seed: must be a nonnegative integer");
    c.seed = v.get<std::uint64_t>();
    c.seed_set = true;
  }

  validate(c);
  return c;
}

std::string serialize_config(const RunConfig& config) {
  json doc;
  doc["scenario"] = scenario_name(config.scenario);
  switch (config.scenario) {
    case Scenario::OneQubit:
      doc["network"] = config.network;
      doc["rsp"] = config.rsp;
      doc["checkpoint"] = config.checkpoint;
      doc["visibilities"] = config.visibilities;
      break;
    case Scenario::TwoQubit:
      doc["network"] = config.network;
      doc["variant"] = config.variant;
      doc["checkpoint"] = config.checkpoint;
      doc["visibilities"] = config.visibilities;
      break;
    case Scenario::Triangle:
      doc["restarts"] = config.restarts;
      break;
    case Scenario::LpSelftest:
      doc["cases"] = config.cases;
      doc["trials"] = config.trials;
      break;
    case Scenario::Dqd:
      doc["gamma_l"] = config.gamma_l;
      doc["gamma_r"] = config.gamma_r;
      doc["delta"] = config.delta;
      doc["t0_max"] = config.t0_max;
      doc["tau_max"] = config.tau_max;
      doc["t0_points"] = config.t0_points;
      doc["tau_points"] = config.tau_points;
      doc["dt"] = config.dt;
      doc["threads"] = config.threads;
      break;
  }
  if (config.seed_set) doc["seed"] = config.seed;
  return doc.dump();
}

}  // namespace qct::io
