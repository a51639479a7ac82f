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

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qct::io {

// Raised for malformed or out-of-range configuration input; the message names
// the offending key and the violated constraint.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Scenario { OneQubit, TwoQubit, Triangle, Dqd, LpSelftest };

std::string scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);

struct RunConfig {
  Scenario scenario = Scenario::OneQubit;

  // one-qubit / two-qubit networks
  int network = 4;                  // 4 or 6
  int rsp = 1;                      // 1..3 (one-qubit only)
  int checkpoint = 1;               // 1..3
  std::string variant = "capable";  // capable | control (two-qubit only)
  std::vector<double> visibilities;  // one per pair; defaults to all-ideal

  // triangle
  int restarts = 200;

  // lp-selftest
  int cases = 50;
  int trials = 2000;

  // dqd sweep
  double gamma_l = 4.0;
  double gamma_r = 0.1;
  double delta = 1.0;
  double t0_max = 6.0;
  double tau_max = 6.0;
  int t0_points = 121;
  int tau_points = 121;
  double dt = 1e-3;
  int threads = 1;

  std::uint64_t seed = 0;
  bool seed_set = false;

  bool operator==(const RunConfig& other) const = default;
};

// Parses and validates a JSON config document. Unknown keys (including keys
// that do not belong to the chosen scenario) are rejected with the key named.
// The seed is mandatory for the stochastic scenarios (triangle, lp-selftest).
RunConfig parse_config(const std::string& json_text);

// Canonical JSON form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& config);

}  // namespace qct::io
