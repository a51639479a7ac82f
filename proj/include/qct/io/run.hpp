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

#include "qct/capability/kernel.hpp"
#include "qct/capability/triangle_q.hpp"
#include "qct/dynamics/sweep.hpp"
#include "qct/io/config.hpp"

namespace qct::io {

inline constexpr const char* kToolVersion = "qct 0.1.0";

struct SelftestCase {
  std::string name;
  double lp_value = 0.0;
  double reference = 0.0;  // Monte-Carlo bound or closed-form expectation
  double violation = 0.0;  // positive means the check failed
};

struct RunResult {
  RunConfig config;

  // one-qubit / two-qubit
  networks::ScenarioData data;
  capability::KernelResult kernel;

  // triangle
  std::vector<double> p_quantum;
  capability::TriangleResult triangle;

  // dqd
  dynamics::SweepGrid grid;
  std::vector<std::vector<double>> qt;

  // lp-selftest
  std::vector<SelftestCase> selftest;
  bool selftest_pass = true;

  bool solver_ok() const;
};

// Dispatches a validated config to the scenario modules.
RunResult run(const RunConfig& config);

}  // namespace qct::io
