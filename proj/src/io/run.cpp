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

#include "qct/io/run.hpp"

#include <cmath>
#include <random>

#include "qct/networks/one_qubit.hpp"
#include "qct/networks/two_qubit.hpp"

namespace qct::io {

using networks::NetworkSize;

bool RunResult::solver_ok() const {
  switch (config.scenario) {
    case Scenario::OneQubit:
    case Scenario::TwoQubit:
      return kernel.solver_status == optimizer::SolveStatus::Optimal;
    case Scenario::LpSelftest:
      return selftest_pass;
    default:
      return true;
  }
}

namespace {

RunResult run_selftest(const RunConfig& config) {
  RunResult result;
  result.config = config;
  std::mt19937_64 rng(config.seed);

  auto push_case = [&](SelftestCase c) {
    if (c.violation > 0.0) result.selftest_pass = false;
    result.selftest.push_back(std::move(c));
  };

  // Closed-form instance: identical half/half weights with opposite
  // checkpoint rows pin the kernel at exactly 2.
  {
    networks::ScenarioData data;
    data.d = 2;
    data.n = 2;
    data.diag_populations = {{0.5, 0.5}, {0.5, 0.5}};
    data.checkpoint_populations = {{1.0, 0.0}, {0.0, 1.0}};
    data.metadata = "selftest closed-form";
    const double q = capability::criterion_q(data).q_value;
    push_case({"closed-form-2", q, 2.0, std::abs(q - 2.0) > 1e-9 ? std::abs(q - 2.0) : 0.0});
  }

  std::uniform_real_distribution<double> uni(0.0, 1.0);
  auto random_distribution = [&](std::size_t d) {
    std::vector<double> v(d);
    double sum = 0.0;
    for (double& x : v) {
      x = -std::log(1.0 - uni(rng));
      sum += x;
    }
    for (double& x : v) x /= sum;
    return v;
  };

  for (int c = 0; c < config.cases; ++c) {
    const std::size_t d = 2 + static_cast<std::size_t>(c % 3);
    networks::ScenarioData data;
    data.d = d;
    data.n = d;
    for (std::size_t k = 0; k < d; ++k) {
      data.diag_populations.push_back(random_distribution(d));
      data.checkpoint_populations.push_back(random_distribution(d));
    }
    data.metadata = "selftest random";
    const double lp = capability::criterion_q(data).q_value;
    const double bound = capability::sample_incapable_bound(
        data, static_cast<std::size_t>(config.trials), rng());
    const double gap = lp - bound - 1e-7;
    push_case({"random-" + std::to_string(c), lp, bound, gap > 0.0 ? gap : 0.0});
  }
  return result;
}

}  // namespace

RunResult run(const RunConfig& input) {
  RunConfig config = input;
  if ((config.scenario == Scenario::OneQubit || config.scenario == Scenario::TwoQubit) &&
      config.visibilities.empty())
    config.visibilities.assign(config.network == 4 ? 2 : 3, 1.0);

  RunResult result;
  result.config = config;

  switch (config.scenario) {
    case Scenario::OneQubit: {
      const NetworkSize size = config.network == 4 ? NetworkSize::N4 : NetworkSize::N6;
      result.data =
          networks::run_one_qubit(size, config.rsp, config.checkpoint, config.visibilities);
      result.kernel = capability::criterion_q(result.data);
      break;
    }
    case Scenario::TwoQubit: {
      const NetworkSize size = config.network == 4 ? NetworkSize::N4 : NetworkSize::N6;
      const networks::TwoQubitVariant variant = config.variant == "capable"
                                                    ? networks::TwoQubitVariant::Capable
                                                    : networks::TwoQubitVariant::Control;
      result.data =
          networks::run_two_qubit(size, variant, config.checkpoint, config.visibilities);
      result.kernel = capability::criterion_q(result.data);
      break;
    }
    case Scenario::Triangle: {
      result.p_quantum = networks::triangle_quantum_distribution();
      result.triangle = capability::triangle_q(
          result.p_quantum, static_cast<std::size_t>(config.restarts), config.seed);
      break;
    }
    case Scenario::Dqd: {
      const dynamics::LindbladModel model =
          dynamics::dqd_model(config.gamma_l, config.gamma_r, config.delta);
      result.grid = dynamics::SweepGrid::uniform(
          config.t0_max, static_cast<std::size_t>(config.t0_points), config.tau_max,
          static_cast<std::size_t>(config.tau_points), config.dt);
      result.qt = dynamics::qt_sweep(model, dynamics::dqd_basis_initial_states(), result.grid,
                                     static_cast<unsigned>(config.threads));
      break;
    }
    case Scenario::LpSelftest:
      result = run_selftest(config);
      break;
  }
  return result;
}

}  // namespace qct::io
