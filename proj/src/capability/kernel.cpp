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

#include "qct/capability/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace qct::capability {

void PopulationTransferMatrix::validate() const {
  if (t.size() != d * d)
    throw std::invalid_argument("PopulationTransferMatrix: entry count != d*d");
  for (double v : t)
    if (v < 0.0) throw std::invalid_argument("PopulationTransferMatrix: negative entry");
  for (std::size_t n = 0; n < d; ++n) {
    double col = 0.0;
    for (std::size_t i = 0; i < d; ++i) col += at(i, n);
    if (std::abs(col - 1.0) > 1e-9)
      throw std::invalid_argument("PopulationTransferMatrix: column sum deviates from 1");
  }
}

double kernel_objective(const networks::ScenarioData& data, const PopulationTransferMatrix& t) {
  if (t.d != data.d) throw std::invalid_argument("kernel_objective: dimension mismatch");
  double total = 0.0;
  for (std::size_t k = 0; k < data.n; ++k) {
    const auto& w = data.diag_populations[k];
    const auto& p = data.checkpoint_populations[k];
    for (std::size_t i = 0; i < data.d; ++i) {
      double model = 0.0;
      for (std::size_t n = 0; n < data.d; ++n) model += t.at(i, n) * w[n];
      total += std::abs(p[i] - model);
    }
  }
  return total;
}

namespace {

optimizer::LpBuilder kernel_lp_builder(const networks::ScenarioData& data) {
  data.validate();
  const std::size_t d = data.d;
  optimizer::LpBuilder builder;
  // Variables t(i,n) at index i*d + n.
  for (std::size_t v = 0; v < d * d; ++v) builder.add_variable();
  for (std::size_t k = 0; k < data.n; ++k) {
    const auto& w = data.diag_populations[k];
    const auto& p = data.checkpoint_populations[k];
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<optimizer::LpBuilder::Term> expr;
      expr.reserve(d);
      for (std::size_t n = 0; n < d; ++n)
        expr.push_back({i * d + n, -w[n]});
      builder.add_abs_objective_term(std::move(expr), p[i]);
    }
  }
  for (std::size_t n = 0; n < d; ++n) {
    std::vector<optimizer::LpBuilder::Term> col;
    col.reserve(d);
    for (std::size_t i = 0; i < d; ++i) col.push_back({i * d + n, 1.0});
    builder.add_equality(std::move(col), 1.0);
  }
  return builder;
}

KernelResult solve_kernel(const networks::ScenarioData& data) {
  const optimizer::LpBuilder builder = kernel_lp_builder(data);
  const optimizer::LinearProgram lp = builder.build();
  const optimizer::SolveResult sol = optimizer::simplex_solve(lp);

  KernelResult result;
  result.solver_status = sol.status;
  if (sol.status == optimizer::SolveStatus::Infeasible) {
    // Column-stochastic matrices always exist; reaching this means the LP
    // construction itself is broken.
    throw std::runtime_error("criterion kernel LP reported infeasible");
  }
  const std::size_t d = data.d;
  result.minimizer.d = d;
  result.minimizer.t.assign(d * d, 0.0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t n = 0; n < d; ++n) {
      double v = sol.solution[builder.solution_index(i * d + n)];
      if (v < 0.0) v = 0.0;  // feasibility-tolerance residue
      result.minimizer.at(i, n) = v;
    }
  // Exact column renormalization so the minimizer meets its invariants.
  for (std::size_t n = 0; n < d; ++n) {
    double col = 0.0;
    for (std::size_t i = 0; i < d; ++i) col += result.minimizer.at(i, n);
    if (col > 0.0)
      for (std::size_t i = 0; i < d; ++i) result.minimizer.at(i, n) /= col;
  }

  double q = sol.objective;
  if (q < 0.0) q = 0.0;
  if (q < 1e-12) q = 0.0;  // sub-round-off floor
  result.q_value = q;
  return result;
}

}  // namespace

optimizer::LinearProgram build_kernel_lp(const networks::ScenarioData& data) {
  return kernel_lp_builder(data).build();
}

KernelResult criterion_q(const networks::ScenarioData& data) { return solve_kernel(data); }

KernelResult temporal_q(const std::vector<std::vector<double>>& populations_t,
                        const std::vector<std::vector<double>>& diag_t0) {
  if (populations_t.size() != diag_t0.size() || populations_t.empty())
    throw std::invalid_argument("temporal_q: mismatched or empty population collections");
  networks::ScenarioData data;
  data.n = populations_t.size();
  data.d = populations_t.front().size();
  data.diag_populations = diag_t0;
  data.checkpoint_populations = populations_t;
  data.metadata = "temporal";
  return solve_kernel(data);
}

double sample_incapable_bound(const networks::ScenarioData& data, std::size_t trials,
                              std::uint64_t seed) {
  data.validate();
  if (trials < 1) throw std::invalid_argument("sample_incapable_bound: trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expd(1.0);
  const std::size_t d = data.d;
  PopulationTransferMatrix t;
  t.d = d;
  t.t.assign(d * d, 0.0);
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t trial = 0; trial < trials; ++trial) {
    for (std::size_t n = 0; n < d; ++n) {
      double sum = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        const double g = expd(rng);
        t.at(i, n) = g;
        sum += g;
      }
      for (std::size_t i = 0; i < d; ++i) t.at(i, n) /= sum;
    }
    best = std::min(best, kernel_objective(data, t));
  }
  return best;
}

}  // namespace qct::capability
