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
#include <vector>

#include "qct/networks/scenario.hpp"
#include "qct/optimizer/lp.hpp"

namespace qct::capability {

// Certification threshold: ten times the solver feasibility tolerance. Kernel
// values above it count as genuine signal, below as numerical zero.
inline constexpr double kCertificationThreshold = 1e-6;

// Diagonal action of a trace-preserving process that cannot create coherence:
// t(i, n) is the probability of basis state n ending up in basis state i.
// Entrywise nonnegative with unit column sums.
struct PopulationTransferMatrix {
  std::size_t d = 0;
  std::vector<double> t;  // row-major d x d

  double& at(std::size_t i, std::size_t n) { return t[i * d + n]; }
  double at(std::size_t i, std::size_t n) const { return t[i * d + n]; }
  void validate() const;  // throws std::invalid_argument
};

struct KernelResult {
  double q_value = 0.0;
  PopulationTransferMatrix minimizer;
  optimizer::SolveStatus solver_status = optimizer::SolveStatus::Optimal;

  bool certifies_transfer() const { return q_value > kCertificationThreshold; }
};

// Kernel objective sum_k sum_i |P_k(i) - sum_n w_k(n) t(i,n)| for a given
// transfer matrix; the quantity the minimizations below drive down.
double kernel_objective(const networks::ScenarioData& data, const PopulationTransferMatrix& t);

// Standard-form LP whose optimum is the criterion kernel: variables t(i,n)
// (column-stochastic via d equality rows) plus epigraph slacks for the 2nd
// absolute-value terms. The minimization over all incapable processes reduces
// to this LP because the objective depends on the process only through its
// diagonal block, and the achievable diagonal blocks of trace-preserving
// incapable processes are exactly the column-stochastic matrices.
optimizer::LinearProgram build_kernel_lp(const networks::ScenarioData& data);

// Criterion kernel: minimum of the objective over incapable processes.
KernelResult criterion_q(const networks::ScenarioData& data);

// Temporal criterion: identical machinery with time-t populations in place of
// checkpoint populations and time-t0 diagonals as weights.
KernelResult temporal_q(const std::vector<std::vector<double>>& populations_t,
                        const std::vector<std::vector<double>>& diag_t0);

// Monte-Carlo upper bound: best objective over `trials` random
// column-stochastic matrices (columns uniform on the simplex). Always at
// least the LP optimum up to solver tolerance; an independent oracle for it.
double sample_incapable_bound(const networks::ScenarioData& data, std::size_t trials,
                              std::uint64_t seed);

}  // namespace qct::capability
