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

#include <vector>

#include "qct/qcore/ops.hpp"

namespace qct::dynamics {

// Hamiltonian plus rate-weighted jump operators (hbar = 1):
//   d rho / dt = -i [H, rho] + sum_a rate_a (L_a rho L_a^dag - {L_a^dag L_a, rho}/2).
struct LindbladModel {
  struct Jump {
    qcore::ComplexMatrix op;
    double rate;
  };

  std::size_t dim = 0;
  qcore::ComplexMatrix hamiltonian;
  std::vector<Jump> jumps;

  void validate() const;  // Hermitian H (1e-12), rates >= 0, matching dims
};

// Double-quantum-dot transport model in the basis |0> (no electron),
// |1> = |L>, |2> = |R>: coherent tunneling Delta between the dots, loading
// |L><0| at rate Gamma_L and unloading |0><R| at rate Gamma_R.
LindbladModel dqd_model(double gamma_l, double gamma_r, double delta);

// Generator applied to a state; traceless and Hermiticity-preserving.
qcore::ComplexMatrix lindblad_derivative(const LindbladModel& model,
                                         const qcore::ComplexMatrix& rho);
qcore::ComplexMatrix lindblad_derivative(const LindbladModel& model,
                                         const qcore::DensityMatrix& rho);

// Fixed-step RK4 from 0 to t. The step count is round(t/dt) (at least 1), so
// the end time is hit exactly. Output invariants are enforced by the
// DensityMatrix constructor; violations abort with a diagnostic.
qcore::DensityMatrix evolve(const LindbladModel& model, const qcore::DensityMatrix& rho0,
                            double t, double dt);

// Populations at t0 and at t for each initial state: the two collections
// consumed by the temporal criterion.
struct TemporalScenario {
  std::vector<std::vector<double>> populations_t;
  std::vector<std::vector<double>> diag_t0;
};
TemporalScenario temporal_scenario(const LindbladModel& model,
                                   const std::vector<qcore::DensityMatrix>& initial_states,
                                   double t0, double t, double dt);

}  // namespace qct::dynamics
