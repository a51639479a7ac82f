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

#include "qct/dynamics/lindblad.hpp"

#include <cmath>
#include <stdexcept>

#include "qct/simd/kernels.hpp"

namespace qct::dynamics {

using qcore::Complex;
using qcore::ComplexMatrix;
using qcore::DensityMatrix;

void LindbladModel::validate() const {
  if (hamiltonian.rows() != dim || hamiltonian.cols() != dim)
    throw std::invalid_argument("LindbladModel: Hamiltonian dimension mismatch");
  if (hamiltonian.hermiticity_defect() > 1e-12)
    throw std::invalid_argument("LindbladModel: Hamiltonian not Hermitian");
  for (const auto& j : jumps) {
    if (j.op.rows() != dim || j.op.cols() != dim)
      throw std::invalid_argument("LindbladModel: jump operator dimension mismatch");
    if (!(j.rate >= 0.0)) throw std::invalid_argument("LindbladModel: negative rate");
  }
}

LindbladModel dqd_model(double gamma_l, double gamma_r, double delta) {
  if (!(gamma_l >= 0.0) || !(gamma_r >= 0.0))
    throw std::invalid_argument("dqd_model: tunneling rates must be nonnegative");
  LindbladModel model;
  model.dim = 3;
  model.hamiltonian = ComplexMatrix(3, 3);
  model.hamiltonian(1, 2) = delta;  // Delta (|L><R| + |R><L|)
  model.hamiltonian(2, 1) = delta;

  ComplexMatrix load(3, 3);
  load(1, 0) = 1.0;  // |L><0|
  ComplexMatrix unload(3, 3);
  unload(0, 2) = 1.0;  // |0><R|
  model.jumps.push_back({std::move(load), gamma_l});
  model.jumps.push_back({std::move(unload), gamma_r});
  model.validate();
  return model;
}

ComplexMatrix lindblad_derivative(const LindbladModel& model, const ComplexMatrix& rho) {
  if (rho.rows() != model.dim || rho.cols() != model.dim)
    throw std::invalid_argument("lindblad_derivative: state dimension mismatch");
  const Complex minus_i{0.0, -1.0};
  ComplexMatrix d = model.hamiltonian * rho;
  d -= rho * model.hamiltonian;
  d *= minus_i;
  for (const auto& j : model.jumps) {
    if (j.rate == 0.0) continue;
    const ComplexMatrix l_rho = j.op * rho;
    const ComplexMatrix sandwich = l_rho * j.op.adjoint();
    const ComplexMatrix ll = j.op.adjoint() * j.op;
    ComplexMatrix anti = ll * rho;
    anti += rho * ll;
    anti *= Complex{0.5, 0.0};
    ComplexMatrix term = sandwich;
    term -= anti;
    term *= Complex{j.rate, 0.0};
    d += term;
  }
  return d;
}

ComplexMatrix lindblad_derivative(const LindbladModel& model, const DensityMatrix& rho) {
  return lindblad_derivative(model, rho.matrix());
}

DensityMatrix evolve(const LindbladModel& model, const DensityMatrix& rho0, double t, double dt) {
  model.validate();
  if (!(t >= 0.0)) throw std::invalid_argument("evolve: t must be nonnegative");
  if (!(dt > 0.0)) throw std::invalid_argument("evolve: dt must be positive");
  if (rho0.dim() != model.dim) throw std::invalid_argument("evolve: state dimension mismatch");
  if (t == 0.0) return rho0;

  const std::size_t steps = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(t / dt)));
  const double h = t / static_cast<double>(steps);
  const std::size_t n = model.dim * model.dim;

  ComplexMatrix rho = rho0.matrix();
  for (std::size_t s = 0; s < steps; ++s) {
    const ComplexMatrix k1 = lindblad_derivative(model, rho);
    ComplexMatrix stage = rho;
    simd::caxpy(Complex{0.5 * h, 0.0}, k1.data(), stage.data(), n);
    const ComplexMatrix k2 = lindblad_derivative(model, stage);
    stage = rho;
    simd::caxpy(Complex{0.5 * h, 0.0}, k2.data(), stage.data(), n);
    const ComplexMatrix k3 = lindblad_derivative(model, stage);
    stage = rho;
    simd::caxpy(Complex{h, 0.0}, k3.data(), stage.data(), n);
    const ComplexMatrix k4 = lindblad_derivative(model, stage);

    simd::caxpy(Complex{h / 6.0, 0.0}, k1.data(), rho.data(), n);
    simd::caxpy(Complex{h / 3.0, 0.0}, k2.data(), rho.data(), n);
    simd::caxpy(Complex{h / 3.0, 0.0}, k3.data(), rho.data(), n);
    simd::caxpy(Complex{h / 6.0, 0.0}, k4.data(), rho.data(), n);
  }
  return DensityMatrix(std::move(rho), rho0.subnormalized());
}

TemporalScenario temporal_scenario(const LindbladModel& model,
                                   const std::vector<DensityMatrix>& initial_states,
                                   double t0, double t, double dt) {
  if (!(t >= t0) || !(t0 >= 0.0))
    throw std::invalid_argument("temporal_scenario: require t >= t0 >= 0");
  if (initial_states.empty())
    throw std::invalid_argument("temporal_scenario: no initial states");
  TemporalScenario out;
  for (const auto& rho0 : initial_states) {
    const DensityMatrix at_t0 = evolve(model, rho0, t0, dt);
    const DensityMatrix at_t = t == t0 ? at_t0 : evolve(model, at_t0, t - t0, dt);
    out.diag_t0.push_back(qcore::populations(at_t0));
    out.populations_t.push_back(qcore::populations(at_t));
  }
  return out;
}

}  // namespace qct::dynamics
