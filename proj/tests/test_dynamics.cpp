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

#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "qct/capability/kernel.hpp"
#include "qct/dynamics/sweep.hpp"
#include "support/random_states.hpp"

using namespace qct;
using dynamics::LindbladModel;
using qcore::Complex;
using qcore::ComplexMatrix;
using qcore::DensityMatrix;

namespace {

// Stationary state via the generator null space: build the 9x9 action matrix
// column by column, replace one row with the trace condition, solve by
// Gaussian elimination. Independent of the RK4 path.
ComplexMatrix stationary_state(const LindbladModel& model) {
  const std::size_t d = model.dim;
  const std::size_t n = d * d;
  std::vector<std::vector<Complex>> a(n, std::vector<Complex>(n));
  for (std::size_t col = 0; col < n; ++col) {
    ComplexMatrix basis(d, d);
    basis(col / d, col % d) = 1.0;
    const ComplexMatrix image = dynamics::lindblad_derivative(model, basis);
    for (std::size_t row = 0; row < n; ++row) a[row][col] = image(row / d, row % d);
  }
  std::vector<Complex> rhs(n, Complex{0.0, 0.0});
  // Trace normalization replaces the first row.
  for (std::size_t col = 0; col < n; ++col)
    a[0][col] = (col / d == col % d) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  rhs[0] = 1.0;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    REQUIRE(std::abs(a[pivot][col]) > 1e-12);
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Complex f = a[r][col] / a[col][col];
      if (f == Complex{0.0, 0.0}) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  ComplexMatrix rho(d, d);
  for (std::size_t col = 0; col < n; ++col) rho(col / d, col % d) = rhs[col] / a[col][col];
  return rho;
}

double frobenius_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j) - b(i, j));
  return std::sqrt(s);
}

}  // namespace

TEST_CASE("dqd model structure") {
  const LindbladModel m = dynamics::dqd_model(4.0, 0.1, 1.0);
  CHECK(m.dim == 3);
  CHECK(std::abs(m.hamiltonian(1, 2) - 1.0) < 1e-15);
  CHECK(std::abs(m.hamiltonian(0, 0)) < 1e-15);
  REQUIRE(m.jumps.size() == 2);
  CHECK(m.jumps[0].rate == 4.0);
  CHECK(std::abs(m.jumps[0].op(1, 0) - 1.0) < 1e-15);  // loading |L><0|
  CHECK(m.jumps[1].rate == 0.1);
  CHECK(std::abs(m.jumps[1].op(0, 2) - 1.0) < 1e-15);  // unloading |0><R|

  CHECK_THROWS_AS(dynamics::dqd_model(-1.0, 0.1, 1.0), std::invalid_argument);
}

TEST_CASE("generator is traceless and Hermiticity-preserving") {
  const LindbladModel m = dynamics::dqd_model(4.0, 0.1, 1.0);
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 50; ++trial) {
    const DensityMatrix rho = testsupport::random_density(3, rng);
    const ComplexMatrix d = dynamics::lindblad_derivative(m, rho);
    CHECK(std::abs(d.trace()) < 1e-12);
    CHECK(d.hermiticity_defect() < 1e-12);
  }
}

TEST_CASE("generator vanishes on the null-space stationary state") {
  const LindbladModel m = dynamics::dqd_model(4.0, 0.1, 1.0);
  const ComplexMatrix rho_ss = stationary_state(m);
  CHECK(std::abs(rho_ss.trace() - Complex{1.0, 0.0}) < 1e-12);
  const ComplexMatrix d = dynamics::lindblad_derivative(m, rho_ss);
  CHECK(d.max_abs() < 1e-10);
}

TEST_CASE("empty dot loads toward |L> in the classical limit") {
  const LindbladModel m = dynamics::dqd_model(2.0, 0.0, 0.0);
  const DensityMatrix start = DensityMatrix::from_pure(qcore::PureState::basis(3, 0));
  const DensityMatrix late = dynamics::evolve(m, start, 8.0, 1e-3);
  CHECK(qcore::populations(late)[1] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("closed-system Rabi half period moves |L> to |R>") {
  const LindbladModel m = dynamics::dqd_model(0.0, 0.0, 1.0);
  const DensityMatrix start = DensityMatrix::from_pure(qcore::PureState::basis(3, 1));
  const DensityMatrix half = dynamics::evolve(m, start, std::numbers::pi / 2.0, 1e-4);
  CHECK(qcore::populations(half)[2] == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("evolve with t = 0 returns the initial state") {
  const LindbladModel m = dynamics::dqd_model(4.0, 0.1, 1.0);
  const DensityMatrix start = DensityMatrix::from_pure(qcore::PureState::basis(3, 1));
  CHECK(dynamics::evolve(m, start, 0.0, 1e-3).matrix().max_abs_diff(start.matrix()) == 0.0);
}

TEST_CASE("RK4 refinement shows fourth-order convergence") {
  const LindbladModel m = dynamics::dqd_model(4.0, 0.1, 1.0);
  const DensityMatrix start = DensityMatrix::from_pure(qcore::PureState::basis(3, 1));
  const ComplexMatrix ref = dynamics::evolve(m, start, 1.0, 0.02 / 16.0).matrix();
  const double e1 = frobenius_diff(dynamics::evolve(m, start, 1.0, 0.02).matrix(), ref);
  const double e2 = frobenius_diff(dynamics::evolve(m, start, 1.0, 0.01).matrix(), ref);
  const double order = std::log2(e1 / e2);
  CHECK(order > 3.8);
  CHECK(order < 4.6);
}

TEST_CASE("trace and positivity hold along trajectories") {
  const LindbladModel m = dynamics::dqd_model(4.0, 0.1, 1.0);
  for (const auto& start : dynamics::dqd_basis_initial_states()) {
    DensityMatrix rho = start;
    for (int step = 0; step < 12; ++step) {
      rho = dynamics::evolve(m, rho, 1.0, 1e-3);
      CHECK(std::abs(rho.trace_real() - 1.0) < 1e-8 * (step + 1));
      CHECK(rho.min_eigenvalue() > -1e-7);
    }
  }
}

TEST_CASE("temporal scenario with t = t0 yields a vanishing temporal kernel") {
  const LindbladModel m = dynamics::dqd_model(4.0, 0.1, 1.0);
  const auto scenario =
      dynamics::temporal_scenario(m, dynamics::dqd_basis_initial_states(), 1.0, 1.0, 1e-3);
  CHECK(capability::temporal_q(scenario.populations_t, scenario.diag_t0).q_value == 0.0);
}

TEST_CASE("coherence-free dynamics never certifies") {
  const LindbladModel classical = dynamics::dqd_model(4.0, 0.1, 0.0);
  for (double t0 : {0.2, 1.0, 3.0}) {
    for (double tau : {0.3, 1.5}) {
      const auto scenario = dynamics::temporal_scenario(
          classical, dynamics::dqd_basis_initial_states(), t0, t0 + tau, 1e-3);
      CHECK(capability::temporal_q(scenario.populations_t, scenario.diag_t0).q_value < 1e-6);
    }
  }
}

TEST_CASE("paper-parameter dynamics develops detectable coherence") {
  const LindbladModel m = dynamics::dqd_model(4.0, 0.1, 1.0);
  const auto scenario =
      dynamics::temporal_scenario(m, dynamics::dqd_basis_initial_states(), 0.5, 1.5, 1e-3);
  CHECK(capability::temporal_q(scenario.populations_t, scenario.diag_t0).q_value > 1e-3);
}

TEST_CASE("sweep grid validation") {
  CHECK_THROWS_AS(dynamics::SweepGrid::uniform(6.0, 13, 6.0, 13, 0.2), std::invalid_argument);
  dynamics::SweepGrid bad;
  bad.t0_values = {0.0, 1.0, 0.5};
  bad.tau_values = {0.0, 1.0};
  bad.dt = 1e-3;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("small sweep: zero tau row, classical zeros, quantum signal, thread invariance") {
  const auto grid = dynamics::SweepGrid::uniform(2.0, 9, 2.0, 9, 1e-3);
  const auto states = dynamics::dqd_basis_initial_states();

  const LindbladModel m = dynamics::dqd_model(4.0, 0.1, 1.0);
  const auto q = dynamics::qt_sweep(m, states, grid, 1);
  REQUIRE(q.size() == 9);
  REQUIRE(q[0].size() == 9);
  for (std::size_t i = 0; i < 9; ++i) CHECK(q[i][0] == 0.0);  // tau = 0 column
  double peak = 0.0;
  for (const auto& row : q)
    for (double v : row) peak = std::max(peak, v);
  CHECK(peak > 1e-3);

  const auto q4 = dynamics::qt_sweep(m, states, grid, 4);
  CHECK(q4 == q);

  const LindbladModel classical = dynamics::dqd_model(4.0, 0.1, 0.0);
  const auto qc = dynamics::qt_sweep(classical, states, grid, 2);
  for (const auto& row : qc)
    for (double v : row) CHECK(v < 1e-6);
}
