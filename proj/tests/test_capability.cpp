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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <doctest.h>

#include "qct/capability/kernel.hpp"
#include "qct/capability/triangle_q.hpp"
#include "qct/networks/one_qubit.hpp"
#include "qct/networks/two_qubit.hpp"
#include "support/random_states.hpp"

using namespace qct;
using capability::KernelResult;
using capability::PopulationTransferMatrix;
using networks::NetworkSize;
using networks::ScenarioData;
using networks::TwoQubitVariant;

namespace {

ScenarioData make_data(std::vector<std::vector<double>> diag,
                       std::vector<std::vector<double>> ckpt) {
  ScenarioData d;
  d.n = diag.size();
  d.d = diag.front().size();
  d.diag_populations = std::move(diag);
  d.checkpoint_populations = std::move(ckpt);
  d.metadata = "test";
  return d;
}

// The pinned instance whose kernel equals exactly 2: identical half/half
// weights cannot tell the two settings apart, while their checkpoint rows sit
// at opposite corners.
ScenarioData q2_instance() {
  return make_data({{0.5, 0.5}, {0.5, 0.5}}, {{1.0, 0.0}, {0.0, 1.0}});
}

ScenarioData random_scenario(std::size_t d, std::size_t n, std::mt19937_64& rng) {
  ScenarioData data;
  data.d = d;
  data.n = n;
  for (std::size_t k = 0; k < n; ++k) {
    data.diag_populations.push_back(testsupport::random_distribution(d, rng));
    data.checkpoint_populations.push_back(testsupport::random_distribution(d, rng));
  }
  data.metadata = "random";
  return data;
}

PopulationTransferMatrix random_stochastic(std::size_t d, std::mt19937_64& rng) {
  PopulationTransferMatrix t;
  t.d = d;
  t.t.assign(d * d, 0.0);
  for (std::size_t n = 0; n < d; ++n) {
    const auto col = testsupport::random_distribution(d, rng);
    for (std::size_t i = 0; i < d; ++i) t.at(i, n) = col[i];
  }
  return t;
}

}  // namespace

TEST_CASE("populations alone explain basis-state inputs") {
  // w_k = e_k, identical checkpoint rows: T columns equal to the row solve it.
  const ScenarioData data =
      make_data({{1.0, 0.0}, {0.0, 1.0}}, {{0.5, 0.5}, {0.5, 0.5}});
  const KernelResult r = capability::criterion_q(data);
  CHECK(r.solver_status == optimizer::SolveStatus::Optimal);
  CHECK(r.q_value == doctest::Approx(0.0).epsilon(1e-9));
  CHECK_FALSE(r.certifies_transfer());
}

TEST_CASE("the pinned instance evaluates to exactly 2") {
  const KernelResult r = capability::criterion_q(q2_instance());
  CHECK(r.q_value == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(r.certifies_transfer());

  // Independent check: exhaustive grid over 2x2 column-stochastic matrices.
  double grid_min = std::numeric_limits<double>::infinity();
  const ScenarioData data = q2_instance();
  for (int a = 0; a <= 50; ++a)
    for (int b = 0; b <= 50; ++b) {
      PopulationTransferMatrix t;
      t.d = 2;
      t.t = {a / 50.0, b / 50.0, 1.0 - a / 50.0, 1.0 - b / 50.0};
      grid_min = std::min(grid_min, capability::kernel_objective(data, t));
    }
  CHECK(grid_min == doctest::Approx(2.0));
}

TEST_CASE("a single setting never certifies") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const ScenarioData data = random_scenario(d, 1, rng);
    CHECK(capability::criterion_q(data).q_value < 1e-7);
  }
}

TEST_CASE("data produced by one stochastic map gives a vanishing kernel") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const std::size_t n = 1 + trial % d;
    const PopulationTransferMatrix t0 = random_stochastic(d, rng);
    ScenarioData data;
    data.d = d;
    data.n = n;
    for (std::size_t k = 0; k < n; ++k) {
      const auto w = testsupport::random_distribution(d, rng);
      std::vector<double> p(d, 0.0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t m = 0; m < d; ++m) p[i] += t0.at(i, m) * w[m];
      data.diag_populations.push_back(w);
      data.checkpoint_populations.push_back(p);
    }
    data.metadata = "stochastic-image";
    CHECK(capability::criterion_q(data).q_value < 1e-7);
  }
}

TEST_CASE("kernel is invariant under consistent basis relabeling") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const ScenarioData data = random_scenario(d, d, rng);
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);

    ScenarioData permuted = data;
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) {
        permuted.diag_populations[k][i] = data.diag_populations[k][perm[i]];
        permuted.checkpoint_populations[k][i] = data.checkpoint_populations[k][perm[i]];
      }
    const double q0 = capability::criterion_q(data).q_value;
    const double q1 = capability::criterion_q(permuted).q_value;
    CHECK(q0 == doctest::Approx(q1).epsilon(1e-8));
  }
}

TEST_CASE("minimizer is feasible and reproduces the kernel value") {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const ScenarioData data = random_scenario(d, d, rng);
    const KernelResult r = capability::criterion_q(data);
    REQUIRE(r.solver_status == optimizer::SolveStatus::Optimal);
    CHECK_NOTHROW(r.minimizer.validate());
    CHECK(capability::kernel_objective(data, r.minimizer) ==
          doctest::Approx(r.q_value).epsilon(1e-7));
  }
}

TEST_CASE("Monte-Carlo bound dominates the LP optimum") {
  std::mt19937_64 rng(65);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const std::size_t n = 1 + trial % d;
    const ScenarioData data = random_scenario(d, n, rng);
    const double lp = capability::criterion_q(data).q_value;
    const double bound = capability::sample_incapable_bound(data, 200, rng());
    CHECK(lp <= bound + 1e-7);
  }
}

TEST_CASE("Monte-Carlo bound is tight where the objective is flat or simple") {
  // Constant objective: every stochastic matrix scores exactly 2.
  CHECK(capability::sample_incapable_bound(q2_instance(), 1, 7) == doctest::Approx(2.0));

  // Reachable optimum: diagonal outputs under a dephasing-like instance.
  std::mt19937_64 rng(66);
  const PopulationTransferMatrix t0 = random_stochastic(2, rng);
  ScenarioData data;
  data.d = 2;
  data.n = 2;
  for (int k = 0; k < 2; ++k) {
    const auto w = testsupport::random_distribution(2, rng);
    std::vector<double> p(2, 0.0);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t m = 0; m < 2; ++m) p[i] += t0.at(i, m) * w[m];
    data.diag_populations.push_back(w);
    data.checkpoint_populations.push_back(p);
  }
  data.metadata = "reachable";
  CHECK(capability::criterion_q(data).q_value < 1e-9);
  CHECK(capability::sample_incapable_bound(data, 100000, 8) < 0.02);
}

TEST_CASE("explicit incapable Kraus channels never beat the LP") {
  // Channels K_m = sum_j c_mj |pi_m(j)><j| keep diagonal states diagonal;
  // their population action is column-stochastic. The LP minimizes over that
  // whole set, so no sampled channel may undercut it.
  std::mt19937_64 rng(67);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  std::uniform_int_distribution<int> flip(0, 1);
  for (int trial = 0; trial < 50; ++trial) {
    const ScenarioData data = random_scenario(2, 2, rng);
    const double lp = capability::criterion_q(data).q_value;
    for (int channel = 0; channel < 20; ++channel) {
      // Each branch applies either the identity or the swap permutation.
      const bool swap1 = flip(rng) == 1;
      const bool swap2 = flip(rng) == 1;
      const std::array<std::array<std::size_t, 2>, 2> perms{
          std::array<std::size_t, 2>{swap1 ? 1u : 0u, swap1 ? 0u : 1u},
          std::array<std::size_t, 2>{swap2 ? 1u : 0u, swap2 ? 0u : 1u}};
      // Amplitudes with |a_j|^2 + |b_j|^2 = 1 and random phases.
      std::array<double, 2> weight{uni(rng), uni(rng)};

      qcore::ComplexMatrix k1(2, 2), k2(2, 2);
      for (std::size_t j = 0; j < 2; ++j) {
        const double phase1 = 2.0 * std::numbers::pi * uni(rng);
        const double phase2 = 2.0 * std::numbers::pi * uni(rng);
        k1(perms[0][j], j) = std::sqrt(weight[j]) *
                             qcore::Complex{std::cos(phase1), std::sin(phase1)};
        k2(perms[1][j], j) = std::sqrt(1.0 - weight[j]) *
                             qcore::Complex{std::cos(phase2), std::sin(phase2)};
      }
      // Trace preservation.
      const qcore::ComplexMatrix tp = k1.adjoint() * k1 + k2.adjoint() * k2;
      REQUIRE(tp.max_abs_diff(qcore::ComplexMatrix::identity(2)) < 1e-12);

      // Diagonal inputs stay diagonal, and the induced transfer matrix is
      // column-stochastic.
      PopulationTransferMatrix induced;
      induced.d = 2;
      induced.t.assign(4, 0.0);
      for (std::size_t j = 0; j < 2; ++j) {
        qcore::ComplexMatrix basis(2, 2);
        basis(j, j) = 1.0;
        const qcore::ComplexMatrix out =
            k1 * basis * k1.adjoint() + k2 * basis * k2.adjoint();
        CHECK(std::abs(out(0, 1)) < 1e-12);
        for (std::size_t i = 0; i < 2; ++i) induced.at(i, j) = out(i, i).real();
      }
      CHECK_NOTHROW(induced.validate());
      CHECK(capability::kernel_objective(data, induced) >= lp - 1e-9);
    }
  }
}

TEST_CASE("network scenarios: incapable checkpoint or control variant kill the kernel") {
  const std::vector<double> ideal2{1.0, 1.0};
  // Diagonal checkpoint (setting 3).
  CHECK(capability::criterion_q(networks::run_one_qubit(NetworkSize::N4, 1, 3, ideal2)).q_value <
        1e-7);
  // Diagonal inputs (rsp 3).
  CHECK(capability::criterion_q(networks::run_one_qubit(NetworkSize::N4, 3, 1, ideal2)).q_value <
        1e-7);
  // Control variant with a capable checkpoint.
  CHECK(capability::criterion_q(
            networks::run_two_qubit(NetworkSize::N4, TwoQubitVariant::Control, 1, ideal2))
            .q_value < 1e-7);
}

TEST_CASE("ideal capable scenarios certify") {
  const std::vector<double> ideal2{1.0, 1.0};
  const double q1 =
      capability::criterion_q(networks::run_one_qubit(NetworkSize::N4, 1, 1, ideal2)).q_value;
  CHECK(q1 == doctest::Approx(2.0).epsilon(1e-9));
  const double q2 = capability::criterion_q(
                        networks::run_two_qubit(NetworkSize::N4, TwoQubitVariant::Capable, 1,
                                                ideal2))
                        .q_value;
  CHECK(q2 > 0.5);
}

TEST_CASE("temporal kernel vanishes for identical or stochastically related data") {
  std::mt19937_64 rng(68);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 2 + trial % 3;
    std::vector<std::vector<double>> diag;
    for (std::size_t k = 0; k < d; ++k) diag.push_back(testsupport::random_distribution(d, rng));
    CHECK(capability::temporal_q(diag, diag).q_value < 1e-9);

    const PopulationTransferMatrix t0 = random_stochastic(d, rng);
    std::vector<std::vector<double>> mapped;
    for (const auto& w : diag) {
      std::vector<double> p(d, 0.0);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t m = 0; m < d; ++m) p[i] += t0.at(i, m) * w[m];
      mapped.push_back(p);
    }
    CHECK(capability::temporal_q(mapped, diag).q_value < 1e-7);
  }
}

TEST_CASE("triangle kernel vanishes on classically reachable targets") {
  // A product distribution is hit by gamma = 1 with matching marginals.
  networks::TriangularClassicalModel product;
  product.gamma = 1.0;
  product.p = {0.3, 0.6, 0.7};
  const auto target = networks::triangle_classical_distribution(product);
  CHECK(capability::triangle_q(target, 50, 5).q_value < 1e-6);

  const std::vector<double> uniform(8, 0.125);
  CHECK(capability::triangle_q(uniform, 50, 5).q_value < 1e-6);
}

TEST_CASE("triangle kernel is positive and stable on the even-parity target") {
  const auto p_q = networks::triangle_quantum_distribution();
  const auto r = capability::triangle_q(p_q, 200, 1);
  CHECK(r.q_value > capability::kCertificationThreshold);
  CHECK(r.q_value <= 1.0 + 1e-9);

  const auto r2 = capability::triangle_q(p_q, 200, 99);
  CHECK(std::abs(r.q_value - r2.q_value) < 1e-3);

  // The uniform classical model witnesses the upper bound of 1.
  networks::TriangularClassicalModel uniform_model;
  uniform_model.gamma = 1.0;
  double witness = 0.0;
  const auto ucl = networks::triangle_classical_distribution(uniform_model);
  for (int i = 0; i < 8; ++i) witness += std::abs(p_q[i] - ucl[i]);
  CHECK(witness == doctest::Approx(1.0));
}

TEST_CASE("triangle kernel rejects malformed distributions") {
  CHECK_THROWS_AS(capability::triangle_q(std::vector<double>(7, 0.125), 10, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(capability::triangle_q(std::vector<double>(8, 0.2), 10, 1),
                  std::invalid_argument);
}
