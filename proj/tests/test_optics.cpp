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

#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "qct/optics/elements.hpp"
#include "qct/optics/fusion.hpp"
#include "qct/optics/states.hpp"
#include "qct/optics/witness.hpp"
#include "qct/qcore/ops.hpp"

using namespace qct;
using optics::BellLabel;
using qcore::Complex;
using qcore::ComplexMatrix;
using qcore::DensityMatrix;
using qcore::PureState;

namespace {

bool unitary_to(const ComplexMatrix& u, double tol) {
  return (u.adjoint() * u).max_abs_diff(ComplexMatrix::identity(u.rows())) < tol;
}

std::vector<double> populations_after(const ComplexMatrix& op, const PureState& in) {
  return qcore::populations(qcore::apply_operator(op, DensityMatrix::from_pure(in)));
}

}  // namespace

TEST_CASE("half-wave plate fixed points and flips") {
  // 0 degrees: Z up to a global phase.
  const ComplexMatrix h0 = optics::hwp(0.0);
  CHECK(std::abs(h0(0, 0) - 1.0) < 1e-15);
  CHECK(std::abs(h0(1, 1) + 1.0) < 1e-15);

  // 22.5 degrees sends |H> to |+>.
  const auto p225 = populations_after(optics::hwp(22.5), PureState::basis(2, 0));
  CHECK(p225[0] == doctest::Approx(0.5));
  CHECK(p225[1] == doctest::Approx(0.5));
  const ComplexMatrix h225 = optics::hwp(22.5);
  CHECK(std::abs(h225(0, 0) - h225(1, 0)) < 1e-12);  // equal, in phase

  // 45 degrees swaps |H| and |V>.
  const auto p45 = populations_after(optics::hwp(45.0), PureState::basis(2, 0));
  CHECK(p45[1] == doctest::Approx(1.0));
}

TEST_CASE("hwp squares to identity up to phase and stays Hermitian") {
  for (double t : {0.0, 10.0, 22.5, 30.0, 45.0, 77.0, 145.0}) {
    const ComplexMatrix h = optics::hwp(t);
    CHECK(h.hermiticity_defect() < 1e-12);
    CHECK((h * h).max_abs_diff(ComplexMatrix::identity(2)) < 1e-12);
  }
}

TEST_CASE("quarter-wave plate at 0 degrees is diagonal") {
  const ComplexMatrix q0 = optics::qwp(0.0);
  CHECK(std::abs(q0(0, 1)) < 1e-15);
  CHECK(std::abs(q0(1, 0)) < 1e-15);
  // diag(1, i) up to the global e^{-i pi/4}.
  CHECK(std::abs(q0(1, 1) / q0(0, 0) - Complex{0.0, 1.0}) < 1e-12);
}

TEST_CASE("quarter-wave plate populations from Jones calculus") {
  const auto p45 = populations_after(optics::qwp(45.0), PureState::basis(2, 0));
  CHECK(p45[0] == doctest::Approx(0.5));
  CHECK(p45[1] == doctest::Approx(0.5));

  // |<V| QWP(30) |H>|^2 = |sin30 cos30 (1-i)|^2 = 2 (1/2)^2 (3/4) = 3/8.
  const double expect_v = std::norm((1.0 - Complex{0.0, 1.0}) * std::sin(std::numbers::pi / 6.0) *
                                    std::cos(std::numbers::pi / 6.0));
  CHECK(expect_v == doctest::Approx(0.375));
  const auto p30 = populations_after(optics::qwp(30.0), PureState::basis(2, 0));
  CHECK(p30[1] == doctest::Approx(expect_v));
  CHECK(p30[0] == doctest::Approx(1.0 - expect_v));
}

TEST_CASE("waveplates are unitary and qwp^4 is a phase") {
  for (double t : {0.0, 14.0, 30.0, 45.0, 60.0, 120.0}) {
    CHECK(unitary_to(optics::hwp(t), 1e-12));
    CHECK(unitary_to(optics::qwp(t), 1e-12));
    const ComplexMatrix q = optics::qwp(t);
    const ComplexMatrix q4 = q * q * q * q;
    // Proportional to identity.
    CHECK(std::abs(q4(0, 1)) < 1e-12);
    CHECK(std::abs(q4(1, 0)) < 1e-12);
    CHECK(std::abs(q4(0, 0) - q4(1, 1)) < 1e-12);
  }
}

TEST_CASE("checkpoint settings span no/intermediate/maximum coherence creation") {
  // Setting 3 (qwp 0, hwp 0) is diagonal: populations of any diagonal state
  // are untouched.
  const ComplexMatrix u3 = optics::checkpoint_unitary(optics::analyzer_setting(3));
  CHECK(std::abs(u3(0, 1)) < 1e-15);
  CHECK(std::abs(u3(1, 0)) < 1e-15);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    const double p = uni(rng);
    const DensityMatrix diag(ComplexMatrix{{p, 0.0}, {0.0, 1.0 - p}});
    const auto before = qcore::populations(diag);
    const auto after = qcore::populations(qcore::apply_operator(u3, diag));
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(after[i] == doctest::Approx(before[i]).epsilon(1e-14));
  }

  // Setting 1 (qwp 45) takes |H> to an equal-weight superposition.
  const ComplexMatrix u1 = optics::checkpoint_unitary(optics::analyzer_setting(1));
  const auto p1 = populations_after(u1, PureState::basis(2, 0));
  CHECK(p1[0] == doctest::Approx(0.5));

  // Setting 2 (qwp 30) sits strictly between.
  const ComplexMatrix u2 = optics::checkpoint_unitary(optics::analyzer_setting(2));
  const auto p2 = populations_after(u2, PureState::basis(2, 0));
  CHECK(p2[1] > 0.05);
  CHECK(p2[1] < 0.45);

  CHECK_THROWS_AS(optics::analyzer_setting(0), std::invalid_argument);
  CHECK_THROWS_AS(optics::analyzer_setting(4), std::invalid_argument);
}

TEST_CASE("two-qubit checkpoint is the kron square of the single-qubit one") {
  const ComplexMatrix u = optics::checkpoint_unitary(optics::analyzer_setting(2));
  const ComplexMatrix uu = kron(u, u);
  CHECK(unitary_to(uu, 1e-12));
}

TEST_CASE("polarizers are rank-1 projectors") {
  for (double t : {0.0, 30.0, 90.0, 120.0}) {
    const ComplexMatrix p = optics::polarizer(t);
    CHECK((p * p).max_abs_diff(p) < 1e-12);
    CHECK(std::abs(p.trace() - Complex{1.0, 0.0}) < 1e-12);
  }
  CHECK(optics::polarizer(0.0).max_abs_diff(ComplexMatrix{{1.0, 0.0}, {0.0, 0.0}}) < 1e-15);
  CHECK(optics::polarizer(90.0).max_abs_diff(ComplexMatrix{{0.0, 0.0}, {0.0, 1.0}}) < 1e-12);
}

TEST_CASE("crossed polarizers project the singlet onto |HV> with probability 1/2") {
  const ComplexMatrix pol = kron(optics::polarizer(0.0), optics::polarizer(90.0));
  const DensityMatrix projected = qcore::apply_operator(
      pol, DensityMatrix::from_pure(optics::bell_state(BellLabel::PsiMinus)));
  CHECK(projected.trace_real() == doctest::Approx(0.5));
  CHECK(std::abs(projected.matrix()(1, 1) - 0.5) < 1e-12);
}

TEST_CASE("bell states are the standard ones and orthonormal") {
  const PureState psim = optics::bell_state(BellLabel::PsiMinus);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(psim.amplitude(1) - r) < 1e-15);
  CHECK(std::abs(psim.amplitude(2) + r) < 1e-15);

  const auto pops = qcore::populations(DensityMatrix::from_pure(optics::bell_state(BellLabel::PhiPlus)));
  CHECK(pops[0] == doctest::Approx(0.5));
  CHECK(pops[3] == doctest::Approx(0.5));

  const ComplexMatrix xx{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}};
  CHECK(qcore::expectation(DensityMatrix::from_pure(optics::bell_state(BellLabel::PhiPlus)), xx) ==
        doctest::Approx(1.0));

  const std::array<BellLabel, 4> labels{BellLabel::PsiPlus, BellLabel::PsiMinus,
                                        BellLabel::PhiPlus, BellLabel::PhiMinus};
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      Complex overlap = 0.0;
      const PureState sa = optics::bell_state(labels[a]);
      const PureState sb = optics::bell_state(labels[b]);
      for (std::size_t i = 0; i < 4; ++i)
        overlap += std::conj(sa.amplitude(i)) * sb.amplitude(i);
      CHECK(std::abs(overlap - (a == b ? 1.0 : 0.0)) < 1e-12);
    }
}

TEST_CASE("ghz states live on their two patterns") {
  const PureState g4 = optics::ghz_state(4, "HVHV", "VHVH");
  const auto p4 = qcore::populations(DensityMatrix::from_pure(g4));
  CHECK(p4[optics::pattern_index("HVHV")] == doctest::Approx(0.5));
  CHECK(p4[optics::pattern_index("VHVH")] == doctest::Approx(0.5));

  const PureState g6 = optics::ghz_state(6, optics::kGhz6Pattern, optics::kGhz6Complement);
  const auto p6 = qcore::populations(DensityMatrix::from_pure(g6));
  double on_pattern = p6[optics::pattern_index(optics::kGhz6Pattern)] +
                      p6[optics::pattern_index(optics::kGhz6Complement)];
  CHECK(on_pattern == doctest::Approx(1.0));
  CHECK(qcore::fidelity_pure(DensityMatrix::from_pure(g6), g6) == doctest::Approx(1.0));

  CHECK_THROWS_AS(optics::ghz_state(4, "HVHV", "VHVV"), std::invalid_argument);
  CHECK_THROWS_AS(optics::ghz_state(7, "HVHVHVH", "VHVHVHV"), std::invalid_argument);
  CHECK_THROWS_AS(optics::ghz_state(4, "HXHV", "VHVH"), std::invalid_argument);
}

TEST_CASE("noisy pair interpolates between the singlet and white noise") {
  const PureState target = optics::bell_state(BellLabel::PsiMinus);
  CHECK(optics::noisy_pair(1.0).matrix().max_abs_diff(
            DensityMatrix::from_pure(target).matrix()) < 1e-15);
  CHECK(optics::noisy_pair(0.0).matrix().max_abs_diff(
            DensityMatrix::maximally_mixed(4).matrix()) < 1e-15);

  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const double v = uni(rng);
    CHECK(qcore::fidelity_pure(optics::noisy_pair(v), target) ==
          doctest::Approx(v + (1.0 - v) / 4.0));
  }

  // Visibility matching a 93.03% pair fidelity.
  const double v = (4.0 * 0.9303 - 1.0) / 3.0;
  CHECK(qcore::fidelity_pure(optics::noisy_pair(v), target) == doctest::Approx(0.9303));

  CHECK_THROWS_AS(optics::noisy_pair(1.5), std::invalid_argument);
}

TEST_CASE("fusion operator keeps HH and VV only") {
  const ComplexMatrix m = optics::fusion_operator();
  std::vector<Complex> hh{1, 0, 0, 0}, hv{0, 1, 0, 0};
  CHECK(std::abs((m * hh)[0] - 1.0) < 1e-15);
  Complex hv_norm = 0.0;
  for (const auto& a : m * hv) hv_norm += std::norm(a);
  CHECK(std::abs(hv_norm) < 1e-15);

  const PureState phip = optics::bell_state(BellLabel::PhiPlus);
  const auto out = m * phip.amplitudes();
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < 4; ++i) overlap += std::conj(phip.amplitude(i)) * out[i];
  CHECK(std::abs(overlap - 1.0) < 1e-15);

  ComplexMatrix expect(4, 4);
  expect(0, 0) = 1.0;
  expect(3, 3) = 1.0;
  CHECK((m.adjoint() * m).max_abs_diff(expect) < 1e-15);
}

TEST_CASE("fusion equals the phi-family projector sum") {
  ComplexMatrix sum(4, 4);
  for (auto label : {BellLabel::PhiPlus, BellLabel::PhiMinus}) {
    const PureState b = optics::bell_state(label);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        sum(i, j) += b.amplitude(i) * std::conj(b.amplitude(j));
  }
  CHECK(sum.max_abs_diff(optics::fusion_operator()) < 1e-12);
}

TEST_CASE("psi-family PBS operator is the X-sandwiched fusion") {
  ComplexMatrix sum(4, 4);
  for (auto label : {BellLabel::PsiPlus, BellLabel::PsiMinus}) {
    const PureState b = optics::bell_state(label);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        sum(i, j) += b.amplitude(i) * std::conj(b.amplitude(j));
  }
  CHECK(sum.max_abs_diff(optics::bsm_pbs_operator(optics::BsmFamily::Psi)) < 1e-12);
}

TEST_CASE("bsm detection patterns herald the right Bell states") {
  using optics::BsmFamily;
  using optics::BsmOutcome;

  // ++ detection after the phi-family PBS fires with probability 1/2 on phi+.
  const ComplexMatrix route =
      optics::x_pattern_projector(false, false) * optics::bsm_pbs_operator(BsmFamily::Phi);
  const DensityMatrix phip = DensityMatrix::from_pure(optics::bell_state(BellLabel::PhiPlus));
  CHECK(qcore::apply_operator(route, phip).trace_real() == doctest::Approx(0.5));

  // psi+ never passes the phi-family configuration.
  const DensityMatrix psip = DensityMatrix::from_pure(optics::bell_state(BellLabel::PsiPlus));
  for (bool first : {false, true})
    for (bool second : {false, true}) {
      const ComplexMatrix r =
          optics::x_pattern_projector(first, second) * optics::bsm_pbs_operator(BsmFamily::Phi);
      CHECK(qcore::apply_operator(r, psip).trace_real() == doctest::Approx(0.0));
    }

  // The +- outcome of the psi family projects onto psi-.
  const ComplexMatrix expected =
      optics::bsm_operator({BsmFamily::Psi, BsmOutcome::Minus});
  const PureState psim = optics::bell_state(BellLabel::PsiMinus);
  ComplexMatrix projector(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      projector(i, j) = psim.amplitude(i) * std::conj(psim.amplitude(j));
  CHECK(expected.max_abs_diff(projector) < 1e-15);

  // Pattern-level cross-check: +- and -+ within the psi family both keep
  // exactly the psi- component, at half weight each.
  for (bool flip : {false, true}) {
    const ComplexMatrix r = optics::x_pattern_projector(!flip, flip) *
                            optics::bsm_pbs_operator(BsmFamily::Psi);
    CHECK(qcore::apply_operator(r, DensityMatrix::from_pure(psim)).trace_real() ==
          doctest::Approx(0.5));
    CHECK(qcore::apply_operator(r, psip).trace_real() == doctest::Approx(0.0));
  }
}

TEST_CASE("pair fidelity from correlations") {
  CHECK(optics::pair_fidelity_from_correlations(-1.0, -1.0, -1.0) == 1.0);
  CHECK(optics::pair_fidelity_from_correlations(0.0, 0.0, 0.0) == doctest::Approx(0.25));
  CHECK(optics::pair_fidelity_from_correlations(-0.9, -0.9, -0.9) == doctest::Approx(0.925));
  CHECK_THROWS_AS(optics::pair_fidelity_from_correlations(-1.2, 0.0, 0.0),
                  std::invalid_argument);
}

TEST_CASE("ghz6 witness floor, mixed-state value and noisy interpolation") {
  const PureState g6 = optics::ghz_state(6, optics::kGhz6Pattern, optics::kGhz6Complement);
  const DensityMatrix rho = DensityMatrix::from_pure(g6);
  ComplexMatrix x6{{0.0, 1.0}, {1.0, 0.0}};
  ComplexMatrix x = x6;
  for (int i = 1; i < 6; ++i) x6 = kron(x6, x);
  const double x_expect = qcore::expectation(rho, x6);
  CHECK(optics::ghz6_witness(x_expect, qcore::populations(rho)) == doctest::Approx(-1.0));

  std::vector<double> uniform(64, 1.0 / 64.0);
  CHECK(optics::ghz6_witness(0.0, uniform) == doctest::Approx(1.9375));

  // 90/10 mixture with white noise still certifies entanglement.
  const double v = 0.9;
  std::vector<double> pops(64, (1.0 - v) / 64.0);
  pops[optics::pattern_index(optics::kGhz6Pattern)] += v * 0.5;
  pops[optics::pattern_index(optics::kGhz6Complement)] += v * 0.5;
  const double w = optics::ghz6_witness(v * x_expect, pops);
  CHECK(w < 0.0);

  // The literal two-observable reading agrees on the ideal state only.
  CHECK(optics::ghz6_witness_from_xz(1.0, 1.0) == doctest::Approx(-1.0));
  CHECK(optics::ghz6_witness_from_xz(0.0, 0.0) == doctest::Approx(1.0));

  CHECK_THROWS_AS(optics::ghz6_witness(0.5, std::vector<double>(8, 0.125)),
                  std::invalid_argument);
}
