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

#include "qct/networks/two_qubit.hpp"

#include <stdexcept>

#include "qct/optics/elements.hpp"
#include "qct/optics/states.hpp"

namespace qct::networks {

using optics::BellLabel;
using qcore::ComplexMatrix;
using qcore::DensityMatrix;

optics::BellLabel two_qubit_input_label(int k) {
  switch (k) {
    case 1: return BellLabel::PsiPlus;
    case 2: return BellLabel::PsiMinus;
    case 3: return BellLabel::PhiPlus;
    case 4: return BellLabel::PhiMinus;
    default: throw std::invalid_argument("two_qubit_input_label: k must be 1..4");
  }
}

namespace {

void check_visibilities(NetworkSize size, const std::vector<double>& vis) {
  if (vis.size() != pairs_used(size))
    throw std::invalid_argument("pair_visibilities: expected one entry per pair (2 for N4, 3 for N6)");
  for (double v : vis)
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("pair_visibilities: entries must lie in [0, 1]");
}

optics::BsmConfig bsm_config_for(BellLabel label) {
  switch (label) {
    case BellLabel::PsiPlus: return {optics::BsmFamily::Psi, optics::BsmOutcome::Plus};
    case BellLabel::PsiMinus: return {optics::BsmFamily::Psi, optics::BsmOutcome::Minus};
    case BellLabel::PhiPlus: return {optics::BsmFamily::Phi, optics::BsmOutcome::Plus};
    case BellLabel::PhiMinus: return {optics::BsmFamily::Phi, optics::BsmOutcome::Minus};
  }
  throw std::invalid_argument("bsm_config_for: bad label");
}

// Polarizer angles projecting the swapped Bell state onto one of its basis
// components: k = 1..4 -> |VH>, |HV>, |HH>, |VV> (the paper's psi- example
// uses 0/90 degrees, i.e. |HV>).
std::pair<double, double> control_polarizer_angles(int k) {
  switch (k) {
    case 1: return {90.0, 0.0};
    case 2: return {0.0, 90.0};
    case 3: return {0.0, 0.0};
    case 4: return {90.0, 90.0};
    default: throw std::invalid_argument("control_polarizer_angles: k must be 1..4");
  }
}

}  // namespace

TwoQubitSetting two_qubit_setting(NetworkSize size, TwoQubitVariant variant, int k,
                                  const std::vector<double>& pair_visibilities) {
  check_visibilities(size, pair_visibilities);
  const BellLabel label = two_qubit_input_label(k);
  const std::size_t nq = size == NetworkSize::N4 ? 4 : 6;

  ComplexMatrix state = optics::noisy_pair(pair_visibilities[0]).matrix();
  for (std::size_t p = 1; p < pairs_used(size); ++p)
    state = kron(state, optics::noisy_pair(pair_visibilities[p]).matrix());
  DensityMatrix rho(std::move(state));

  std::vector<std::size_t> output_qubits;
  if (size == NetworkSize::N4) {
    // Input BSM on photons (1,3); outputs are photons (2,4).
    const ComplexMatrix bsm =
        qcore::embed_qubit_op(optics::bsm_operator(bsm_config_for(label)), {0, 2}, nq);
    rho = qcore::apply_operator(bsm, rho);
    output_qubits = {1, 3};
  } else {
    // Input BSM on photons (5,2); the assisting BSM on photons (1,3) is the
    // psi- projection, the configuration whose waveplate bookkeeping leaves
    // the swapped pair (6,4) carrying the input label.
    const ComplexMatrix input_bsm =
        qcore::embed_qubit_op(optics::bsm_operator(bsm_config_for(label)), {4, 1}, nq);
    const ComplexMatrix assist_bsm = qcore::embed_qubit_op(
        optics::bsm_operator({optics::BsmFamily::Psi, optics::BsmOutcome::Minus}), {0, 2}, nq);
    rho = qcore::apply_operator(assist_bsm * input_bsm, rho);
    output_qubits = {5, 3};
  }

  std::vector<std::size_t> dims(nq, 2);
  DensityMatrix out = qcore::partial_trace(rho, dims, output_qubits);

  if (variant == TwoQubitVariant::Control) {
    const auto [theta_first, theta_second] = control_polarizer_angles(k);
    const ComplexMatrix pol =
        kron(optics::polarizer(theta_first), optics::polarizer(theta_second));
    out = qcore::apply_operator(pol, out);
  }

  const double prob = out.trace_real();
  return {out.normalized(), prob};
}

ScenarioData run_two_qubit(NetworkSize size, TwoQubitVariant variant, int checkpoint_setting,
                           const std::vector<double>& pair_visibilities) {
  const ComplexMatrix single =
      optics::checkpoint_unitary(optics::analyzer_setting(checkpoint_setting));
  const ComplexMatrix ckpt = kron(single, single);
  ScenarioData data;
  data.d = 4;
  data.n = 4;
  data.metadata = std::string("two-qubit N") + (size == NetworkSize::N4 ? "4" : "6") +
                  (variant == TwoQubitVariant::Capable ? " capable" : " control") +
                  " checkpoint=" + std::to_string(checkpoint_setting);
  for (int k = 1; k <= 4; ++k) {
    const TwoQubitSetting s = two_qubit_setting(size, variant, k, pair_visibilities);
    data.diag_populations.push_back(qcore::populations(s.rho_out));
    data.checkpoint_populations.push_back(
        qcore::populations(qcore::apply_operator(ckpt, s.rho_out)));
  }
  data.validate();
  return data;
}

}  // namespace qct::networks
