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

#include "qct/networks/one_qubit.hpp"

#include <stdexcept>

#include "qct/optics/elements.hpp"
#include "qct/optics/fusion.hpp"
#include "qct/optics/states.hpp"

namespace qct::networks {

using qcore::Complex;
using qcore::ComplexMatrix;
using qcore::DensityMatrix;
using qcore::PureState;

void ScenarioData::validate() const {
  if (d < 2) throw std::invalid_argument("ScenarioData: d must be >= 2");
  if (n < 1) throw std::invalid_argument("ScenarioData: n must be >= 1");
  auto check_table = [&](const std::vector<std::vector<double>>& table, const char* name) {
    if (table.size() != n)
      throw std::invalid_argument(std::string("ScenarioData: ") + name + " has wrong row count");
    for (const auto& row : table) {
      if (row.size() != d)
        throw std::invalid_argument(std::string("ScenarioData: ") + name + " row length != d");
      double sum = 0.0;
      for (double v : row) {
        if (v < 0.0) throw std::invalid_argument(std::string("ScenarioData: ") + name +
                                                 " has a negative entry");
        sum += v;
      }
      if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument(std::string("ScenarioData: ") + name +
                                    " row does not sum to 1");
    }
  };
  check_table(diag_populations, "diag_populations");
  check_table(checkpoint_populations, "checkpoint_populations");
}

std::size_t pairs_used(NetworkSize size) { return size == NetworkSize::N4 ? 2 : 3; }

namespace {

void check_visibilities(NetworkSize size, const std::vector<double>& vis) {
  if (vis.size() != pairs_used(size))
    throw std::invalid_argument("pair_visibilities: expected one entry per pair (2 for N4, 3 for N6)");
  for (double v : vis)
    if (!(v >= 0.0 && v <= 1.0))
      throw std::invalid_argument("pair_visibilities: entries must lie in [0, 1]");
}

ComplexMatrix projector_onto(std::size_t dim, std::size_t index) {
  ComplexMatrix p(dim, dim);
  p(index, index) = 1.0;
  return p;
}

// Fuse photons (a, b) of an n-qubit register and detect them in the X basis.
DensityMatrix fuse_and_detect(const DensityMatrix& state, std::size_t a, std::size_t b,
                              std::size_t n_qubits, FusionBranch branch) {
  const ComplexMatrix fusion =
      qcore::embed_qubit_op(optics::fusion_operator(), {a, b}, n_qubits);
  const ComplexMatrix pattern = qcore::embed_qubit_op(
      optics::x_pattern_projector(false, branch == FusionBranch::PlusMinus), {a, b}, n_qubits);
  return qcore::apply_operator(pattern * fusion, state);
}

}  // namespace

TransferResult fusion_transfer(const qcore::DensityMatrix& rho_in, FusionBranch branch) {
  if (rho_in.dim() != 2) throw std::invalid_argument("fusion_transfer: input must be one qubit");
  // Register (input photon, resource photon a, resource photon b).
  const DensityMatrix pair = DensityMatrix::from_pure(optics::bell_state(optics::BellLabel::PsiMinus));
  DensityMatrix joint(kron(rho_in.matrix(), pair.matrix()), rho_in.subnormalized());
  joint = fuse_and_detect(joint, 0, 1, 3, branch);
  const double prob = joint.trace_real();
  DensityMatrix reduced = qcore::partial_trace(joint, {2, 2, 2}, {2});
  return {reduced.normalized(), prob};
}

OneQubitSetting one_qubit_setting(NetworkSize size, int rsp_setting, int k,
                                  const std::vector<double>& pair_visibilities,
                                  FusionBranch branch) {
  if (k != 0 && k != 1) throw std::invalid_argument("one_qubit_setting: k must be 0 or 1");
  check_visibilities(size, pair_visibilities);
  // The waveplate chain at the input node implements U^dag; the prepared
  // states are rho_in,k = U|k><k|U^dag.
  const ComplexMatrix u_dag = optics::checkpoint_unitary(optics::analyzer_setting(rsp_setting));

  const std::size_t nq = size == NetworkSize::N4 ? 4 : 6;
  // Photons 1..N map to qubits 0..N-1; pairs are (1,2), (3,4), (5,6).
  ComplexMatrix state = optics::noisy_pair(pair_visibilities[0]).matrix();
  for (std::size_t p = 1; p < pairs_used(size); ++p)
    state = kron(state, optics::noisy_pair(pair_visibilities[p]).matrix());
  DensityMatrix rho(std::move(state));

  // Alice holds photon 2 (N4) or photon 6 (N6); she applies U^dag and
  // Z-measures. Outcome 1-k leaves the partner photon in U|k> for the ideal
  // pair.
  const std::size_t alice = size == NetworkSize::N4 ? 1 : 5;
  const ComplexMatrix rsp_op =
      projector_onto(2, static_cast<std::size_t>(1 - k)) * u_dag;
  rho = qcore::apply_operator(qcore::embed_qubit_op(rsp_op, {alice}, nq), rho);

  if (size == NetworkSize::N4) {
    rho = fuse_and_detect(rho, 0, 2, nq, branch);  // photons (1,3)
  } else {
    rho = fuse_and_detect(rho, 4, 1, nq, branch);  // photons (5,2)
    rho = fuse_and_detect(rho, 0, 2, nq, branch);  // photons (1,3)
  }

  const double prob = rho.trace_real();
  std::vector<std::size_t> dims(nq, 2);
  DensityMatrix out = qcore::partial_trace(rho, dims, {3});  // photon 4
  return {out.normalized(), prob};
}

ScenarioData run_one_qubit(NetworkSize size, int rsp_setting, int checkpoint_setting,
                           const std::vector<double>& pair_visibilities, FusionBranch branch) {
  const ComplexMatrix ckpt =
      optics::checkpoint_unitary(optics::analyzer_setting(checkpoint_setting));
  ScenarioData data;
  data.d = 2;
  data.n = 2;
  data.metadata = std::string("one-qubit N") + (size == NetworkSize::N4 ? "4" : "6") +
                  " rsp=" + std::to_string(rsp_setting) +
                  " checkpoint=" + std::to_string(checkpoint_setting);
  for (int k = 0; k < 2; ++k) {
    const OneQubitSetting s = one_qubit_setting(size, rsp_setting, k, pair_visibilities, branch);
    data.diag_populations.push_back(qcore::populations(s.rho_out));
    data.checkpoint_populations.push_back(
        qcore::populations(qcore::apply_operator(ckpt, s.rho_out)));
  }
  data.validate();
  return data;
}

DensityMatrix ghz_backbone(NetworkSize size, const std::vector<double>& pair_visibilities) {
  check_visibilities(size, pair_visibilities);
  const std::size_t nq = size == NetworkSize::N4 ? 4 : 6;
  ComplexMatrix state = optics::noisy_pair(pair_visibilities[0]).matrix();
  for (std::size_t p = 1; p < pairs_used(size); ++p)
    state = kron(state, optics::noisy_pair(pair_visibilities[p]).matrix());
  DensityMatrix rho(std::move(state));

  const ComplexMatrix fusion13 =
      qcore::embed_qubit_op(optics::fusion_operator(), {0, 2}, nq);
  rho = qcore::apply_operator(fusion13, rho);
  if (size == NetworkSize::N6) {
    const ComplexMatrix fusion25 =
        qcore::embed_qubit_op(optics::fusion_operator(), {1, 4}, nq);
    rho = qcore::apply_operator(fusion25, rho);
    // Recorded convention: pi phase on |H> of photon 6 aligns the relative
    // sign between the two fusion units (the experiment's trim QWP).
    const ComplexMatrix trim = qcore::embed_qubit_op(
        ComplexMatrix{{-1.0, 0.0}, {0.0, 1.0}}, {5}, nq);
    rho = qcore::apply_operator(trim, rho);
  }
  return rho.normalized();
}

}  // namespace qct::networks
