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

#include "qct/networks/scenario.hpp"
#include "qct/qcore/ops.hpp"

namespace qct::networks {

// X-measurement pattern on the two fusion outputs. The scenario builders
// condition on PlusPlus, the branch the experiments keep; the odd-parity
// branch is exposed for completeness and flips the sign of the transferred
// off-diagonals.
enum class FusionBranch { PlusPlus, PlusMinus };

// Single fusion step: rho_in on the travelling photon, a fresh ideal pair as
// the resource, X detection on the fused photons. Returns the normalized
// state of the resource partner photon plus the branch probability. Simulated
// on the full three-qubit space; the closed-form
// [[r22, s*r21], [s*r12, r11]] (s = +1 for PlusMinus, -1 for PlusPlus) is the
// oracle the tests check this against.
struct TransferResult {
  qcore::DensityMatrix rho;
  double probability;
};
TransferResult fusion_transfer(const qcore::DensityMatrix& rho_in, FusionBranch branch);

// One setting of the one-qubit experiment: RSP input k through the N4 or N6
// fusion chain. `k` labels the prepared input state U|k><k|U^dag.
struct OneQubitSetting {
  qcore::DensityMatrix rho_out;  // normalized output-photon state
  double probability;            // joint post-selection probability of the branch
};
OneQubitSetting one_qubit_setting(NetworkSize size, int rsp_setting, int k,
                                  const std::vector<double>& pair_visibilities,
                                  FusionBranch branch = FusionBranch::PlusPlus);

// Full scenario: d=2, n=2 population data for the criterion.
ScenarioData run_one_qubit(NetworkSize size, int rsp_setting, int checkpoint_setting,
                           const std::vector<double>& pair_visibilities,
                           FusionBranch branch = FusionBranch::PlusPlus);

// GHZ-type backbone produced by fusing the ideal pairs without the X
// detections: |G4> for N4, |G6> for N6. For N6 the recorded local-phase
// convention (a pi phase on the H component of photon 6, the experiment's
// trim waveplate) aligns the two fusion units.
qcore::DensityMatrix ghz_backbone(NetworkSize size, const std::vector<double>& pair_visibilities);

}  // namespace qct::networks
