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
#include "qct/optics/fusion.hpp"
#include "qct/qcore/ops.hpp"

namespace qct::networks {

enum class TwoQubitVariant { Capable, Control };

// Input-state ordering of the experiment: k = 1..4 -> psi+, psi-, phi+, phi-.
optics::BellLabel two_qubit_input_label(int k);

// One setting of the two-qubit experiment. The input BSM projects the Bell
// state onto the network; entanglement swapping delivers the same label to
// the output photon pair (2,4) for N4 and (6,4) for N6. The Control variant
// additionally projects the output photons with polarizers matched to one
// basis component of the swapped state, yielding the four separable states
// |VH>, |HV>, |HH>, |VV> for k = 1..4.
struct TwoQubitSetting {
  qcore::DensityMatrix rho_out;  // normalized two-qubit output state
  double probability;            // post-selection probability of the branch
};
TwoQubitSetting two_qubit_setting(NetworkSize size, TwoQubitVariant variant, int k,
                                  const std::vector<double>& pair_visibilities);

// Full scenario: d=4, n=4 population data for the criterion.
ScenarioData run_two_qubit(NetworkSize size, TwoQubitVariant variant, int checkpoint_setting,
                           const std::vector<double>& pair_visibilities);

}  // namespace qct::networks
