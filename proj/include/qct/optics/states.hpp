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

#include <string>

#include "qct/qcore/states.hpp"

namespace qct::optics {

enum class BellLabel { PsiPlus, PsiMinus, PhiPlus, PhiMinus };

std::string bell_label_name(BellLabel label);

// Standard Bell states over |HH>, |HV>, |VH>, |VV>:
//   psi-+ = (|HV> -+ |VH>)/sqrt(2),  phi-+ = (|HH> -+ |VV>)/sqrt(2).
qcore::PureState bell_state(BellLabel label);

// GHZ-type state (|pattern> + |complement>)/sqrt(2). Patterns are strings over
// {H, V} of length n_qubits (2..6) and must be bitwise complements.
qcore::PureState ghz_state(std::size_t n_qubits, const std::string& pattern,
                           const std::string& complement);

// Basis index of an H/V pattern, |H>=0 most significant qubit first.
std::size_t pattern_index(const std::string& pattern);

// Entangled-pair noise model: v |psi-><psi-| + (1-v) I/4.
qcore::DensityMatrix noisy_pair(double visibility);

}  // namespace qct::optics
