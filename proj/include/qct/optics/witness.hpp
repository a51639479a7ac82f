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
#include <vector>

namespace qct::optics {

// Singlet fidelity from the three correlation measurements:
// F = (1 - <XX> - <YY> - <ZZ>) / 4. Inputs must lie in [-1, 1].
double pair_fidelity_from_correlations(double xx, double yy, double zz);

// The six-qubit GHZ pattern targeted by the witness and its complement.
inline const std::string kGhz6Pattern = "HVHVVH";
inline const std::string kGhz6Complement = "VHVHHV";

// GHZ6 witness expectation 3 - 2 [ (<X^6>+1)/2 + p_even ], where p_even is the
// total Z-basis population on the two pattern states - the projector term of
// the witness evaluated from the full 64-outcome population vector. Negative
// values certify genuine multipartite entanglement.
double ghz6_witness(double x_expect, const std::vector<double>& z_basis_populations);

// Literal two-observable reading 3 - 2 [ (<X^6>+1)/2 + (<Z^6>+1)/2 ]. The
// projector term of the witness is not a function of <Z^6> alone, so this is
// only an alternative estimate, kept for comparison with population-based
// evaluation.
double ghz6_witness_from_xz(double x_expect, double z_expect);

}  // namespace qct::optics
