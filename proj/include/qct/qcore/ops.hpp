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

#include <vector>

#include "qct/qcore/matrix.hpp"
#include "qct/qcore/states.hpp"

namespace qct::qcore {

// M rho M^dag, returned subnormalized: after a non-trace-preserving M (fusion,
// Bell projection, polarizer) the trace is the probability of the joint
// detection event.
DensityMatrix apply_operator(const ComplexMatrix& m, const DensityMatrix& rho);

// Reduced state over the subsystems listed in `keep` (ascending output order).
// `subsystem_dims` partitions the full space; their product must equal dim.
DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& subsystem_dims,
                            const std::vector<std::size_t>& keep);

// Zeroes the off-diagonal entries in the laboratory basis.
DensityMatrix dephase(const DensityMatrix& rho);

// Diagonal of the (renormalized) state: probabilities of the basis outcomes.
// Entries above -1e-12 are clamped to zero; throws on zero-trace input.
std::vector<double> populations(const DensityMatrix& rho);

// <psi| rho |psi> for a normalized pure target.
double fidelity_pure(const DensityMatrix& rho, const PureState& psi);

// tr(rho * obs) for a Hermitian observable; the imaginary residue must stay
// below 1e-9.
double expectation(const DensityMatrix& rho, const ComplexMatrix& obs);

}  // namespace qct::qcore
