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

#include <array>
#include <vector>

namespace qct::networks {

// Post-selected classical triangle model: with probability gamma all sources
// route clockwise and party X outputs 1 with probability p[X]; otherwise
// counterclockwise with q[X]. Outcome index is i = 4a + 2b + c.
struct TriangularClassicalModel {
  double gamma = 0.5;
  std::array<double, 3> p{0.5, 0.5, 0.5};
  std::array<double, 3> q{0.5, 0.5, 0.5};

  void validate() const;  // all seven parameters in [0, 1]
};

std::vector<double> triangle_classical_distribution(const TriangularClassicalModel& model);

// Quantum distribution of the triangle: 1/4 on the four even-parity outcomes.
// Computed by simulating the single-particle path-superposition state through
// the three 50:50 beam splitters with one-particle-per-station post-selection,
// then checked against the hardcoded target; disagreement throws.
std::vector<double> triangle_quantum_distribution();

// The beam-splitter simulation on its own, for cross-checking.
std::vector<double> triangle_quantum_distribution_simulated();

}  // namespace qct::networks
