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

#include "qct/optics/witness.hpp"

#include <cmath>
#include <stdexcept>

#include "qct/optics/states.hpp"

namespace qct::optics {

double pair_fidelity_from_correlations(double xx, double yy, double zz) {
  for (double v : {xx, yy, zz})
    if (!(v >= -1.0 && v <= 1.0))
      throw std::invalid_argument("pair_fidelity_from_correlations: input outside [-1, 1]");
  return (1.0 - xx - yy - zz) / 4.0;
}

double ghz6_witness(double x_expect, const std::vector<double>& z_basis_populations) {
  if (z_basis_populations.size() != 64)
    throw std::invalid_argument("ghz6_witness: expected 64 Z-basis populations");
  double sum = 0.0;
  for (double p : z_basis_populations) {
    if (p < -1e-12) throw std::invalid_argument("ghz6_witness: negative population");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-9)
    throw std::invalid_argument("ghz6_witness: populations do not sum to 1");
  const double p_even = z_basis_populations[pattern_index(kGhz6Pattern)] +
                        z_basis_populations[pattern_index(kGhz6Complement)];
  return 3.0 - 2.0 * ((x_expect + 1.0) / 2.0 + p_even);
}

double ghz6_witness_from_xz(double x_expect, double z_expect) {
  return 3.0 - 2.0 * ((x_expect + 1.0) / 2.0 + (z_expect + 1.0) / 2.0);
}

}  // namespace qct::optics
