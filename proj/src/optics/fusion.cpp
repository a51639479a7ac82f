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

#include "qct/optics/fusion.hpp"

#include <cmath>
#include <stdexcept>

namespace qct::optics {

using qcore::Complex;
using qcore::ComplexMatrix;
using qcore::PureState;

ComplexMatrix fusion_operator() {
  ComplexMatrix m(4, 4);
  m(0, 0) = 1.0;  // |HH><HH|
  m(3, 3) = 1.0;  // |VV><VV|
  return m;
}

BellLabel bsm_projected_label(const BsmConfig& config) {
  if (config.family == BsmFamily::Phi)
    return config.outcome == BsmOutcome::Plus ? BellLabel::PhiPlus : BellLabel::PhiMinus;
  return config.outcome == BsmOutcome::Plus ? BellLabel::PsiPlus : BellLabel::PsiMinus;
}

ComplexMatrix bsm_operator(const BsmConfig& config) {
  const PureState b = bell_state(bsm_projected_label(config));
  ComplexMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      m(i, j) = b.amplitude(i) * std::conj(b.amplitude(j));
  return m;
}

ComplexMatrix bsm_pbs_operator(BsmFamily family) {
  const ComplexMatrix pbs = fusion_operator();
  if (family == BsmFamily::Phi) return pbs;
  // M' = (I (x) X) M (I (x) X): flips the second mode before and after the PBS.
  ComplexMatrix ix(4, 4);
  ix(0, 1) = 1.0;
  ix(1, 0) = 1.0;
  ix(2, 3) = 1.0;
  ix(3, 2) = 1.0;
  return ix * pbs * ix;
}

ComplexMatrix x_pattern_projector(bool minus_first, bool minus_second) {
  const double r = 1.0 / std::sqrt(2.0);
  const std::vector<Complex> plus{r, r};
  const std::vector<Complex> minus{r, -r};
  const auto& a = minus_first ? minus : plus;
  const auto& b = minus_second ? minus : plus;
  ComplexMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const Complex vi = a[i >> 1] * b[i & 1];
      const Complex vj = a[j >> 1] * b[j & 1];
      m(i, j) = vi * std::conj(vj);
    }
  return m;
}

}  // namespace qct::optics
