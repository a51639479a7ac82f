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

#include "qct/optics/states.hpp"

#include <cmath>
#include <stdexcept>

namespace qct::optics {

using qcore::Complex;
using qcore::ComplexMatrix;
using qcore::DensityMatrix;
using qcore::PureState;

std::string bell_label_name(BellLabel label) {
  switch (label) {
    case BellLabel::PsiPlus: return "psi+";
    case BellLabel::PsiMinus: return "psi-";
    case BellLabel::PhiPlus: return "phi+";
    case BellLabel::PhiMinus: return "phi-";
  }
  throw std::invalid_argument("bell_label_name: bad label");
}

PureState bell_state(BellLabel label) {
  const double r = 1.0 / std::sqrt(2.0);
  switch (label) {
    case BellLabel::PsiPlus: return PureState({0.0, r, r, 0.0});
    case BellLabel::PsiMinus: return PureState({0.0, r, -r, 0.0});
    case BellLabel::PhiPlus: return PureState({r, 0.0, 0.0, r});
    case BellLabel::PhiMinus: return PureState({r, 0.0, 0.0, -r});
  }
  throw std::invalid_argument("bell_state: bad label");
}

std::size_t pattern_index(const std::string& pattern) {
  std::size_t idx = 0;
  for (char c : pattern) {
    if (c != 'H' && c != 'V')
      throw std::invalid_argument("pattern must contain only H and V");
    idx = (idx << 1) | (c == 'V' ? 1u : 0u);
  }
  return idx;
}

PureState ghz_state(std::size_t n_qubits, const std::string& pattern,
                    const std::string& complement) {
  if (n_qubits < 2 || n_qubits > 6)
    throw std::invalid_argument("ghz_state: n_qubits must be in 2..6");
  if (pattern.size() != n_qubits || complement.size() != n_qubits)
    throw std::invalid_argument("ghz_state: pattern length must equal n_qubits");
  for (std::size_t i = 0; i < n_qubits; ++i) {
    const bool a = pattern[i] == 'V';
    const bool b = complement[i] == 'V';
    if ((pattern[i] != 'H' && pattern[i] != 'V') ||
        (complement[i] != 'H' && complement[i] != 'V'))
      throw std::invalid_argument("ghz_state: patterns must contain only H and V");
    if (a == b)
      throw std::invalid_argument("ghz_state: patterns are not bitwise complements");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  std::vector<Complex> amp(dim, Complex{0.0, 0.0});
  const double r = 1.0 / std::sqrt(2.0);
  amp[pattern_index(pattern)] = r;
  amp[pattern_index(complement)] = r;
  return PureState(std::move(amp));
}

DensityMatrix noisy_pair(double visibility) {
  if (!(visibility >= 0.0 && visibility <= 1.0))
    throw std::invalid_argument("noisy_pair: visibility must lie in [0, 1]");
  const DensityMatrix pure = DensityMatrix::from_pure(bell_state(BellLabel::PsiMinus));
  ComplexMatrix m(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      m(i, j) = visibility * pure.matrix()(i, j);
      if (i == j) m(i, j) += (1.0 - visibility) * 0.25;
    }
  return DensityMatrix(std::move(m));
}

}  // namespace qct::optics
