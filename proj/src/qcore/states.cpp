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

#include "qct/qcore/states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qct::qcore {

PureState::PureState(std::vector<Complex> amplitudes, bool unnormalized)
    : amplitudes_(std::move(amplitudes)), unnormalized_(unnormalized) {
  if (amplitudes_.empty()) throw std::invalid_argument("PureState: empty amplitude vector");
  for (const auto& a : amplitudes_)
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
      throw std::invalid_argument("PureState: non-finite amplitude");
  if (!unnormalized_ && std::abs(norm_squared() - 1.0) > 1e-10)
    throw std::invalid_argument("PureState: squared norm deviates from 1 by more than 1e-10");
}

PureState PureState::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("PureState::basis: index out of range");
  std::vector<Complex> amp(dim, Complex{0.0, 0.0});
  amp[index] = 1.0;
  return PureState(std::move(amp));
}

double PureState::norm_squared() const {
  double n = 0.0;
  for (const auto& a : amplitudes_) n += std::norm(a);
  return n;
}

PureState PureState::normalized() const {
  const double n = std::sqrt(norm_squared());
  if (n < 1e-15) throw std::invalid_argument("PureState::normalized: zero vector");
  std::vector<Complex> amp = amplitudes_;
  for (auto& a : amp) a /= n;
  return PureState(std::move(amp));
}

PureState tensor(const PureState& a, const PureState& b) {
  std::vector<Complex> amp(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      amp[i * b.dim() + j] = a.amplitude(i) * b.amplitude(j);
  return PureState(std::move(amp), a.unnormalized() || b.unnormalized());
}

DensityMatrix::DensityMatrix(ComplexMatrix m, bool subnormalized)
    : matrix_(std::move(m)), subnormalized_(subnormalized) {
  if (matrix_.rows() != matrix_.cols())
    throw std::invalid_argument("DensityMatrix: matrix not square");
  if (!matrix_.all_finite()) throw std::invalid_argument("DensityMatrix: non-finite entry");
  const double hd = matrix_.hermiticity_defect();
  if (hd > kHermitianTol)
    throw std::invalid_argument("DensityMatrix: hermiticity defect " + std::to_string(hd));
  const double mev = min_eigenvalue();
  if (mev < kEigenvalueFloor)
    throw std::invalid_argument("DensityMatrix: eigenvalue " + std::to_string(mev) +
                                " below floor");
  const double tr = matrix_.trace().real();
  if (subnormalized_) {
    // Zero trace is legal: a post-selection branch that never fires.
    if (tr < -kTraceTol || tr > 1.0 + kTraceTol)
      throw std::invalid_argument("DensityMatrix: subnormalized trace " + std::to_string(tr) +
                                  " outside [0, 1]");
  } else {
    if (std::abs(tr - 1.0) > kTraceTol)
      throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr) + " != 1");
  }
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  const std::size_t d = psi.dim();
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) = psi.amplitude(i) * std::conj(psi.amplitude(j));
  return DensityMatrix(std::move(m), psi.unnormalized());
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / static_cast<double>(dim);
  return DensityMatrix(std::move(m));
}

double DensityMatrix::trace_real() const { return matrix_.trace().real(); }

double DensityMatrix::min_eigenvalue() const {
  return hermitian_eigenvalues(matrix_).front();
}

DensityMatrix DensityMatrix::normalized() const {
  const double tr = trace_real();
  if (tr < 1e-14) throw std::invalid_argument("DensityMatrix::normalized: zero trace");
  ComplexMatrix m = matrix_;
  m *= Complex{1.0 / tr, 0.0};
  return DensityMatrix(std::move(m), false);
}

}  // namespace qct::qcore
