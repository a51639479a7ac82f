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

namespace qct::qcore {

// Validation tolerances. The eigenvalue floor leaves slack for RK4 round-off
// and long projector chains; strict zero rejects legitimate states.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-9;
inline constexpr double kTraceTol = 1e-9;

// Pure state vector in the laboratory basis |0>=|H>, |1>=|V>.
// `unnormalized` marks pre-post-selection states whose squared norm is the
// detection probability, not 1.
class PureState {
 public:
  PureState(std::vector<Complex> amplitudes, bool unnormalized = false);

  static PureState basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<Complex>& amplitudes() const { return amplitudes_; }
  Complex amplitude(std::size_t i) const { return amplitudes_[i]; }
  bool unnormalized() const { return unnormalized_; }

  double norm_squared() const;
  PureState normalized() const;

 private:
  std::vector<Complex> amplitudes_;
  bool unnormalized_ = false;
};

// Tensor product of pure states.
PureState tensor(const PureState& a, const PureState& b);

// Hermitian, positive-semidefinite density operator. `subnormalized` states
// carry a trace equal to the post-selection probability of the branch that
// produced them (possibly zero); they are never silently renormalized.
class DensityMatrix {
 public:
  // Validates Hermiticity, the eigenvalue floor and the trace condition;
  // throws std::invalid_argument with a diagnostic on violation.
  explicit DensityMatrix(ComplexMatrix m, bool subnormalized = false);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(std::size_t dim);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  bool subnormalized() const { return subnormalized_; }

  double trace_real() const;
  double min_eigenvalue() const;

  // Trace-1 copy; throws on (numerically) zero trace.
  DensityMatrix normalized() const;

 private:
  ComplexMatrix matrix_;
  bool subnormalized_ = false;
};

}  // namespace qct::qcore
