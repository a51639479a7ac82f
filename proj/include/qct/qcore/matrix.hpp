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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace qct::qcore {

using Complex = std::complex<double>;

// Dense row-major complex matrix. All states and operators in the toolkit are
// small (dimension <= 64, six qubits), so everything is dense and by value.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  // Row-by-row brace construction for small fixed operators.
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Complex& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const Complex* data() const { return entries_.data(); }
  Complex* data() { return entries_.data(); }
  const std::vector<Complex>& entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

  bool all_finite() const;
  // max_ij |A_ij - A_ji^*|
  double hermiticity_defect() const;
  // max_ij |A_ij - B_ij|
  double max_abs_diff(const ComplexMatrix& other) const;
  double max_abs() const;

  bool operator==(const ComplexMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix a);

// Matrix-vector product.
std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& v);

// Kronecker product; dimensions multiply.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues of a Hermitian matrix (ascending), via cyclic complex Jacobi.
// Throws std::invalid_argument if the input is not square.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a);

// Lifts a k-qubit operator onto the qubits listed in `targets` (order matters)
// of an n-qubit register. Qubit 0 is the most significant bit of the basis
// index, matching the |0> = |HH...>, |1> = |H..V> enumeration.
ComplexMatrix embed_qubit_op(const ComplexMatrix& op, const std::vector<std::size_t>& targets,
                             std::size_t n_qubits);

}  // namespace qct::qcore
