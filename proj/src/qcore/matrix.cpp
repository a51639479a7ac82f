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

#include "qct/qcore/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qct/simd/kernels.hpp"

namespace qct::qcore {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_)
    throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ComplexMatrix: ragged initializer");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix m = *this;
  for (auto& e : m.entries_) e = std::conj(e);
  return m;
}

Complex ComplexMatrix::trace() const {
  if (rows_ != cols_) throw std::invalid_argument("trace: matrix not square");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix add: shape mismatch");
  simd::caxpy(1.0, other.entries_.data(), entries_.data(), entries_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("matrix sub: shape mismatch");
  simd::caxpy(-1.0, other.entries_.data(), entries_.data(), entries_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

bool ComplexMatrix::all_finite() const {
  for (const auto& e : entries_)
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  return true;
}

double ComplexMatrix::hermiticity_defect() const {
  if (rows_ != cols_) throw std::invalid_argument("hermiticity_defect: matrix not square");
  double d = 0.0;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      d = std::max(d, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return d;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double d = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i)
    d = std::max(d, std::abs(entries_[i] - other.entries_[i]));
  return d;
}

double ComplexMatrix::max_abs() const {
  double d = 0.0;
  for (const auto& e : entries_) d = std::max(d, std::abs(e));
  return d;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimension mismatch");
  ComplexMatrix c(a.rows(), b.cols());
  simd::cmatmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
  return c;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix a) { return a *= scalar; }

std::vector<Complex> operator*(const ComplexMatrix& a, const std::vector<Complex>& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matvec: dimension mismatch");
  std::vector<Complex> out(a.rows());
  simd::cmatmul(a.data(), v.data(), out.data(), a.rows(), a.cols(), 1);
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Complex av = a(ia, ja);
      if (av == Complex{0.0, 0.0}) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
          c(ia * b.rows() + ib, ja * b.cols() + jb) = av * b(ib, jb);
    }
  return c;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermitian_eigenvalues: not square");
  const std::size_t n = a.rows();
  ComplexMatrix m = a;
  // Symmetrize round-off before iterating.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Complex s = 0.5 * (m(i, j) + std::conj(m(j, i)));
      m(i, j) = s;
      m(j, i) = std::conj(s);
    }

  const int max_sweeps = 60;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(m(p, q));
    if (off < 1e-26) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = m(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        // Complex Jacobi rotation zeroing m(p,q): phase out apq, then rotate.
        const Complex phase = apq / std::abs(apq);
        const double tau = (aqq - app) / (2.0 * std::abs(apq));
        const double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex sp = s * phase;

        for (std::size_t i = 0; i < n; ++i) {
          const Complex mip = m(i, p);
          const Complex miq = m(i, q);
          m(i, p) = c * mip - std::conj(sp) * miq;
          m(i, q) = sp * mip + c * miq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const Complex mpj = m(p, j);
          const Complex mqj = m(q, j);
          m(p, j) = c * mpj - sp * mqj;
          m(q, j) = std::conj(sp) * mpj + c * mqj;
        }
      }
    }
  }

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = m(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

ComplexMatrix embed_qubit_op(const ComplexMatrix& op, const std::vector<std::size_t>& targets,
                             std::size_t n_qubits) {
  const std::size_t k = targets.size();
  if (op.rows() != (std::size_t{1} << k) || op.cols() != op.rows())
    throw std::invalid_argument("embed_qubit_op: operator size does not match target count");
  for (std::size_t t : targets)
    if (t >= n_qubits) throw std::invalid_argument("embed_qubit_op: target out of range");

  const std::size_t dim = std::size_t{1} << n_qubits;
  ComplexMatrix out(dim, dim);

  // Qubit q owns bit (n_qubits - 1 - q) of a basis index.
  auto sub_index = [&](std::size_t full) {
    std::size_t s = 0;
    for (std::size_t t : targets) s = (s << 1) | ((full >> (n_qubits - 1 - t)) & 1u);
    return s;
  };
  std::size_t rest_mask = dim - 1;
  for (std::size_t t : targets) rest_mask &= ~(std::size_t{1} << (n_qubits - 1 - t));

  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      if ((i & rest_mask) != (j & rest_mask)) continue;
      out(i, j) = op(sub_index(i), sub_index(j));
    }
  }
  return out;
}

}  // namespace qct::qcore
