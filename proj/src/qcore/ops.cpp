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

#include "qct/qcore/ops.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qct/simd/kernels.hpp"

namespace qct::qcore {

DensityMatrix apply_operator(const ComplexMatrix& m, const DensityMatrix& rho) {
  if (m.cols() != rho.dim() || m.rows() != m.cols())
    throw std::invalid_argument("apply_operator: operator does not match state dimension");
  ComplexMatrix out = m * rho.matrix() * m.adjoint();
  // Tiny anti-Hermitian round-off from the double product is symmetrized away.
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = i; j < out.cols(); ++j) {
      const Complex s = 0.5 * (out(i, j) + std::conj(out(j, i)));
      out(i, j) = s;
      out(j, i) = std::conj(s);
    }
  return DensityMatrix(std::move(out), true);
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<std::size_t>& subsystem_dims,
                            const std::vector<std::size_t>& keep) {
  const std::size_t ns = subsystem_dims.size();
  std::size_t prod = 1;
  for (std::size_t d : subsystem_dims) prod *= d;
  if (prod != rho.dim())
    throw std::invalid_argument("partial_trace: subsystem dims do not factor the state");
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set is empty");
  std::vector<bool> kept(ns, false);
  for (std::size_t k : keep) {
    if (k >= ns) throw std::invalid_argument("partial_trace: keep index out of range");
    if (kept[k]) throw std::invalid_argument("partial_trace: duplicate keep index");
    kept[k] = true;
  }

  // Strides of each subsystem in the flattened index.
  std::vector<std::size_t> stride(ns, 1);
  for (std::size_t s = ns; s-- > 1;) stride[s - 1] = stride[s] * subsystem_dims[s];

  std::size_t out_dim = 1;
  for (std::size_t k : keep) out_dim *= subsystem_dims[k];

  std::size_t traced_dim = rho.dim() / out_dim;

  // Enumerate kept and traced digit tuples separately.
  auto compose = [&](std::size_t kept_idx, std::size_t traced_idx) {
    std::size_t full = 0;
    // Kept digits, in the order given by `keep` (most significant first).
    for (std::size_t pos = keep.size(); pos-- > 0;) {
      const std::size_t s = keep[pos];
      full += (kept_idx % subsystem_dims[s]) * stride[s];
      kept_idx /= subsystem_dims[s];
    }
    for (std::size_t s = ns; s-- > 0;) {
      if (kept[s]) continue;
      full += (traced_idx % subsystem_dims[s]) * stride[s];
      traced_idx /= subsystem_dims[s];
    }
    return full;
  };

  ComplexMatrix out(out_dim, out_dim);
  for (std::size_t i = 0; i < out_dim; ++i)
    for (std::size_t j = 0; j < out_dim; ++j) {
      Complex acc = 0.0;
      for (std::size_t t = 0; t < traced_dim; ++t)
        acc += rho.matrix()(compose(i, t), compose(j, t));
      out(i, j) = acc;
    }
  return DensityMatrix(std::move(out), rho.subnormalized());
}

DensityMatrix dephase(const DensityMatrix& rho) {
  ComplexMatrix out(rho.dim(), rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) out(i, i) = rho.matrix()(i, i).real();
  return DensityMatrix(std::move(out), rho.subnormalized());
}

std::vector<double> populations(const DensityMatrix& rho) {
  const double tr = rho.trace_real();
  if (tr < 1e-14) throw std::invalid_argument("populations: zero-trace state");
  std::vector<double> p(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    double v = rho.matrix()(i, i).real() / tr;
    if (v < 0.0) {
      if (v < -1e-12) throw std::invalid_argument("populations: negative diagonal entry");
      v = 0.0;
    }
    p[i] = v;
  }
  return p;
}

double fidelity_pure(const DensityMatrix& rho, const PureState& psi) {
  if (psi.dim() != rho.dim()) throw std::invalid_argument("fidelity_pure: dimension mismatch");
  const std::vector<Complex> rp = rho.matrix() * psi.amplitudes();
  const Complex f = simd::cdotc(psi.amplitudes().data(), rp.data(), psi.dim());
  return f.real();
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& obs) {
  if (obs.rows() != rho.dim() || obs.cols() != rho.dim())
    throw std::invalid_argument("expectation: dimension mismatch");
  if (obs.hermiticity_defect() > 1e-9)
    throw std::invalid_argument("expectation: observable not Hermitian");
  // tr(rho * obs) = conj(sum_ij conj(rho_ij) obs_ij) for Hermitian obs.
  const Complex t = std::conj(
      simd::cdotc(rho.matrix().data(), obs.data(), rho.dim() * rho.dim()));
  if (std::abs(t.imag()) > 1e-9)
    throw std::invalid_argument("expectation: imaginary residue above 1e-9");
  return t.real();
}

}  // namespace qct::qcore
