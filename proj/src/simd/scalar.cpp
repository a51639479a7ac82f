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

// Scalar reference kernels. These define the semantics; the SIMD variants are
// equivalence-tested against them.

#include "qct/simd/kernels.hpp"

namespace qct::simd::detail {

void cmatmul_scalar(const double* a, const double* b, double* c,
                    std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < 2 * m * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const double ar = a[2 * (i * k + p)];
      const double ai = a[2 * (i * k + p) + 1];
      const double* brow = b + 2 * p * n;
      double* crow = c + 2 * i * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += ar * br - ai * bi;
        crow[2 * j + 1] += ar * bi + ai * br;
      }
    }
  }
}

void caxpy_scalar(double ar, double ai, const double* x, double* y, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    const double xr = x[2 * j];
    const double xi = x[2 * j + 1];
    y[2 * j] += ar * xr - ai * xi;
    y[2 * j + 1] += ar * xi + ai * xr;
  }
}

void daxpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) y[j] += alpha * x[j];
}

void cdotc_scalar(const double* x, const double* y, std::size_t n, double* re, double* im) {
  double r = 0.0, i = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double xr = x[2 * j];
    const double xi = x[2 * j + 1];
    const double yr = y[2 * j];
    const double yi = y[2 * j + 1];
    r += xr * yr + xi * yi;
    i += xr * yi - xi * yr;
  }
  *re = r;
  *im = i;
}

}  // namespace qct::simd::detail
