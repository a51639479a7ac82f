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

// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; the dispatcher only routes here after a cpuid check.
//
// Complex layout per __m256d: [re0, im0, re1, im1] (two complex doubles).
// Scalar-times-vector uses fmaddsub: with ar/ai broadcast and bs the
// re/im-swapped b, fmaddsub(ar, b, ai*bs) yields
//   even lanes: ar*br - ai*bi   (real part)
//   odd  lanes: ar*bi + ai*br   (imag part)

#include "qct/simd/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace qct::simd::detail {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

}  // namespace

void cmatmul_avx2(const double* a, const double* b, double* c,
                  std::size_t m, std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < 2 * m * n; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t p = 0; p < k; ++p) {
      const double ar = a[2 * (i * k + p)];
      const double ai = a[2 * (i * k + p) + 1];
      const __m256d var = _mm256_set1_pd(ar);
      const __m256d vai = _mm256_set1_pd(ai);
      const double* brow = b + 2 * p * n;
      double* crow = c + 2 * i * n;
      std::size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        const __m256d vb = _mm256_loadu_pd(brow + 2 * j);
        const __m256d vbs = _mm256_permute_pd(vb, 0x5);
        const __m256d prod = _mm256_fmaddsub_pd(var, vb, _mm256_mul_pd(vai, vbs));
        _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(_mm256_loadu_pd(crow + 2 * j), prod));
      }
      for (; j < n; ++j) {
        const double br = brow[2 * j];
        const double bi = brow[2 * j + 1];
        crow[2 * j] += ar * br - ai * bi;
        crow[2 * j + 1] += ar * bi + ai * br;
      }
    }
  }
}

void caxpy_avx2(double ar, double ai, const double* x, double* y, std::size_t n) {
  const __m256d var = _mm256_set1_pd(ar);
  const __m256d vai = _mm256_set1_pd(ai);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d vx = _mm256_loadu_pd(x + 2 * j);
    const __m256d vxs = _mm256_permute_pd(vx, 0x5);
    const __m256d prod = _mm256_fmaddsub_pd(var, vx, _mm256_mul_pd(vai, vxs));
    _mm256_storeu_pd(y + 2 * j, _mm256_add_pd(_mm256_loadu_pd(y + 2 * j), prod));
  }
  for (; j < n; ++j) {
    const double xr = x[2 * j];
    const double xi = x[2 * j + 1];
    y[2 * j] += ar * xr - ai * xi;
    y[2 * j + 1] += ar * xi + ai * xr;
  }
}

void daxpy_avx2(double alpha, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + j), _mm256_loadu_pd(y + j));
    _mm256_storeu_pd(y + j, vy);
  }
  for (; j < n; ++j) y[j] += alpha * x[j];
}

void cdotc_avx2(const double* x, const double* y, std::size_t n, double* re, double* im) {
  // Real part is the plain dot product of the raw arrays; imag part negates
  // the odd lanes of the re/im-swapped y before accumulating.
  const __m256d negodd = _mm256_setr_pd(0.0, -0.0, 0.0, -0.0);
  __m256d racc = _mm256_setzero_pd();
  __m256d iacc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d vx = _mm256_loadu_pd(x + 2 * j);
    const __m256d vy = _mm256_loadu_pd(y + 2 * j);
    racc = _mm256_fmadd_pd(vx, vy, racc);
    const __m256d vys = _mm256_xor_pd(_mm256_permute_pd(vy, 0x5), negodd);
    iacc = _mm256_fmadd_pd(vx, vys, iacc);
  }
  double r = hsum(racc);
  double i = hsum(iacc);
  for (; j < n; ++j) {
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

#endif  // x86-64
