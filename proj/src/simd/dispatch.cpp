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

#include "qct/simd/kernels.hpp"

#include <cstdlib>
#include <stdexcept>

namespace qct::simd {

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

namespace {

Backend resolve_initial() {
  if (const char* env = std::getenv("QCT_SIMD")) {
    const std::string v(env);
    if (v == "scalar") return Backend::Scalar;
    if (v == "avx2") {
      if (!avx2_supported()) throw std::runtime_error("QCT_SIMD=avx2: CPU lacks AVX2/FMA");
      return Backend::Avx2;
    }
    throw std::runtime_error("QCT_SIMD: expected \"scalar\" or \"avx2\", got \"" + v + "\"");
  }
  return avx2_supported() ? Backend::Avx2 : Backend::Scalar;
}

Backend& current() {
  static Backend b = resolve_initial();
  return b;
}

}  // namespace

Backend active_backend() { return current(); }

void force_backend(Backend b) {
  if (b == Backend::Avx2 && !avx2_supported())
    throw std::runtime_error("force_backend: CPU lacks AVX2/FMA");
  current() = b;
}

std::string backend_name(Backend b) {
  return b == Backend::Avx2 ? "avx2" : "scalar";
}

void cmatmul(const std::complex<double>* a, const std::complex<double>* b,
             std::complex<double>* c, std::size_t m, std::size_t k, std::size_t n) {
  const double* ad = reinterpret_cast<const double*>(a);
  const double* bd = reinterpret_cast<const double*>(b);
  double* cd = reinterpret_cast<double*>(c);
#if defined(__x86_64__) || defined(_M_X64)
  if (current() == Backend::Avx2) {
    detail::cmatmul_avx2(ad, bd, cd, m, k, n);
    return;
  }
#endif
  detail::cmatmul_scalar(ad, bd, cd, m, k, n);
}

void caxpy(std::complex<double> alpha, const std::complex<double>* x,
           std::complex<double>* y, std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
#if defined(__x86_64__) || defined(_M_X64)
  if (current() == Backend::Avx2) {
    detail::caxpy_avx2(alpha.real(), alpha.imag(), xd, yd, n);
    return;
  }
#endif
  detail::caxpy_scalar(alpha.real(), alpha.imag(), xd, yd, n);
}

void daxpy(double alpha, const double* x, double* y, std::size_t n) {
#if defined(__x86_64__) || defined(_M_X64)
  if (current() == Backend::Avx2) {
    detail::daxpy_avx2(alpha, x, y, n);
    return;
  }
#endif
  detail::daxpy_scalar(alpha, x, y, n);
}

std::complex<double> cdotc(const std::complex<double>* x, const std::complex<double>* y,
                           std::size_t n) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  double re = 0.0, im = 0.0;
#if defined(__x86_64__) || defined(_M_X64)
  if (current() == Backend::Avx2) {
    detail::cdotc_avx2(xd, yd, n, &re, &im);
    return {re, im};
  }
#endif
  detail::cdotc_scalar(xd, yd, n, &re, &im);
  return {re, im};
}

}  // namespace qct::simd
