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
#include <string>

// Arithmetic kernels behind the dense linear algebra used everywhere else.
// Every kernel has a scalar reference implementation and, on x86-64, an AVX2+FMA
// variant selected once at startup (cpuid) or forced via the QCT_SIMD environment
// variable ("scalar" / "avx2"). Complex arrays are interleaved re/im doubles and
// layout-compatible with std::complex<double>.

namespace qct::simd {

enum class Backend { Scalar, Avx2 };

// Backend in effect for this process.
Backend active_backend();

// Test hook: override dispatch. Throws std::runtime_error if the requested
// backend is not supported on this machine.
void force_backend(Backend b);

std::string backend_name(Backend b);

// True if the CPU supports the AVX2+FMA variants.
bool avx2_supported();

// C = A * B with A (m x k), B (k x n), C (m x n), all row-major. C is overwritten.
void cmatmul(const std::complex<double>* a, const std::complex<double>* b,
             std::complex<double>* c, std::size_t m, std::size_t k, std::size_t n);

// y += alpha * x over n complex entries.
void caxpy(std::complex<double> alpha, const std::complex<double>* x,
           std::complex<double>* y, std::size_t n);

// y += alpha * x over n real entries (simplex tableau row updates).
void daxpy(double alpha, const double* x, double* y, std::size_t n);

// sum_i conj(x_i) * y_i.
std::complex<double> cdotc(const std::complex<double>* x, const std::complex<double>* y,
                           std::size_t n);

namespace detail {

void cmatmul_scalar(const double* a, const double* b, double* c,
                    std::size_t m, std::size_t k, std::size_t n);
void caxpy_scalar(double ar, double ai, const double* x, double* y, std::size_t n);
void daxpy_scalar(double alpha, const double* x, double* y, std::size_t n);
void cdotc_scalar(const double* x, const double* y, std::size_t n, double* re, double* im);

#if defined(__x86_64__) || defined(_M_X64)
void cmatmul_avx2(const double* a, const double* b, double* c,
                  std::size_t m, std::size_t k, std::size_t n);
void caxpy_avx2(double ar, double ai, const double* x, double* y, std::size_t n);
void daxpy_avx2(double alpha, const double* x, double* y, std::size_t n);
void cdotc_avx2(const double* x, const double* y, std::size_t n, double* re, double* im);
#endif

}  // namespace detail

}  // namespace qct::simd
