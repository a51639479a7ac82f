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

#include <array>
#include <complex>
#include <random>
#include <vector>

#include <doctest.h>

namespace {

using Cx = std::complex<double>;
using namespace qct;

std::vector<Cx> random_cvec(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Cx> v(n);
  for (auto& x : v) x = Cx{g(rng), g(rng)};
  return v;
}

std::vector<double> random_dvec(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = g(rng);
  return v;
}

// Independent reference matmul (plain j-loop accumulation, no shared code).
std::vector<Cx> naive_matmul(const std::vector<Cx>& a, const std::vector<Cx>& b,
                             std::size_t m, std::size_t k, std::size_t n) {
  std::vector<Cx> c(m * n, Cx{0.0, 0.0});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Cx acc{0.0, 0.0};
      for (std::size_t p = 0; p < k; ++p) acc += a[i * k + p] * b[p * n + j];
      c[i * n + j] = acc;
    }
  return c;
}

void check_close(const std::vector<Cx>& a, const std::vector<Cx>& b, double tol) {
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < tol);
}

struct BackendGuard {
  simd::Backend saved = simd::active_backend();
  ~BackendGuard() { simd::force_backend(saved); }
};

}  // namespace

TEST_CASE("cmatmul matches the naive reference on both backends") {
  std::mt19937_64 rng(11);
  BackendGuard guard;
  for (auto dims : {std::array<std::size_t, 3>{1, 1, 1}, {2, 3, 4}, {3, 3, 3}, {5, 7, 2},
                    {8, 8, 8}, {9, 5, 11}, {64, 64, 64}}) {
    const auto [m, k, n] = dims;
    const auto a = random_cvec(m * k, rng);
    const auto b = random_cvec(k * n, rng);
    const auto expect = naive_matmul(a, b, m, k, n);
    std::vector<Cx> c(m * n);

    simd::force_backend(simd::Backend::Scalar);
    simd::cmatmul(a.data(), b.data(), c.data(), m, k, n);
    check_close(c, expect, 1e-11);

    if (simd::avx2_supported()) {
      simd::force_backend(simd::Backend::Avx2);
      simd::cmatmul(a.data(), b.data(), c.data(), m, k, n);
      check_close(c, expect, 1e-11);
    }
  }
}

TEST_CASE("caxpy backends agree including odd remainders") {
  std::mt19937_64 rng(12);
  BackendGuard guard;
  for (std::size_t n : {1, 2, 3, 7, 16, 33, 100}) {
    const auto x = random_cvec(n, rng);
    const auto y0 = random_cvec(n, rng);
    const Cx alpha{0.7, -1.3};

    auto y_scalar = y0;
    simd::force_backend(simd::Backend::Scalar);
    simd::caxpy(alpha, x.data(), y_scalar.data(), n);

    std::vector<Cx> expect(n);
    for (std::size_t i = 0; i < n; ++i) expect[i] = y0[i] + alpha * x[i];
    check_close(y_scalar, expect, 1e-12);

    if (simd::avx2_supported()) {
      auto y_avx = y0;
      simd::force_backend(simd::Backend::Avx2);
      simd::caxpy(alpha, x.data(), y_avx.data(), n);
      check_close(y_avx, expect, 1e-12);
    }
  }
}

TEST_CASE("daxpy backends agree") {
  std::mt19937_64 rng(13);
  BackendGuard guard;
  for (std::size_t n : {1, 3, 4, 5, 8, 9, 31, 200}) {
    const auto x = random_dvec(n, rng);
    const auto y0 = random_dvec(n, rng);

    auto y_scalar = y0;
    simd::force_backend(simd::Backend::Scalar);
    simd::daxpy(-2.5, x.data(), y_scalar.data(), n);

    for (std::size_t i = 0; i < n; ++i) CHECK(y_scalar[i] == doctest::Approx(y0[i] - 2.5 * x[i]));

    if (simd::avx2_supported()) {
      auto y_avx = y0;
      simd::force_backend(simd::Backend::Avx2);
      simd::daxpy(-2.5, x.data(), y_avx.data(), n);
      for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y_avx[i] - y_scalar[i]) < 1e-13);
    }
  }
}

TEST_CASE("cdotc backends agree with the direct sum") {
  std::mt19937_64 rng(14);
  BackendGuard guard;
  for (std::size_t n : {1, 2, 5, 8, 17, 64, 129}) {
    const auto x = random_cvec(n, rng);
    const auto y = random_cvec(n, rng);
    Cx expect{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) expect += std::conj(x[i]) * y[i];

    simd::force_backend(simd::Backend::Scalar);
    CHECK(std::abs(simd::cdotc(x.data(), y.data(), n) - expect) < 1e-11);

    if (simd::avx2_supported()) {
      simd::force_backend(simd::Backend::Avx2);
      CHECK(std::abs(simd::cdotc(x.data(), y.data(), n) - expect) < 1e-11);
    }
  }
}

TEST_CASE("kernels are deterministic run-to-run") {
  std::mt19937_64 rng(15);
  const auto a = random_cvec(36, rng);
  const auto b = random_cvec(36, rng);
  std::vector<Cx> c1(36), c2(36);
  simd::cmatmul(a.data(), b.data(), c1.data(), 6, 6, 6);
  simd::cmatmul(a.data(), b.data(), c2.data(), 6, 6, 6);
  CHECK(c1 == c2);
}

TEST_CASE("force_backend rejects unsupported targets") {
  BackendGuard guard;
  if (!simd::avx2_supported())
    CHECK_THROWS(simd::force_backend(simd::Backend::Avx2));
  else
    CHECK_NOTHROW(simd::force_backend(simd::Backend::Avx2));
  CHECK(simd::backend_name(simd::Backend::Scalar) == "scalar");
  CHECK(simd::backend_name(simd::Backend::Avx2) == "avx2");
}
