// Copyright 2026 The qlgasim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <complex>
#include <cstring>
#include <random>
#include <vector>

#include <doctest.h>

#include "qlgasim/kernels.hpp"

namespace {

using qlgasim::kernels::avx2_ops;
using qlgasim::kernels::KernelOps;
using qlgasim::kernels::scalar_ops;

// Independent reference: plain std::complex accumulation in the same
// column order the kernel contract fixes.
void reference_apply(const double* m, std::size_t dim, const double* in,
                     double* out, std::size_t count) {
  using C = std::complex<double>;
  for (std::size_t b = 0; b < count; ++b) {
    const double* x = in + 2 * dim * b;
    double* y = out + 2 * dim * b;
    for (std::size_t i = 0; i < dim; ++i) {
      C acc(0.0, 0.0);
      for (std::size_t j = 0; j < dim; ++j) {
        const C mij(m[2 * (dim * i + j)], m[2 * (dim * i + j) + 1]);
        const C xj(x[2 * j], x[2 * j + 1]);
        acc += C(mij.real() * xj.real() - mij.imag() * xj.imag(),
                 mij.real() * xj.imag() + mij.imag() * xj.real());
      }
      y[2 * i] = acc.real();
      y[2 * i + 1] = acc.imag();
    }
  }
}

std::vector<double> random_doubles(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<double> v(n);
  for (double& d : v) {
    d = g(rng);
  }
  return v;
}

}  // namespace

TEST_CASE("scalar kernel matches a plain std::complex reference bit for bit") {
  std::mt19937_64 rng(1u);
  const KernelOps& ops = scalar_ops();
  for (std::size_t dim : {1u, 2u, 3u, 4u, 5u, 8u, 16u}) {
    for (std::size_t count : {1u, 2u, 3u, 7u}) {
      const std::vector<double> m = random_doubles(rng, 2 * dim * dim);
      const std::vector<double> in = random_doubles(rng, 2 * dim * count);
      std::vector<double> got(2 * dim * count, 0.0);
      std::vector<double> want(2 * dim * count, 0.0);
      ops.apply_block_batch(m.data(), dim, in.data(), got.data(), count);
      reference_apply(m.data(), dim, in.data(), want.data(), count);
      REQUIRE(std::memcmp(got.data(), want.data(),
                          got.size() * sizeof(double)) == 0);
    }
  }
}

TEST_CASE("gemv is apply_block_batch with one block") {
  std::mt19937_64 rng(2u);
  const KernelOps& ops = scalar_ops();
  const std::size_t n = 6;
  const std::vector<double> m = random_doubles(rng, 2 * n * n);
  const std::vector<double> x = random_doubles(rng, 2 * n);
  std::vector<double> via_gemv(2 * n, 0.0);
  std::vector<double> via_batch(2 * n, 0.0);
  ops.gemv(m.data(), n, x.data(), via_gemv.data());
  ops.apply_block_batch(m.data(), n, x.data(), via_batch.data(), 1);
  REQUIRE(std::memcmp(via_gemv.data(), via_batch.data(),
                      via_gemv.size() * sizeof(double)) == 0);
}

TEST_CASE("max_sq_diff finds the largest squared complex difference") {
  const KernelOps& ops = scalar_ops();
  const double a[] = {1.0, 0.0, 0.0, 2.0, 3.0, 3.0};
  const double b[] = {1.0, 0.5, 0.0, 2.0, 3.0, 2.0};
  // diffs: (0, -0.5) -> 0.25; (0, 0) -> 0; (0, 1) -> 1; all exact in binary.
  CHECK(ops.max_sq_diff(a, b, 3) == 1.0);
  CHECK(ops.max_sq_diff(a, a, 3) == 0.0);
}

TEST_CASE("AVX2 kernels, when present, are bit-identical to scalar") {
  const KernelOps* simd = avx2_ops();
  if (simd == nullptr) {
    MESSAGE("AVX2 kernels unavailable on this build/CPU; skipping");
    return;
  }
  CHECK(std::string(simd->name) == "avx2");

  std::mt19937_64 rng(3u);
  const KernelOps& ref = scalar_ops();
  for (std::size_t dim : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 13u, 16u, 64u}) {
    for (std::size_t count : {1u, 2u, 5u, 9u}) {
      const std::vector<double> m = random_doubles(rng, 2 * dim * dim);
      const std::vector<double> in = random_doubles(rng, 2 * dim * count);
      std::vector<double> simd_out(2 * dim * count, 0.0);
      std::vector<double> scalar_out(2 * dim * count, 0.0);
      simd->apply_block_batch(m.data(), dim, in.data(), simd_out.data(), count);
      ref.apply_block_batch(m.data(), dim, in.data(), scalar_out.data(), count);
      REQUIRE(std::memcmp(simd_out.data(), scalar_out.data(),
                          simd_out.size() * sizeof(double)) == 0);

      std::vector<double> simd_gemv(2 * dim, 0.0);
      std::vector<double> scalar_gemv(2 * dim, 0.0);
      simd->gemv(m.data(), dim, in.data(), simd_gemv.data());
      ref.gemv(m.data(), dim, in.data(), scalar_gemv.data());
      REQUIRE(std::memcmp(simd_gemv.data(), scalar_gemv.data(),
                          simd_gemv.size() * sizeof(double)) == 0);

      REQUIRE(simd->max_sq_diff(m.data(), in.data(), dim) ==
              ref.max_sq_diff(m.data(), in.data(), dim));
    }
  }
}

TEST_CASE("active kernels are one of the known implementations") {
  const std::string name = qlgasim::kernels::active_ops().name;
  CHECK((name == "scalar" || name == "avx2"));
  if (const char* wanted = std::getenv("QLGASIM_KERNELS")) {
    if (*wanted != '\0') {
      CHECK(name == wanted);
    }
  }
}
