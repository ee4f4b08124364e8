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

#include "qlgasim/kernels.hpp"

// This translation unit is the only one compiled with -mavx2.  All entry is
// gated behind a runtime CPU check in avx2_ops(), so including the object in
// a generic build is safe.

#if defined(__AVX2__) && defined(__x86_64__)

#include <immintrin.h>

namespace qlgasim::kernels {
namespace {

// Lanes always carry two independent complex values, one per 128-bit half.
// Each lane performs exactly the scalar arithmetic (products in column order,
// addsub for the +/- of a complex multiply), which keeps results bit-identical
// to the scalar kernels.

inline __m256d complex_pair_load(const double* lo, const double* hi) {
  return _mm256_set_m128d(_mm_loadu_pd(hi), _mm_loadu_pd(lo));
}

inline void complex_pair_store(double* lo, double* hi, __m256d v) {
  _mm_storeu_pd(lo, _mm256_castpd256_pd128(v));
  _mm_storeu_pd(hi, _mm256_extractf128_pd(v, 1));
}

inline __m256d swap_re_im(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

void apply_block_batch_avx2(const double* m, std::size_t dim, const double* in,
                            double* out, std::size_t count) {
  std::size_t b = 0;
  for (; b + 1 < count; b += 2) {
    const double* x0 = in + 2 * dim * b;
    const double* x1 = x0 + 2 * dim;
    double* y0 = out + 2 * dim * b;
    double* y1 = y0 + 2 * dim;
    for (std::size_t i = 0; i < dim; ++i) {
      const double* row = m + 2 * dim * i;
      __m256d acc = _mm256_setzero_pd();
      for (std::size_t j = 0; j < dim; ++j) {
        const __m256d mr = _mm256_set1_pd(row[2 * j]);
        const __m256d mi = _mm256_set1_pd(row[2 * j + 1]);
        const __m256d v = complex_pair_load(x0 + 2 * j, x1 + 2 * j);
        const __m256d term = _mm256_addsub_pd(_mm256_mul_pd(mr, v),
                                              _mm256_mul_pd(mi, swap_re_im(v)));
        acc = _mm256_add_pd(acc, term);
      }
      complex_pair_store(y0 + 2 * i, y1 + 2 * i, acc);
    }
  }
  if (b < count) {
    scalar_ops().apply_block_batch(m, dim, in + 2 * dim * b, out + 2 * dim * b, 1);
  }
}

void gemv_avx2(const double* m, std::size_t n, const double* x, double* y) {
  std::size_t i = 0;
  for (; i + 1 < n; i += 2) {
    const double* row0 = m + 2 * n * i;
    const double* row1 = row0 + 2 * n;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t j = 0; j < n; ++j) {
      const __m256d mv = complex_pair_load(row0 + 2 * j, row1 + 2 * j);
      const __m256d xr = _mm256_set1_pd(x[2 * j]);
      const __m256d xi = _mm256_set1_pd(x[2 * j + 1]);
      const __m256d term = _mm256_addsub_pd(_mm256_mul_pd(mv, xr),
                                            _mm256_mul_pd(swap_re_im(mv), xi));
      acc = _mm256_add_pd(acc, term);
    }
    complex_pair_store(y + 2 * i, y + 2 * (i + 1), acc);
  }
  if (i < n) {
    // Final row, scalar, same accumulation order.
    const double* row = m + 2 * n * i;
    double acc_re = 0.0;
    double acc_im = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double mr = row[2 * j];
      const double mi = row[2 * j + 1];
      const double xr = x[2 * j];
      const double xi = x[2 * j + 1];
      acc_re += mr * xr - mi * xi;
      acc_im += mr * xi + mi * xr;
    }
    y[2 * i] = acc_re;
    y[2 * i + 1] = acc_im;
  }
}

double max_sq_diff_avx2(const double* a, const double* b, std::size_t n) {
  __m256d vbest = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 1 < n; i += 2) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a + 2 * i), _mm256_loadu_pd(b + 2 * i));
    const __m256d p = _mm256_mul_pd(d, d);
    // hadd yields (p0+p1, p0+p1, p2+p3, p2+p3): both squared magnitudes.
    vbest = _mm256_max_pd(vbest, _mm256_hadd_pd(p, p));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, vbest);
  double best = lanes[0] > lanes[2] ? lanes[0] : lanes[2];
  for (; i < n; ++i) {
    const double dr = a[2 * i] - b[2 * i];
    const double di = a[2 * i + 1] - b[2 * i + 1];
    const double d = dr * dr + di * di;
    if (d > best) {
      best = d;
    }
  }
  return best;
}

}  // namespace

const KernelOps* avx2_ops() {
  if (!__builtin_cpu_supports("avx2")) {
    return nullptr;
  }
  static const KernelOps ops{
      "avx2",
      &apply_block_batch_avx2,
      &gemv_avx2,
      &max_sq_diff_avx2,
  };
  return &ops;
}

}  // namespace qlgasim::kernels

#else

namespace qlgasim::kernels {

const KernelOps* avx2_ops() { return nullptr; }

}  // namespace qlgasim::kernels

#endif
