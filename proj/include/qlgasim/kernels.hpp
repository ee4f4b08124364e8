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

#ifndef QLGASIM_KERNELS_HPP
#define QLGASIM_KERNELS_HPP

#include <cstddef>

namespace qlgasim::kernels {

/// Batched complex linear algebra over interleaved (re, im) double arrays.
///
/// Every variant of a kernel computes the same products and accumulates them
/// in the same order per output element, so scalar and SIMD implementations
/// produce bit-identical results.  The dispatch choice must never be able to
/// change simulation output.
struct KernelOps {
  const char* name;

  /// out[b] = m * in[b] for `count` independent blocks of `dim` complex
  /// entries each.  `m` is dim x dim, row-major, interleaved complex.
  /// in and out must not alias.
  void (*apply_block_batch)(const double* m, std::size_t dim, const double* in,
                            double* out, std::size_t count);

  /// y = m * x with m an n x n row-major interleaved complex matrix.
  /// x and y must not alias.
  void (*gemv)(const double* m, std::size_t n, const double* x, double* y);

  /// max over the n complex entries of |a_i - b_i|^2.
  double (*max_sq_diff)(const double* a, const double* b, std::size_t n);
};

const KernelOps& scalar_ops();

/// AVX2 implementation, or nullptr when the build or the CPU lacks support.
const KernelOps* avx2_ops();

/// Kernels selected for this process: AVX2 when available unless the
/// QLGASIM_KERNELS environment variable ("scalar" or "avx2") overrides.
const KernelOps& active_ops();

}  // namespace qlgasim::kernels

#endif
