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

namespace qlgasim::kernels {
namespace {

// Reference implementations.  The arithmetic here fixes the contract every
// SIMD variant must reproduce bit for bit: for each output element, products
// in column order, one fused-free accumulation per column.

void apply_block_batch_scalar(const double* m, std::size_t dim, const double* in,
                              double* out, std::size_t count) {
  for (std::size_t b = 0; b < count; ++b) {
    const double* x = in + 2 * dim * b;
    double* y = out + 2 * dim * b;
    for (std::size_t i = 0; i < dim; ++i) {
      const double* row = m + 2 * dim * i;
      double acc_re = 0.0;
      double acc_im = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
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
}

void gemv_scalar(const double* m, std::size_t n, const double* x, double* y) {
  apply_block_batch_scalar(m, n, x, y, 1);
}

double max_sq_diff_scalar(const double* a, const double* b, std::size_t n) {
  double best = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
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

const KernelOps& scalar_ops() {
  static const KernelOps ops{
      "scalar",
      &apply_block_batch_scalar,
      &gemv_scalar,
      &max_sq_diff_scalar,
  };
  return ops;
}

}  // namespace qlgasim::kernels
