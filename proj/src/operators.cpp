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

#include "qlgasim/operators.hpp"

#include <cmath>

#include "qlgasim/errors.hpp"

namespace qlgasim {
namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
const Amplitude kZero(0.0, 0.0);
const Amplitude kOne(1.0, 0.0);

}  // namespace

LocalUnitary symmetric_coin(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return LocalUnitary(2,
                      {Amplitude(c, 0.0), Amplitude(0.0, s),
                       Amplitude(0.0, s), Amplitude(c, 0.0)},
                      {"+1", "-1"});
}

LocalUnitary balanced_coin() {
  return LocalUnitary(2,
                      {Amplitude(kInvSqrt2, 0.0), Amplitude(0.0, kInvSqrt2),
                       Amplitude(0.0, kInvSqrt2), Amplitude(kInvSqrt2, 0.0)},
                      {"+1", "-1"});
}

LocalUnitary meyer_scattering(double theta, double alpha, double beta) {
  const Amplitude ea = std::polar(1.0, alpha);
  const Amplitude keep = Amplitude(0.0, 1.0) * ea * std::sin(theta);
  const Amplitude flip = ea * std::cos(theta);
  const Amplitude pair_phase = std::polar(1.0, beta);
  return LocalUnitary(4,
                      {
                          kOne, kZero, kZero, kZero,        //
                          kZero, keep, flip, kZero,         //
                          kZero, flip, keep, kZero,         //
                          kZero, kZero, kZero, pair_phase,  //
                      },
                      {"|00>", "|01>", "|10>", "|11>"});
}

LocalUnitary pauli_x() {
  return LocalUnitary(2, {kZero, kOne, kOne, kZero}, {"+1", "-1"});
}

LocalUnitary direction_swap() {
  return LocalUnitary(4,
                      {
                          kZero, kOne, kZero, kZero,  //
                          kOne, kZero, kZero, kZero,  //
                          kZero, kZero, kZero, kOne,  //
                          kZero, kZero, kOne, kZero,  //
                      },
                      {"w", "e", "s", "n"});
}

LocalUnitary embed_block(std::size_t dim, const std::vector<std::size_t>& slots,
                         const LocalUnitary& small) {
  if (slots.size() != small.dim()) {
    throw Error("embed_block: slot count does not match block dimension");
  }
  std::vector<Amplitude> m(dim * dim, kZero);
  std::vector<char> used(dim, 0);
  for (std::size_t slot : slots) {
    if (slot >= dim || used[slot]) {
      throw Error("embed_block: slot indices must be distinct and in range");
    }
    used[slot] = 1;
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (!used[i]) {
      m[i * dim + i] = kOne;
    }
  }
  for (std::size_t r = 0; r < slots.size(); ++r) {
    for (std::size_t c = 0; c < slots.size(); ++c) {
      m[slots[r] * dim + slots[c]] = small.at(r, c);
    }
  }
  return LocalUnitary(dim, std::move(m));
}

bool has_zero_diagonal(const LocalUnitary& u, double tol) {
  for (std::size_t i = 0; i < u.dim(); ++i) {
    if (std::abs(u.at(i, i)) > tol) {
      return false;
    }
  }
  return true;
}

namespace {

// Entries of a random U(2): e^{id} [[a, b], [-conj(b), conj(a)]].
void random_u2(std::mt19937_64& rng, Amplitude out[2][2]) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  const double theta = angle(rng) / 2.0;
  const Amplitude a = std::polar(std::cos(theta), angle(rng));
  const Amplitude b = std::polar(std::sin(theta), angle(rng));
  const Amplitude d = std::polar(1.0, angle(rng));
  out[0][0] = d * a;
  out[0][1] = d * b;
  out[1][0] = -d * std::conj(b);
  out[1][1] = d * std::conj(a);
}

}  // namespace

LocalUnitary random_unitary(std::mt19937_64& rng, std::size_t dim) {
  std::vector<Amplitude> m(dim * dim, kZero);
  for (std::size_t i = 0; i < dim; ++i) {
    m[i * dim + i] = kOne;
  }
  if (dim == 1) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    m[0] = std::polar(1.0, angle(rng));
    return LocalUnitary(1, std::move(m));
  }
  std::uniform_int_distribution<std::size_t> pick(0, dim - 1);
  Amplitude g[2][2];
  for (std::size_t round = 0; round < 3 * dim; ++round) {
    std::size_t p = pick(rng);
    std::size_t q = pick(rng);
    if (p == q) {
      continue;
    }
    random_u2(rng, g);
    for (std::size_t col = 0; col < dim; ++col) {
      const Amplitude rp = m[p * dim + col];
      const Amplitude rq = m[q * dim + col];
      m[p * dim + col] = g[0][0] * rp + g[0][1] * rq;
      m[q * dim + col] = g[1][0] * rp + g[1][1] * rq;
    }
  }
  return LocalUnitary(dim, std::move(m));
}

LocalUnitary random_zero_diagonal_unitary(std::mt19937_64& rng) {
  Amplitude a[2][2];
  Amplitude b[2][2];
  random_u2(rng, a);
  random_u2(rng, b);
  std::size_t perm[4] = {0, 1, 2, 3};
  for (std::size_t i = 3; i > 0; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i);
    std::swap(perm[i], perm[pick(rng)]);
  }
  std::vector<Amplitude> m(16, kZero);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      m[perm[r] * 4 + perm[2 + c]] = a[r][c];
      m[perm[2 + r] * 4 + perm[c]] = b[r][c];
    }
  }
  return LocalUnitary(4, std::move(m), {"w", "e", "s", "n"});
}

}  // namespace qlgasim
