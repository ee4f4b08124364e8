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

#ifndef QLGASIM_OPERATORS_HPP
#define QLGASIM_OPERATORS_HPP

#include <cstddef>
#include <random>
#include <vector>

#include "qlgasim/local_unitary.hpp"

namespace qlgasim {

// Velocity basis order is (|+1>, |-1>) everywhere: index 0 moves right.

/// [[cos t, i sin t], [i sin t, cos t]]: transmission on the diagonal.
LocalUnitary symmetric_coin(double theta);

/// symmetric_coin at 45 degrees with exact 1/sqrt(2) entries.
LocalUnitary balanced_coin();

/// The 4x4 one-particle-per-direction scattering on cell basis
/// (|00>, |01>, |10>, |11>), subcell order (left-mover, right-mover):
///   |01> -> i e^{ia} sin t |01> + e^{ia} cos t |10>
///   |10> -> e^{ia} cos t |01> + i e^{ia} sin t |10>
///   |11> -> e^{ib} |11>
/// Note the roles of sin and cos are swapped relative to symmetric_coin:
/// reflection sits on the off-diagonal here.  meyer_scattering(t + pi/2,
/// -pi/2, 0) has middle block exactly symmetric_coin(t).
LocalUnitary meyer_scattering(double theta, double alpha, double beta);

LocalUnitary pauli_x();

/// Direction reversal on (w, e, s, n): swaps w<->e and s<->n.
LocalUnitary direction_swap();

/// dim x dim identity except that `small` acts on the ordered index subset
/// `slots` (slots.size() == small.dim(), indices distinct).
LocalUnitary embed_block(std::size_t dim, const std::vector<std::size_t>& slots,
                         const LocalUnitary& small);

bool has_zero_diagonal(const LocalUnitary& u, double tol);

/// Haar-ish random unitary built from random two-level rotations; good enough
/// for property tests, makes no distribution claims.
LocalUnitary random_unitary(std::mt19937_64& rng, std::size_t dim);

/// Random 4x4 unitary whose diagonal is exactly zero: a random U(2) x U(2)
/// block anti-diagonal matrix conjugated by a random coordinate permutation.
LocalUnitary random_zero_diagonal_unitary(std::mt19937_64& rng);

}  // namespace qlgasim

#endif
