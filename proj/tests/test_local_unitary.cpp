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

#include <cmath>
#include <vector>

#include <doctest.h>

#include "qlgasim/errors.hpp"
#include "qlgasim/local_unitary.hpp"
#include "qlgasim/operators.hpp"

namespace {

using qlgasim::Amplitude;
using qlgasim::Error;
using qlgasim::LocalUnitary;

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("default construction is the 1x1 identity") {
  const LocalUnitary u;
  CHECK(u.dim() == 1);
  CHECK(u.at(0, 0) == Amplitude(1.0, 0.0));
  CHECK(u.unitarity_defect() == 0.0);
}

TEST_CASE("construction validates dimensions and unitarity") {
  CHECK_THROWS_AS(LocalUnitary(2, {Amplitude(1.0, 0.0)}), Error);
  // Upper-triangular with a 1 off the diagonal is not unitary.
  CHECK_THROWS_AS(LocalUnitary(2, {Amplitude(1.0, 0.0), Amplitude(1.0, 0.0),
                                   Amplitude(0.0, 0.0), Amplitude(1.0, 0.0)}),
                  Error);
  CHECK_THROWS_AS(LocalUnitary(0, {}), Error);
}

TEST_CASE("at() reads row-major entries") {
  const LocalUnitary s = qlgasim::symmetric_coin(0.3);
  CHECK(s.at(0, 0) == Amplitude(std::cos(0.3), 0.0));
  CHECK(s.at(0, 1) == Amplitude(0.0, std::sin(0.3)));
  CHECK(s.at(1, 0) == Amplitude(0.0, std::sin(0.3)));
  CHECK(s.at(1, 1) == Amplitude(std::cos(0.3), 0.0));
}

TEST_CASE("compose_after multiplies on the right") {
  // compose_after(rhs) applies rhs first: (A.compose_after(B)) v = A (B v).
  // Use a pair that does not commute so the order is actually observable.
  const double c = std::cos(0.3);
  const double n = std::sin(0.3);
  const LocalUnitary s = qlgasim::symmetric_coin(0.3);
  const LocalUnitary z(2, {Amplitude(1.0, 0.0), Amplitude(0.0, 0.0),
                           Amplitude(0.0, 0.0), Amplitude(0.0, 1.0)});

  // S*Z: phase first, then the coin.  Column 1 = S (i |1>) = (-sin, i cos).
  const LocalUnitary sz = s.compose_after(z);
  CHECK(sz.at(0, 0) == Amplitude(c, 0.0));
  CHECK(sz.at(1, 0) == Amplitude(0.0, n));
  CHECK(sz.at(0, 1) == Amplitude(-n, 0.0));
  CHECK(sz.at(1, 1) == Amplitude(0.0, c));

  // Z*S: coin first, then the phase.  Column 0 = Z (cos, i sin) = (cos, -sin).
  const LocalUnitary zs = z.compose_after(s);
  CHECK(zs.at(0, 0) == Amplitude(c, 0.0));
  CHECK(zs.at(1, 0) == Amplitude(-n, 0.0));
  CHECK(zs.at(0, 1) == Amplitude(0.0, n));
  CHECK(zs.at(1, 1) == Amplitude(0.0, c));

  CHECK(std::abs(sz.at(1, 0) - zs.at(1, 0)) > 0.1);
}

TEST_CASE("compose_after rejects mismatched dimensions") {
  const LocalUnitary small = qlgasim::pauli_x();
  const LocalUnitary big = qlgasim::direction_swap();
  CHECK_THROWS_AS(small.compose_after(big), Error);
}

TEST_CASE("adjoint inverts: U adjoint(U) = I, and S(theta)^+ = S(-theta)") {
  const LocalUnitary s = qlgasim::symmetric_coin(0.7);
  const LocalUnitary prod = s.compose_after(s.adjoint());
  CHECK(prod.unitarity_defect() < 1e-15);
  CHECK(std::abs(prod.at(0, 0) - Amplitude(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(prod.at(0, 1)) < 1e-15);
  CHECK(s.adjoint().same_entries(qlgasim::symmetric_coin(-0.7), 1e-15));
}

TEST_CASE("unitarity_defect measures deviation from the identity Gram matrix") {
  CHECK(qlgasim::symmetric_coin(1.1).unitarity_defect() < 1e-15);
  CHECK(qlgasim::direction_swap().unitarity_defect() == 0.0);
}

TEST_CASE("fixes_first_basis_vector detects a clean vacuum column") {
  CHECK(qlgasim::meyer_scattering(0.4, 0.2, 0.9).fixes_first_basis_vector());
  CHECK(!qlgasim::pauli_x().fixes_first_basis_vector());
  // A phase on the first column also disqualifies.
  const LocalUnitary phase(
      2, {Amplitude(0.0, 1.0), Amplitude(0.0, 0.0), Amplitude(0.0, 0.0),
          Amplitude(1.0, 0.0)});
  CHECK(!phase.fixes_first_basis_vector());
}

TEST_CASE("same_entries compares with tolerance") {
  const LocalUnitary a = qlgasim::symmetric_coin(0.5);
  const LocalUnitary b = qlgasim::symmetric_coin(0.5 + 1e-13);
  CHECK(a.same_entries(a, 0.0));
  CHECK(a.same_entries(b, 1e-10));
  CHECK(!a.same_entries(b, 1e-16));
  CHECK(!a.same_entries(qlgasim::direction_swap(), 1.0));  // dim mismatch
}

TEST_CASE("raw() exposes interleaved row-major doubles") {
  const LocalUnitary s = qlgasim::symmetric_coin(0.3);
  const double* raw = s.raw();
  CHECK(raw[0] == std::cos(0.3));   // (0,0) re
  CHECK(raw[1] == 0.0);             // (0,0) im
  CHECK(raw[2] == 0.0);             // (0,1) re
  CHECK(raw[3] == std::sin(0.3));   // (0,1) im
}
