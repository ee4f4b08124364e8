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
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <doctest.h>

#include "qlgasim/dense_oracle.hpp"
#include "qlgasim/errors.hpp"
#include "qlgasim/operators.hpp"
#include "qlgasim/walk_model.hpp"

namespace {

using qlgasim::Amplitude;
using qlgasim::DenseWalkOracle;
using qlgasim::Error;
using qlgasim::HistoryVariant;
using qlgasim::Lattice;
using qlgasim::LocalUnitary;
using qlgasim::McGettrickLabel;
using qlgasim::ParticleHistoryLabel;
using qlgasim::RicochetMode;
using qlgasim::SiteHistoryLabel;
using qlgasim::StandardLabel;
using qlgasim::TwoDLabel;
using qlgasim::TwoDVariant;
using qlgasim::WalkLabel;
using qlgasim::WalkModel;
using qlgasim::WalkState;

LocalUnitary quarter_turn4() {
  std::vector<Amplitude> m(16, Amplitude(0.0, 0.0));
  m[2 * 4 + 0] = Amplitude(1.0, 0.0);
  m[3 * 4 + 1] = Amplitude(1.0, 0.0);
  m[0 * 4 + 2] = Amplitude(1.0, 0.0);
  m[1 * 4 + 3] = Amplitude(1.0, 0.0);
  return LocalUnitary(4, std::move(m));
}

double max_abs_diff(const std::vector<Amplitude>& a,
                    const std::vector<Amplitude>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

// Worst deviation between the model's sparse step and the oracle over every
// basis vector of the enumerated space.
double basis_deviation(const WalkModel& model, const DenseWalkOracle& oracle,
                       std::uint64_t step_index = 0) {
  double worst = 0.0;
  for (std::size_t i = 0; i < oracle.dim(); ++i) {
    std::vector<Amplitude> e(oracle.dim(), Amplitude(0.0, 0.0));
    e[i] = Amplitude(1.0, 0.0);
    const std::vector<Amplitude> dense = oracle.apply_step(e, step_index);
    const WalkState sparse =
        model.step_at(WalkState::basis(oracle.labels()[i]), step_index);
    worst = std::max(worst, max_abs_diff(oracle.to_vector(sparse), dense));
  }
  return worst;
}

}  // namespace

TEST_CASE("oracle step matrices are unitary and match the sparse step") {
  struct Case {
    const char* name;
    WalkModel model;
    Lattice truncation;
  };
  const Case cases[] = {
      {"plain", qlgasim::build_standard(0.7, Lattice::ring(6)), Lattice::ring(6)},
      {"velocity history",
       qlgasim::build_particle_history(2, {0.9}, HistoryVariant::uniform,
                                       Lattice::ring(6)),
       Lattice::ring(6)},
      {"controlled history",
       qlgasim::build_mcgettrick(1, qlgasim::symmetric_coin(0.4),
                                 RicochetMode::transmit, RicochetMode::reflect,
                                 Lattice::ring(4)),
       Lattice::ring(4)},
      {"site memory", qlgasim::build_site_history(4, 0.5, 0.9), Lattice::ring(4)},
      {"four direction",
       qlgasim::build_2d(TwoDVariant::non_repeating, quarter_turn4(),
                         Lattice::torus(4, 4)),
       Lattice::torus(4, 4)},
  };

  for (const Case& c : cases) {
    CAPTURE(c.name);
    const DenseWalkOracle oracle(c.model, c.truncation);
    // Construction of a LocalUnitary revalidates unitarity on its own.
    const LocalUnitary u = oracle.step_matrix();
    CHECK(u.unitarity_defect() < 1e-13);
    CHECK(basis_deviation(c.model, oracle) == 0.0);
    CHECK(u.same_entries(qlgasim::dense_operator(c.model, c.truncation), 0.0));

    // Random superpositions agree up to accumulation order.
    std::mt19937_64 rng(77u);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<Amplitude> v(oracle.dim());
      WalkState s(0.0);
      for (std::size_t i = 0; i < oracle.dim(); ++i) {
        v[i] = Amplitude(dist(rng), dist(rng));
        s.add(oracle.labels()[i], v[i]);
      }
      CHECK(max_abs_diff(oracle.to_vector(c.model.step_at(s, 0)),
                         oracle.apply_step(v, 0)) < 1e-12);
    }
  }
}

TEST_CASE("oracle honors the per-step coin schedule") {
  const WalkModel cycled = qlgasim::build_particle_history(
      2, {0.2, 0.9}, HistoryVariant::cycled, Lattice::ring(4));
  const DenseWalkOracle oracle(cycled, Lattice::ring(4));
  for (std::uint64_t step : {0ull, 1ull, 2ull, 3ull}) {
    CHECK(basis_deviation(cycled, oracle, step) == 0.0);
  }
  // Step parity selects genuinely different matrices.
  const LocalUnitary u0 = oracle.step_matrix(0);
  const LocalUnitary u1 = oracle.step_matrix(1);
  const LocalUnitary u2 = oracle.step_matrix(2);
  CHECK(!u0.same_entries(u1, 1e-3));
  CHECK(u0.same_entries(u2, 0.0));
}

TEST_CASE("windowed truncation tracks an unbounded walk until the seam") {
  const WalkModel line_walk = qlgasim::build_particle_history(
      2, {0.8}, HistoryVariant::uniform, Lattice::line());
  const Lattice window = Lattice::ring_range(-4, 4);
  const DenseWalkOracle oracle(line_walk, window);
  CHECK(oracle.dim() == 9 * 4);

  WalkState sparse = WalkState::basis(ParticleHistoryLabel{0, 2, 0u});
  std::vector<Amplitude> dense(oracle.dim(), Amplitude(0.0, 0.0));
  dense[*oracle.index_of(ParticleHistoryLabel{0, 2, 0u})] = Amplitude(1.0, 0.0);

  for (int t = 0; t < 3; ++t) {
    sparse = line_walk.step_at(sparse, static_cast<std::uint64_t>(t));
    dense = oracle.apply_step(dense, static_cast<std::uint64_t>(t));
    CHECK(!oracle.touches_seam(sparse));
    CHECK(max_abs_diff(oracle.to_vector(sparse), dense) == 0.0);
  }
  // Step 4 reaches |x| = 4: the window boundary, where wrapping begins.
  sparse = line_walk.step_at(sparse, 3);
  CHECK(oracle.touches_seam(sparse));
}

TEST_CASE("oracle scales past the dense-matrix cap via apply_step") {
  const WalkModel big = qlgasim::build_site_history(8, 0.5, 0.9);
  const DenseWalkOracle oracle(big, Lattice::ring(8));
  REQUIRE(oracle.dim() == 8ull * 2ull * 256ull);  // 4096 > matrix cap
  CHECK_THROWS_AS((void)oracle.step_matrix(), Error);

  std::vector<Amplitude> v(oracle.dim(), Amplitude(0.0, 0.0));
  v[*oracle.index_of(SiteHistoryLabel{0, 1, 8, 0u})] = Amplitude(1.0, 0.0);
  double n2 = 0.0;
  for (const Amplitude& a : oracle.apply_step(v)) {
    n2 += std::norm(a);
  }
  CHECK(std::abs(n2 - 1.0) < 1e-13);
}

TEST_CASE("label enumeration: index_of and vector round trips") {
  const WalkModel walk = qlgasim::build_mcgettrick(
      1, qlgasim::symmetric_coin(0.4), RicochetMode::transmit,
      RicochetMode::reflect, Lattice::ring(4));
  const DenseWalkOracle oracle(walk, Lattice::ring(4));
  REQUIRE(oracle.dim() == 4ull * 2ull * 2ull);

  for (std::size_t i = 0; i < oracle.dim(); ++i) {
    const auto idx = oracle.index_of(oracle.labels()[i]);
    REQUIRE(idx.has_value());
    CHECK(*idx == i);
  }
  // Labels outside the enumerated space have no index.
  CHECK(!oracle.index_of(McGettrickLabel{7, 0, 1, 0u}).has_value());
  CHECK(!oracle.index_of(StandardLabel{0, 1}).has_value());

  // to_vector and to_state invert each other without touching amplitudes.
  WalkState s(0.0);
  s.add(McGettrickLabel{1, 0, 1, 1u}, Amplitude(0.3, -0.2));
  s.add(McGettrickLabel{3, 1, 1, 0u}, Amplitude(-0.1, 0.7));
  const std::vector<Amplitude> v = oracle.to_vector(s);
  const WalkState back = oracle.to_state(v);
  CHECK(back.support_size() == 2);
  CHECK(back.amplitude(McGettrickLabel{1, 0, 1, 1u}) == Amplitude(0.3, -0.2));
  CHECK(back.amplitude(McGettrickLabel{3, 1, 1, 0u}) == Amplitude(-0.1, 0.7));

  // Support outside the window is rejected.
  WalkState outside(0.0);
  outside.add(McGettrickLabel{5, 0, 1, 0u}, Amplitude(1.0, 0.0));
  CHECK_THROWS_AS((void)oracle.to_vector(outside), Error);
  CHECK_THROWS_AS((void)oracle.apply_step(std::vector<Amplitude>(3)), Error);
}

TEST_CASE("oracle construction validates the truncation") {
  const WalkModel walk = qlgasim::build_standard(0.7, Lattice::ring(6));
  // Must enumerate a finite lattice.
  CHECK_THROWS_AS(DenseWalkOracle(walk, Lattice::line()), Error);
  // A finite-lattice walk must be enumerated over its own lattice.
  CHECK_THROWS_AS(DenseWalkOracle(walk, Lattice::ring(8)), Error);
  // Dimensionality must match.
  CHECK_THROWS_AS(DenseWalkOracle(walk, Lattice::torus(4, 4)), Error);
  const WalkModel planar = qlgasim::build_2d(TwoDVariant::non_repeating,
                                             quarter_turn4(), Lattice::plane());
  CHECK_THROWS_AS(DenseWalkOracle(planar, Lattice::ring(8)), Error);
  // A line walk over a window is fine.
  const WalkModel free_walk = qlgasim::build_standard(0.7, Lattice::line());
  CHECK(DenseWalkOracle(free_walk, Lattice::ring_range(-3, 3)).dim() == 14);
}
