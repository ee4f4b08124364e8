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

#include "qlgasim/errors.hpp"
#include "qlgasim/operators.hpp"
#include "qlgasim/walk_model.hpp"

namespace {

using qlgasim::Amplitude;
using qlgasim::ClassifierError;
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

constexpr double kPi = 3.14159265358979323846;

WalkState basis(const WalkLabel& l) { return WalkState::basis(l); }

// Direction permutation w->s, e->n, s->w, n->e; unitary with a zero diagonal.
LocalUnitary quarter_turn() {
  std::vector<Amplitude> m(16, Amplitude(0.0, 0.0));
  m[2 * 4 + 0] = Amplitude(1.0, 0.0);
  m[3 * 4 + 1] = Amplitude(1.0, 0.0);
  m[0 * 4 + 2] = Amplitude(1.0, 0.0);
  m[1 * 4 + 3] = Amplitude(1.0, 0.0);
  return LocalUnitary(4, std::move(m));
}

}  // namespace

TEST_CASE("plain coined walk: two balanced steps from a right-mover") {
  WalkModel walk = qlgasim::build_standard(kPi / 4, Lattice::line());
  const double c = std::cos(kPi / 4);
  const double s = std::sin(kPi / 4);

  WalkState st = basis(StandardLabel{0, 1});
  st = walk.step(st);
  REQUIRE(st.support_size() == 2);
  CHECK(st.amplitude(StandardLabel{1, 1}) == Amplitude(c, 0.0));
  CHECK(st.amplitude(StandardLabel{-1, -1}) == Amplitude(0.0, s));

  st = walk.step(st);
  REQUIRE(st.support_size() == 4);
  CHECK(std::abs(st.amplitude(StandardLabel{2, 1}) - Amplitude(c * c, 0.0)) <
        1e-15);
  CHECK(std::abs(st.amplitude(StandardLabel{0, -1}) - Amplitude(0.0, c * s)) <
        1e-15);
  CHECK(std::abs(st.amplitude(StandardLabel{0, 1}) - Amplitude(-s * s, 0.0)) <
        1e-15);
  CHECK(std::abs(st.amplitude(StandardLabel{-2, -1}) - Amplitude(0.0, c * s)) <
        1e-15);
  CHECK(walk.steps_taken() == 2);
  walk.reset_step_counter();
  CHECK(walk.steps_taken() == 0);
}

TEST_CASE("plain coined walk: identity coin is exactly ballistic") {
  WalkModel walk = qlgasim::build_standard(0.0, Lattice::line());
  WalkState right = basis(StandardLabel{0, 1});
  WalkState left = basis(StandardLabel{0, -1});
  for (int t = 1; t <= 8; ++t) {
    right = walk.step_at(right, static_cast<std::uint64_t>(t - 1));
    left = walk.step_at(left, static_cast<std::uint64_t>(t - 1));
    REQUIRE(right.support_size() == 1);
    REQUIRE(left.support_size() == 1);
    CHECK(right.amplitude(StandardLabel{t, 1}) == Amplitude(1.0, 0.0));
    CHECK(left.amplitude(StandardLabel{-t, -1}) == Amplitude(1.0, 0.0));
  }
}

TEST_CASE("plain coined walk: quarter-pi-half coin reflects with phase i") {
  WalkModel walk = qlgasim::build_standard(kPi / 2, Lattice::line());
  const WalkState st = walk.step_at(basis(StandardLabel{0, 1}), 0);
  CHECK(std::abs(st.amplitude(StandardLabel{-1, -1}) - Amplitude(0.0, 1.0)) <
        1e-15);
  // cos(pi/2) rounds to ~6e-17; the transmitted branch is only fp dust.
  CHECK(std::abs(st.amplitude(StandardLabel{1, 1})) < 1e-15);
}

TEST_CASE("plain coined walk wraps on a ring") {
  WalkModel walk = qlgasim::build_standard(0.0, Lattice::ring(4));
  WalkState st = basis(StandardLabel{3, 1});
  st = walk.step_at(st, 0);
  REQUIRE(st.support_size() == 1);
  CHECK(st.amplitude(StandardLabel{0, 1}) == Amplitude(1.0, 0.0));
}

TEST_CASE("velocity-history walk: identity coin replays the stored tail") {
  // Tail bit 0 = current direction, bit 1 = previous one; set bit = -1.
  WalkModel walk = qlgasim::build_particle_history(2, {0.0},
                                                   HistoryVariant::uniform,
                                                   Lattice::line());
  WalkState st = basis(ParticleHistoryLabel{0, 2, 0b10u});
  const std::int64_t expected_x[] = {-1, 0, -1, 0};
  const std::uint32_t expected_tail[] = {0b01u, 0b10u, 0b01u, 0b10u};
  for (int t = 0; t < 4; ++t) {
    st = walk.step_at(st, static_cast<std::uint64_t>(t));
    REQUIRE(st.support_size() == 1);
    CHECK(st.amplitude(ParticleHistoryLabel{expected_x[t], 2,
                                            expected_tail[t]}) ==
          Amplitude(1.0, 0.0));
  }
}

TEST_CASE("velocity-history depth 1 reproduces the plain coined walk") {
  const double theta = 0.7;
  WalkModel plain = qlgasim::build_standard(theta, Lattice::line());
  WalkModel history = qlgasim::build_particle_history(1, {theta},
                                                      HistoryVariant::uniform,
                                                      Lattice::line());
  WalkState a = basis(StandardLabel{0, 1});
  WalkState b = basis(ParticleHistoryLabel{0, 1, 0u});
  for (int t = 0; t < 20; ++t) {
    a = plain.step_at(a, static_cast<std::uint64_t>(t));
    b = history.step_at(b, static_cast<std::uint64_t>(t));
  }
  CHECK(a.support_size() == b.support_size());
  for (const auto& [label, amp] : a.entries()) {
    const StandardLabel& l = std::get<StandardLabel>(label);
    const std::uint32_t tail = (l.p == 1) ? 0u : 1u;
    CHECK(b.amplitude(ParticleHistoryLabel{l.x, 1, tail}) == amp);
  }
}

TEST_CASE("velocity-history walk: cycled coins alternate per step") {
  // Angles (0, pi/2): step 0 leaves the tail alone, step 1 flips it.
  WalkModel cycled = qlgasim::build_particle_history(2, {0.0, kPi / 2},
                                                     HistoryVariant::cycled,
                                                     Lattice::line());
  CHECK(cycled.history_coin_for_step(0).same_entries(qlgasim::symmetric_coin(0.0),
                                                     0.0));
  CHECK(cycled.history_coin_for_step(1).same_entries(
      qlgasim::symmetric_coin(kPi / 2), 0.0));
  CHECK(cycled.history_coin_for_step(2).same_entries(qlgasim::symmetric_coin(0.0),
                                                     0.0));

  // Step 0 (identity coin) from tail 00: stays a right-mover.
  WalkState st = basis(ParticleHistoryLabel{0, 2, 0u});
  st = cycled.step_at(st, 0);
  REQUIRE(st.support_size() == 1);
  CHECK(st.amplitude(ParticleHistoryLabel{1, 2, 0u}) == Amplitude(1.0, 0.0));
  // Step 1 coins the oldest slot with sin(pi/2) ~ 1: the recycled velocity
  // flips, so the dominant branch reverses with phase i.
  st = cycled.step_at(st, 1);
  CHECK(std::abs(st.amplitude(ParticleHistoryLabel{0, 2, 0b01u}) -
                 Amplitude(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(st.amplitude(ParticleHistoryLabel{2, 2, 0u})) < 1e-15);
}

TEST_CASE("controlled-history walk: control picks transmit or reflect") {
  const LocalUnitary identity2(2, {Amplitude(1.0, 0.0), Amplitude(0.0, 0.0),
                                   Amplitude(0.0, 0.0), Amplitude(1.0, 0.0)});

  SUBCASE("reflect mode bounces between two sites") {
    WalkModel walk = qlgasim::build_mcgettrick(1, identity2,
                                               RicochetMode::reflect,
                                               RicochetMode::transmit,
                                               Lattice::line());
    WalkState st = basis(McGettrickLabel{0, 0, 1, 0u});
    st = walk.step_at(st, 0);
    REQUIRE(st.support_size() == 1);
    CHECK(st.amplitude(McGettrickLabel{-1, 0, 1, 1u}) == Amplitude(1.0, 0.0));
    st = walk.step_at(st, 1);
    REQUIRE(st.support_size() == 1);
    CHECK(st.amplitude(McGettrickLabel{0, 0, 1, 0u}) == Amplitude(1.0, 0.0));
  }

  SUBCASE("transmit mode is ballistic") {
    WalkModel walk = qlgasim::build_mcgettrick(1, identity2,
                                               RicochetMode::transmit,
                                               RicochetMode::reflect,
                                               Lattice::line());
    WalkState st = basis(McGettrickLabel{0, 0, 1, 0u});
    for (int t = 1; t <= 5; ++t) {
      st = walk.step_at(st, static_cast<std::uint64_t>(t - 1));
      REQUIRE(st.support_size() == 1);
      CHECK(st.amplitude(McGettrickLabel{t, 0, 1, 0u}) == Amplitude(1.0, 0.0));
    }
  }

  SUBCASE("depth 2 transmit replays the stored tail") {
    WalkModel walk = qlgasim::build_mcgettrick(2, identity2,
                                               RicochetMode::transmit,
                                               RicochetMode::reflect,
                                               Lattice::line());
    WalkState st = basis(McGettrickLabel{0, 0, 2, 0b10u});
    st = walk.step_at(st, 0);
    REQUIRE(st.support_size() == 1);
    CHECK(st.amplitude(McGettrickLabel{-1, 0, 2, 0b01u}) == Amplitude(1.0, 0.0));
    st = walk.step_at(st, 1);
    REQUIRE(st.support_size() == 1);
    CHECK(st.amplitude(McGettrickLabel{0, 0, 2, 0b10u}) == Amplitude(1.0, 0.0));
  }

  SUBCASE("a rotated control superposes the two modes") {
    const double theta = 0.7;
    WalkModel walk = qlgasim::build_mcgettrick(1, qlgasim::symmetric_coin(theta),
                                               RicochetMode::transmit,
                                               RicochetMode::reflect,
                                               Lattice::line());
    const WalkState st = walk.step_at(basis(McGettrickLabel{0, 0, 1, 0u}), 0);
    REQUIRE(st.support_size() == 2);
    CHECK(st.amplitude(McGettrickLabel{1, 0, 1, 0u}) ==
          Amplitude(std::cos(theta), 0.0));
    CHECK(st.amplitude(McGettrickLabel{-1, 1, 1, 1u}) ==
          Amplitude(0.0, std::sin(theta)));
  }
}

TEST_CASE("site-memory walk: zero marker angle reduces to the balanced walk") {
  // With theta_m = 0 the marker never fires, so every site stays unvisited
  // and the walk coins with the exactly balanced coin throughout.  That is
  // the plain coined walk at theta = pi/4 up to one ulp per entry.
  const int n = 8;
  WalkModel ring_walk = qlgasim::build_standard(kPi / 4, Lattice::ring(n));
  WalkModel memory_walk = qlgasim::build_site_history(n, 0.0, 1.234);
  WalkState a = basis(StandardLabel{0, 1});
  WalkState b = basis(SiteHistoryLabel{0, 1, static_cast<std::uint32_t>(n), 0u});
  for (int t = 0; t < 12; ++t) {
    a = ring_walk.step_at(a, static_cast<std::uint64_t>(t));
    b = memory_walk.step_at(b, static_cast<std::uint64_t>(t));
  }
  double mass_checked = 0.0;
  for (const auto& [label, amp] : a.entries()) {
    const StandardLabel& l = std::get<StandardLabel>(label);
    const Amplitude other = b.amplitude(
        SiteHistoryLabel{l.x, l.p, static_cast<std::uint32_t>(n), 0u});
    CHECK(std::abs(other - amp) < 1e-13);
    mass_checked += std::norm(amp);
  }
  CHECK(mass_checked == doctest::Approx(1.0));
  // No branch ever sets a marker bit.
  for (const auto& [label, amp] : b.entries()) {
    (void)amp;
    CHECK(std::get<SiteHistoryLabel>(label).mem == 0u);
  }
}

TEST_CASE("site-memory walk: a full-strength marker tags the start site") {
  const int n = 4;
  WalkModel walk = qlgasim::build_site_history(n, kPi / 2, kPi / 4);
  const WalkState st =
      walk.step_at(basis(SiteHistoryLabel{0, 1, 4, 0u}), 0);
  const double h = std::cos(kPi / 4);
  // Marker flips with amplitude i, then the visited-site coin acts: the
  // mover keeps +1 with i cos = i h and reflects with i * i sin = -h.
  CHECK(std::abs(st.amplitude(SiteHistoryLabel{1, 1, 4, 1u}) -
                 Amplitude(0.0, h)) < 1e-15);
  CHECK(std::abs(st.amplitude(SiteHistoryLabel{3, -1, 4, 1u}) -
                 Amplitude(-h, 0.0)) < 1e-15);
  // Unflipped-marker branches carry only the cos(pi/2) ~ 6e-17 residue.
  CHECK(std::abs(st.amplitude(SiteHistoryLabel{1, 1, 4, 0u})) < 1e-15);
  CHECK(std::abs(st.amplitude(SiteHistoryLabel{3, -1, 4, 0u})) < 1e-15);
}

TEST_CASE("site-memory walk: marker bit follows the walker around the ring") {
  // Identity back-action coin freezes the direction; a full marker angle
  // stamps every site on the way with amplitude i per visit.
  const int n = 4;
  WalkModel walk = qlgasim::build_site_history(n, kPi / 2, 0.0);
  WalkState st = basis(SiteHistoryLabel{0, 1, 4, 0u});
  st = walk.step_at(st, 0);
  st = walk.step_at(st, 1);
  // Dominant branch: visited sites 0 and 1, now at x = 2, phase i * i = -1.
  const Amplitude a = st.amplitude(SiteHistoryLabel{2, 1, 4, 0b011u});
  CHECK(std::abs(a - Amplitude(-1.0, 0.0)) < 1e-15);
}

TEST_CASE("four-direction walk: repeat and reverse exclusions") {
  SUBCASE("quarter-turn coin, frozen single steps") {
    WalkModel nonrep = qlgasim::build_2d(TwoDVariant::non_repeating,
                                         quarter_turn(), Lattice::plane());
    const WalkState a = nonrep.step_at(basis(TwoDLabel{0, 0, 0}), 0);
    REQUIRE(a.support_size() == 1);
    // w is sent to s, which advects toward -y.
    CHECK(a.amplitude(TwoDLabel{0, -1, 2}) == Amplitude(1.0, 0.0));

    WalkModel nonrev = qlgasim::build_2d(TwoDVariant::non_reversing,
                                         quarter_turn(), Lattice::plane());
    const WalkState b = nonrev.step_at(basis(TwoDLabel{0, 0, 0}), 0);
    REQUIRE(b.support_size() == 1);
    // The swap turns w into e first, then the quarter turn sends e to n.
    CHECK(b.amplitude(TwoDLabel{0, 1, 3}) == Amplitude(1.0, 0.0));
  }

  SUBCASE("random coins never repeat (or reverse) a direction") {
    std::mt19937_64 rng(2026u);
    const std::int64_t moved_x[] = {-1, 1, 0, 0};
    const std::int64_t moved_y[] = {0, 0, -1, 1};
    const std::uint8_t reversed[] = {1, 0, 3, 2};
    for (int trial = 0; trial < 5; ++trial) {
      const LocalUnitary c = qlgasim::random_zero_diagonal_unitary(rng);
      WalkModel nonrep = qlgasim::build_2d(TwoDVariant::non_repeating, c,
                                           Lattice::torus(8, 8));
      WalkModel nonrev = qlgasim::build_2d(TwoDVariant::non_reversing, c,
                                           Lattice::torus(8, 8));
      for (std::uint8_t d = 0; d < 4; ++d) {
        const WalkState from = basis(TwoDLabel{3, 3, d});
        const WalkState a = nonrep.step_at(from, 0);
        for (std::uint8_t out = 0; out < 4; ++out) {
          const Amplitude amp = a.amplitude(
              TwoDLabel{3 + moved_x[out], 3 + moved_y[out], out});
          if (out == d) {
            CHECK(amp == Amplitude(0.0, 0.0));
          }
        }
        const WalkState b = nonrev.step_at(from, 0);
        CHECK(b.amplitude(TwoDLabel{3 + moved_x[reversed[d]],
                                    3 + moved_y[reversed[d]],
                                    reversed[d]}) == Amplitude(0.0, 0.0));
      }
    }
  }
}

TEST_CASE("every walk family preserves the norm of random states") {
  std::mt19937_64 rng(99u);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto randomized = [&](std::vector<WalkLabel> labels) {
    WalkState s(0.0);
    for (const WalkLabel& l : labels) {
      s.add(l, Amplitude(u(rng), u(rng)));
    }
    s.normalize();
    return s;
  };

  struct Case {
    WalkModel model;
    WalkState init;
  };
  std::vector<Case> cases;
  cases.push_back({qlgasim::build_standard(0.7, Lattice::line()),
                   randomized({StandardLabel{0, 1}, StandardLabel{2, -1},
                               StandardLabel{-1, 1}})});
  cases.push_back({qlgasim::build_particle_history(2, {0.3, 1.1},
                                                   HistoryVariant::cycled,
                                                   Lattice::line()),
                   randomized({ParticleHistoryLabel{0, 2, 0u},
                               ParticleHistoryLabel{1, 2, 3u},
                               ParticleHistoryLabel{-2, 2, 2u}})});
  cases.push_back({qlgasim::build_mcgettrick(1, qlgasim::symmetric_coin(0.4),
                                             RicochetMode::transmit,
                                             RicochetMode::reflect,
                                             Lattice::line()),
                   randomized({McGettrickLabel{0, 0, 1, 0u},
                               McGettrickLabel{0, 1, 1, 1u}})});
  cases.push_back({qlgasim::build_site_history(6, 0.5, 0.9),
                   randomized({SiteHistoryLabel{0, 1, 6, 0u},
                               SiteHistoryLabel{3, -1, 6, 5u}})});
  cases.push_back({qlgasim::build_2d(TwoDVariant::non_reversing, quarter_turn(),
                                     Lattice::torus(6, 6)),
                   randomized({TwoDLabel{0, 0, 0}, TwoDLabel{2, 3, 2}})});

  for (Case& c : cases) {
    WalkState st = c.init;
    for (int t = 0; t < 6; ++t) {
      st = c.model.step(st);
    }
    CHECK(std::abs(qlgasim::norm2(st) - 1.0) < 1e-13);
    CHECK(c.model.steps_taken() == 6);
  }
}

TEST_CASE("stepping rejects labels from a different family or parameters") {
  WalkModel plain = qlgasim::build_standard(0.3, Lattice::line());
  CHECK_THROWS_AS(plain.step_at(basis(TwoDLabel{0, 0, 0}), 0), ClassifierError);
  CHECK_THROWS_AS(plain.step_at(basis(StandardLabel{0, 2}), 0), ClassifierError);

  WalkModel history = qlgasim::build_particle_history(2, {0.3},
                                                      HistoryVariant::uniform,
                                                      Lattice::line());
  CHECK_THROWS_AS(history.step_at(basis(ParticleHistoryLabel{0, 3, 0u}), 0),
                  ClassifierError);
  CHECK_THROWS_AS(history.step_at(basis(ParticleHistoryLabel{0, 2, 0b100u}), 0),
                  ClassifierError);

  WalkModel memory = qlgasim::build_site_history(4, 0.5, 0.9);
  CHECK_THROWS_AS(memory.step_at(basis(SiteHistoryLabel{4, 1, 4, 0u}), 0),
                  ClassifierError);
  CHECK_THROWS_AS(memory.step_at(basis(SiteHistoryLabel{0, 1, 8, 0u}), 0),
                  ClassifierError);

  WalkModel planar = qlgasim::build_2d(TwoDVariant::non_repeating, quarter_turn(),
                                       Lattice::plane());
  CHECK_THROWS_AS(planar.step_at(basis(TwoDLabel{0, 0, 4}), 0), ClassifierError);
}

TEST_CASE("builders validate their lattices and parameters") {
  CHECK_THROWS_AS(qlgasim::build_standard(0.3, Lattice::plane()), Error);
  CHECK_THROWS_AS(qlgasim::build_particle_history(0, {0.3},
                                                  HistoryVariant::uniform,
                                                  Lattice::line()),
                  Error);
  CHECK_THROWS_AS(qlgasim::build_particle_history(21, {0.3},
                                                  HistoryVariant::uniform,
                                                  Lattice::line()),
                  Error);
  // Cycled scheduling needs exactly history_len angles.
  CHECK_THROWS_AS(qlgasim::build_particle_history(3, {0.1, 0.2},
                                                  HistoryVariant::cycled,
                                                  Lattice::line()),
                  Error);
  CHECK_THROWS_AS(qlgasim::build_mcgettrick(1, qlgasim::direction_swap(),
                                            RicochetMode::transmit,
                                            RicochetMode::reflect,
                                            Lattice::line()),
                  Error);
  CHECK_THROWS_AS(qlgasim::build_site_history(1, 0.5, 0.9), Error);
  CHECK_THROWS_AS(qlgasim::build_site_history(65, 0.5, 0.9), Error);
  CHECK_THROWS_AS(qlgasim::build_2d(TwoDVariant::non_repeating, quarter_turn(),
                                    Lattice::ring(8)),
                  Error);
  // The direction coin must have an exactly zero diagonal.
  const LocalUnitary identity4(
      4, {Amplitude(1.0, 0.0), Amplitude(0.0, 0.0), Amplitude(0.0, 0.0),
          Amplitude(0.0, 0.0), Amplitude(0.0, 0.0), Amplitude(1.0, 0.0),
          Amplitude(0.0, 0.0), Amplitude(0.0, 0.0), Amplitude(0.0, 0.0),
          Amplitude(0.0, 0.0), Amplitude(1.0, 0.0), Amplitude(0.0, 0.0),
          Amplitude(0.0, 0.0), Amplitude(0.0, 0.0), Amplitude(0.0, 0.0),
          Amplitude(1.0, 0.0)});
  CHECK_THROWS_AS(qlgasim::build_2d(TwoDVariant::non_repeating, identity4,
                                    Lattice::plane()),
                  Error);

  // The site-memory builder fixes its own ring.
  CHECK(qlgasim::build_site_history(8, 0.5, 0.9).lattice() == Lattice::ring(8));
}

TEST_CASE("stepping the empty state yields the empty state") {
  WalkModel walk = qlgasim::build_standard(0.7, Lattice::line());
  const WalkState st = walk.step_at(WalkState(), 0);
  CHECK(st.empty());
}
