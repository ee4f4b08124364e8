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
#include <limits>

#include <doctest.h>

#include "qlgasim/errors.hpp"
#include "qlgasim/operators.hpp"
#include "qlgasim/sparse_state.hpp"

namespace {

using qlgasim::Amplitude;
using qlgasim::ClassifierError;
using qlgasim::Error;
using qlgasim::LabelCollisionError;
using qlgasim::LocalUnitary;
using qlgasim::SparseState;

using IntState = SparseState<int>;

// Minimal classifier: labels 2k and 2k+1 form class k; one shared coin.
struct PairClassifier {
  using Key = int;
  const LocalUnitary& coin;

  std::pair<Key, std::size_t> classify(const int& label) const {
    return {label / 2, static_cast<std::size_t>(label % 2)};
  }
  int label_of(const Key& key, std::size_t index) const {
    return key * 2 + static_cast<int>(index);
  }
  const LocalUnitary& unitary(const Key&) const { return coin; }
};

// A deliberately broken classifier sending both class members to index 0.
struct CollidingClassifier {
  using Key = int;
  const LocalUnitary& coin;

  std::pair<Key, std::size_t> classify(const int&) const { return {0, 0}; }
  int label_of(const Key&, std::size_t index) const {
    return static_cast<int>(index);
  }
  const LocalUnitary& unitary(const Key&) const { return coin; }
};

}  // namespace

TEST_CASE("amplitudes accumulate and absent labels read as zero") {
  IntState s;
  CHECK(s.empty());
  s.add(3, Amplitude(0.25, 0.0));
  s.add(3, Amplitude(0.25, 0.5));
  s.add(-1, Amplitude(0.0, 1.0));
  CHECK(s.amplitude(3) == Amplitude(0.5, 0.5));
  CHECK(s.amplitude(7) == Amplitude(0.0, 0.0));
  CHECK(s.contains(-1));
  CHECK(!s.contains(7));
  CHECK(s.support_size() == 2);
}

TEST_CASE("non-finite amplitudes are rejected") {
  IntState s;
  CHECK_THROWS_AS(
      s.add(0, Amplitude(std::numeric_limits<double>::infinity(), 0.0)), Error);
  CHECK_THROWS_AS(
      s.add(0, Amplitude(0.0, std::numeric_limits<double>::quiet_NaN())), Error);
}

TEST_CASE("norm2 and normalize") {
  IntState s;
  s.add(0, Amplitude(3.0, 0.0));
  s.add(1, Amplitude(0.0, 4.0));
  CHECK(s.norm2() == doctest::Approx(25.0));
  s.normalize();
  CHECK(s.norm2() == doctest::Approx(1.0));
  // normalize scales by a reciprocal, so allow one ulp around 3/5.
  CHECK(std::abs(s.amplitude(0) - Amplitude(0.6, 0.0)) < 1e-15);

  IntState zero;
  CHECK_THROWS_AS(zero.normalize(), Error);
}

TEST_CASE("pruning removes at-most-epsilon amplitudes") {
  IntState s;
  s.add(0, Amplitude(0.5, 0.0));
  const IntState pruned = prune(s, 0.6);
  CHECK(pruned.empty());

  IntState keep;
  keep.add(0, Amplitude(0.5, 0.0));
  keep.add(1, Amplitude(0.1, 0.0));
  const IntState kept = prune(keep, 0.25);
  CHECK(kept.support_size() == 1);
  CHECK(kept.amplitude(0) == Amplitude(0.5, 0.0));

  // epsilon = 0 removes exact zeros only.
  IntState zeros;
  zeros.add(2, Amplitude(0.0, 0.0));
  zeros.add(3, Amplitude(1e-300, 0.0));
  zeros.prune_in_place(0.0);
  CHECK(!zeros.contains(2));
  CHECK(zeros.contains(3));

  CHECK_THROWS_AS(s.prune_in_place(-1.0), Error);
}

TEST_CASE("prune_epsilon must be non-negative and is carried by permute") {
  CHECK_THROWS_AS(IntState(-0.5), Error);
  IntState s(0.125);
  s.add(4, Amplitude(1.0, 0.0));
  const IntState moved = permute(s, [](int l) { return l + 1; });
  CHECK(moved.prune_epsilon() == 0.125);
  CHECK(moved.amplitude(5) == Amplitude(1.0, 0.0));
}

TEST_CASE("sorted_entries orders by label") {
  IntState s;
  s.add(5, Amplitude(1.0, 0.0));
  s.add(-2, Amplitude(2.0, 0.0));
  s.add(3, Amplitude(3.0, 0.0));
  const auto rows = s.sorted_entries();
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].first == -2);
  CHECK(rows[1].first == 3);
  CHECK(rows[2].first == 5);
}

TEST_CASE("inner_product conjugates its first argument") {
  IntState a;
  a.add(0, Amplitude(0.0, 1.0));  // |a> = i|0>
  IntState b;
  b.add(0, Amplitude(1.0, 0.0));
  b.add(1, Amplitude(5.0, 0.0));  // extra support must not contribute
  CHECK(inner_product(a, b) == Amplitude(0.0, -1.0));
  CHECK(inner_product(b, a) == Amplitude(0.0, 1.0));
}

TEST_CASE("permute moves amplitudes without arithmetic") {
  IntState s;
  s.add(0, Amplitude(0.3, 0.7));
  s.add(1, Amplitude(-0.4, 0.2));
  const IntState shifted = permute(s, [](int l) { return l + 10; });
  CHECK(shifted.amplitude(10) == Amplitude(0.3, 0.7));
  CHECK(shifted.amplitude(11) == Amplitude(-0.4, 0.2));
  CHECK(shifted.norm2() == s.norm2());
}

TEST_CASE("permute detects label collisions") {
  IntState s;
  s.add(0, Amplitude(1.0, 0.0));
  s.add(1, Amplitude(1.0, 0.0));
  CHECK_THROWS_AS(permute(s, [](int) { return 42; }), LabelCollisionError);
}

TEST_CASE("scatter applies the class unitary in place") {
  const LocalUnitary coin = qlgasim::symmetric_coin(3.14159265358979323846 / 4);
  IntState s;
  s.add(0, Amplitude(1.0, 0.0));  // class 0, index 0
  const IntState out = scatter(s, PairClassifier{coin});
  const double c = std::cos(3.14159265358979323846 / 4);
  CHECK(std::abs(out.amplitude(0) - Amplitude(c, 0.0)) < 1e-15);
  CHECK(std::abs(out.amplitude(1) - Amplitude(0.0, c)) < 1e-15);
  CHECK(out.norm2() == doctest::Approx(1.0));
}

TEST_CASE("scatter handles many classes against a dense expansion") {
  const LocalUnitary coin = qlgasim::symmetric_coin(0.3);
  IntState s;
  s.add(0, Amplitude(0.5, 0.0));
  s.add(1, Amplitude(0.0, 0.5));
  s.add(4, Amplitude(-0.5, 0.0));  // class 2, index 0; index 1 stays empty
  s.add(7, Amplitude(0.0, -0.5));  // class 3, index 1; index 0 stays empty
  const IntState out = scatter(s, PairClassifier{coin});

  auto expect = [&](int even_label, Amplitude a0, Amplitude a1) {
    const Amplitude e0 = coin.at(0, 0) * a0 + coin.at(0, 1) * a1;
    const Amplitude e1 = coin.at(1, 0) * a0 + coin.at(1, 1) * a1;
    CHECK(std::abs(out.amplitude(even_label) - e0) < 1e-15);
    CHECK(std::abs(out.amplitude(even_label + 1) - e1) < 1e-15);
  };
  expect(0, Amplitude(0.5, 0.0), Amplitude(0.0, 0.5));
  expect(4, Amplitude(-0.5, 0.0), Amplitude(0.0, 0.0));
  expect(6, Amplitude(0.0, 0.0), Amplitude(0.0, -0.5));
  CHECK(out.norm2() == doctest::Approx(s.norm2()));
}

TEST_CASE("scatter rejects duplicate local indices within a class") {
  const LocalUnitary coin = qlgasim::symmetric_coin(0.3);
  IntState s;
  s.add(0, Amplitude(1.0, 0.0));
  s.add(1, Amplitude(1.0, 0.0));
  CHECK_THROWS_AS(scatter(s, CollidingClassifier{coin}), ClassifierError);
}

TEST_CASE("scatter rejects out-of-range local indices") {
  struct BigIndexClassifier {
    using Key = int;
    const LocalUnitary& coin;
    std::pair<Key, std::size_t> classify(const int&) const { return {0, 5}; }
    int label_of(const Key&, std::size_t index) const {
      return static_cast<int>(index);
    }
    const LocalUnitary& unitary(const Key&) const { return coin; }
  };
  const LocalUnitary coin = qlgasim::symmetric_coin(0.3);
  IntState s;
  s.add(9, Amplitude(1.0, 0.0));
  CHECK_THROWS_AS(scatter(s, BigIndexClassifier{coin}), ClassifierError);
}

TEST_CASE("basis factory makes a unit state") {
  const IntState s = IntState::basis(11);
  CHECK(s.support_size() == 1);
  CHECK(s.amplitude(11) == Amplitude(1.0, 0.0));
}
