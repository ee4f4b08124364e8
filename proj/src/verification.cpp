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

#include "qlgasim/verification.hpp"

#include <unistd.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "qlgasim/analysis.hpp"
#include "qlgasim/correspondence.hpp"
#include "qlgasim/dense_oracle.hpp"
#include "qlgasim/errors.hpp"
#include "qlgasim/harness.hpp"
#include "qlgasim/operators.hpp"
#include "qlgasim/qlga.hpp"
#include "qlgasim/walk_model.hpp"

namespace qlgasim {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v) { return format_double(v); }

// --- random states over a finite-lattice model ------------------------------

WalkLabel random_label(const WalkModel& model, const std::vector<Coord>& coords,
                       std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, coords.size() - 1);
  const Coord c = coords[pick(rng)];
  const auto flip = [&rng]() { return (rng() & 1u) != 0 ? -1 : 1; };
  switch (model.kind()) {
    case WalkKind::standard:
      return StandardLabel{c.x, flip()};
    case WalkKind::particle_history: {
      const auto& p = std::get<ParticleHistoryParams>(model.params());
      std::uniform_int_distribution<std::uint32_t> tail(
          0, (1u << p.history_len) - 1);
      return ParticleHistoryLabel{c.x, p.history_len, tail(rng)};
    }
    case WalkKind::mcgettrick: {
      const auto& p = std::get<McGettrickParams>(model.params());
      std::uniform_int_distribution<std::uint32_t> tail(
          0, (1u << p.history_len) - 1);
      return McGettrickLabel{c.x, static_cast<std::uint8_t>(rng() & 1u),
                             p.history_len, tail(rng)};
    }
    case WalkKind::site_history: {
      const auto& p = std::get<SiteHistoryParams>(model.params());
      std::uniform_int_distribution<std::uint64_t> mem(
          0, (p.n_sites >= 64 ? ~0ull : (1ull << p.n_sites) - 1));
      return SiteHistoryLabel{c.x, flip(), p.n_sites, mem(rng)};
    }
    case WalkKind::two_d:
      return TwoDLabel{c.x, c.y, static_cast<std::uint8_t>(rng() & 3u)};
  }
  throw Error("unknown walk kind");  // unreachable
}

WalkState random_walk_state(const WalkModel& model, std::mt19937_64& rng,
                            int support) {
  const std::vector<Coord> coords = model.lattice().all_coords();
  std::normal_distribution<double> gauss(0.0, 1.0);
  WalkState s(0.0);
  int added = 0;
  for (int guard = 0; added < support && guard < 200 * support; ++guard) {
    const WalkLabel l = random_label(model, coords, rng);
    if (s.contains(l)) {
      continue;
    }
    s.add(l, Amplitude(gauss(rng), gauss(rng)));
    ++added;
  }
  s.normalize();
  return s;
}

std::string scoped_temp_dir(const char* tag) {
  const std::filesystem::path root =
      std::filesystem::temp_directory_path() /
      (std::string("qlgasim-") + tag + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(root);
  std::filesystem::create_directories(root);
  return root.string();
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const std::string& value) : name_(name) {
    if (const char* old = std::getenv(name)) {
      had_old_ = true;
      old_ = old;
    }
    ::setenv(name, value.c_str(), 1);
  }
  ~ScopedEnv() {
    if (had_old_) {
      ::setenv(name_, old_.c_str(), 1);
    } else {
      ::unsetenv(name_);
    }
  }
  ScopedEnv(const ScopedEnv&) = delete;
  ScopedEnv& operator=(const ScopedEnv&) = delete;

 private:
  const char* name_;
  bool had_old_ = false;
  std::string old_;
};

}  // namespace

// --- check 1: unitarity ------------------------------------------------------

CheckResult acceptance_unitarity() {
  const double tol = 1e-12;
  std::vector<LocalUnitary> ops;

  for (int k = 0; k < 20; ++k) {
    ops.push_back(symmetric_coin(2.0 * kPi * k / 20.0));
  }
  ops.push_back(balanced_coin());
  ops.push_back(pauli_x());
  ops.push_back(direction_swap());

  for (double theta : {0.0, kPi / 6, kPi / 4, kPi / 3, kPi / 2}) {
    for (double alpha : {0.0, kPi / 3, kPi}) {
      for (double beta : {0.0, kPi / 2, kPi}) {
        ops.push_back(meyer_scattering(theta, alpha, beta));
      }
    }
  }

  for (int tail = 1; tail <= 3; ++tail) {
    const LocalUnitary mem = particle_history_memory(tail);
    const LocalUnitary ric_a = particle_history_ricochet(tail, symmetric_coin(kPi / 4));
    const LocalUnitary ric_b = particle_history_ricochet(tail, symmetric_coin(kPi / 3));
    ops.push_back(mem.compose_after(ric_a));
    ops.push_back(mem.compose_after(ric_b));
    ops.push_back(mem);
    ops.push_back(ric_a);
    ops.push_back(ric_b);
  }

  for (double theta_m : {0.0, kPi / 7, kPi / 4, kPi / 2}) {
    ops.push_back(site_history_memory(theta_m));
  }
  for (double theta_b : {kPi / 6, kPi / 4, 1.0}) {
    ops.push_back(site_history_ricochet(theta_b));
  }
  ops.push_back(build_site_history_rule(kPi / 4, kPi / 3, 8).local_s());

  std::mt19937_64 rng(20260814u);
  for (int i = 0; i < 5; ++i) {
    const LocalUnitary c = random_zero_diagonal_unitary(rng);
    ops.push_back(c);
    ops.push_back(c.compose_after(direction_swap()));
    ops.push_back(random_unitary(rng, 2));
    ops.push_back(random_unitary(rng, 4));
  }

  double worst = 0.0;
  for (const LocalUnitary& u : ops) {
    worst = std::max(worst, u.unitarity_defect());
  }

  CheckResult r;
  r.name = "unitarity";
  r.passed = worst < tol;
  r.detail = std::to_string(ops.size()) + " operators, worst |U'U - I| = " +
             fmt(worst) + " (tol " + fmt(tol) + ")";
  return r;
}

// --- check 2: single-particle sector conservation ----------------------------

CheckResult acceptance_sector_conservation() {
  const double tol = 1e-12;
  std::mt19937_64 rng(31337u);
  std::mt19937_64 coin_rng(555u);

  std::vector<std::pair<std::string, WalkModel>> models;
  models.emplace_back("balanced-coin / ring 64",
                      build_standard(kPi / 4, Lattice::ring(64)));
  models.emplace_back(
      "velocity-history depth 2 / ring 64",
      build_particle_history(2, {kPi / 4}, HistoryVariant::uniform,
                             Lattice::ring(64)));
  models.emplace_back("site-memory / ring 8",
                      build_site_history(8, kPi / 4, kPi / 3));
  models.emplace_back(
      "2d non-repeating / torus 16x16",
      build_2d(TwoDVariant::non_repeating, random_zero_diagonal_unitary(coin_rng),
               Lattice::torus(16, 16)));
  models.emplace_back(
      "2d non-reversing / torus 16x16",
      build_2d(TwoDVariant::non_reversing, random_zero_diagonal_unitary(coin_rng),
               Lattice::torus(16, 16)));

  double worst_leakage = 0.0;
  std::string vacuum_problem;

  for (const auto& [name, model] : models) {
    const Embedding emb = make_embedding(model);
    const CellSpec& spec = emb.rule().spec();

    for (int trial = 0; trial < 3; ++trial) {
      const WalkState init = random_walk_state(model, rng, 6);
      ConfigState config = embed(emb, init);
      for (int t = 0; t < 100; ++t) {
        config = global_step(config, emb.rule(), t);
      }
      double leakage = 0.0;
      for (const auto& [label, amp] : config.entries()) {
        if (particle_number(label, spec) != 1) {
          leakage += abs2(amp);
        }
      }
      worst_leakage = std::max(worst_leakage, leakage);
    }

    ConfigState vacuum(0.0);
    vacuum.add(Configuration{}, Amplitude(1.0, 0.0));
    for (int t = 0; t < 100; ++t) {
      vacuum = global_step(vacuum, emb.rule(), t);
    }
    const bool fixed = vacuum.entries().size() == 1 &&
                       vacuum.contains(Configuration{}) &&
                       vacuum.amplitude(Configuration{}) == Amplitude(1.0, 0.0);
    if (!fixed && vacuum_problem.empty()) {
      vacuum_problem = "all-quiescent state drifted under " + name;
    }
  }

  CheckResult r;
  r.name = "sector-conservation";
  r.passed = worst_leakage < tol && vacuum_problem.empty();
  r.detail = "100 steps x 5 rules x 3 random one-particle states: worst sector "
             "leakage = " +
             fmt(worst_leakage) + " (tol " + fmt(tol) + "); " +
             (vacuum_problem.empty() ? "all-quiescent state exactly fixed"
                                     : vacuum_problem);
  return r;
}

// --- check 3: walk / lattice-gas equivalence ---------------------------------

CheckResult acceptance_equivalence() {
  const double tol = 1e-10;
  const std::uint64_t t_max = 30;
  std::mt19937_64 rng(90210u);
  std::mt19937_64 coin_rng(777u);

  std::vector<std::pair<std::string, WalkModel>> pairs;
  pairs.emplace_back("balanced-coin walk vs coin-matched gas rule",
                     build_standard(kPi / 4, Lattice::ring(32)));
  pairs.emplace_back(
      "velocity-history depth 2 vs tail-1 gas rule",
      build_particle_history(2, {kPi / 4}, HistoryVariant::uniform,
                             Lattice::ring(32)));
  pairs.emplace_back("site-memory ring 8 vs memory-cell gas rule",
                     build_site_history(8, kPi / 4, kPi / 3));
  pairs.emplace_back(
      "2d non-repeating vs direction-coded gas rule",
      build_2d(TwoDVariant::non_repeating, random_zero_diagonal_unitary(coin_rng),
               Lattice::torus(8, 8)));
  pairs.emplace_back(
      "2d non-reversing vs direction-coded gas rule",
      build_2d(TwoDVariant::non_reversing, random_zero_diagonal_unitary(coin_rng),
               Lattice::torus(8, 8)));

  bool all = true;
  std::ostringstream detail;
  double worst = 0.0;
  for (const auto& [name, model] : pairs) {
    const Embedding emb = make_embedding(model);
    double pair_worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const WalkState init = random_walk_state(model, rng, 12);
      const EquivalenceReport report =
          check_equivalence(model, emb, init, t_max, tol);
      pair_worst = std::max(pair_worst, report.max_deviation);
      all = all && report.passed;
    }
    worst = std::max(worst, pair_worst);
    if (detail.tellp() > 0) {
      detail << "; ";
    }
    detail << name << " -> " << fmt(pair_worst);
  }

  CheckResult r;
  r.name = "walk-gas-equivalence";
  r.passed = all && worst < tol;
  r.detail = "10 random inits x 30 steps per pair, worst amplitude deviation: " +
             detail.str() + " (tol " + fmt(tol) + ")";
  return r;
}

// --- check 4: dense oracle agreement -----------------------------------------

CheckResult acceptance_dense_oracle() {
  const double tol = 1e-12;

  std::mt19937_64 coin_rng(99u);
  std::vector<std::pair<std::string, WalkModel>> models;
  models.emplace_back("balanced-coin / ring 8",
                      build_standard(kPi / 4, Lattice::ring(8)));
  models.emplace_back(
      "velocity-history depth 2 / ring 8",
      build_particle_history(2, {kPi / 4}, HistoryVariant::uniform,
                             Lattice::ring(8)));
  models.emplace_back(
      "controlled-history depth 1 / ring 8",
      build_mcgettrick(1, symmetric_coin(kPi / 4), RicochetMode::transmit,
                       RicochetMode::reflect, Lattice::ring(8)));
  models.emplace_back("site-memory ring 4",
                      build_site_history(4, kPi / 4, kPi / 3));
  models.emplace_back(
      "2d non-repeating / torus 6x6",
      build_2d(TwoDVariant::non_repeating, random_zero_diagonal_unitary(coin_rng),
               Lattice::torus(6, 6)));

  double worst = 0.0;
  std::ostringstream detail;
  for (const auto& [name, model] : models) {
    const DenseWalkOracle oracle(model, model.lattice());
    const std::size_t dim = oracle.dim();
    double model_worst = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Amplitude> unit(dim, Amplitude(0.0, 0.0));
      unit[i] = Amplitude(1.0, 0.0);
      const std::vector<Amplitude> dense = oracle.apply_step(unit, 0);

      WalkState s(0.0);
      s.add(oracle.labels()[i], Amplitude(1.0, 0.0));
      const std::vector<Amplitude> sparse = oracle.to_vector(model.step_at(s, 0));

      for (std::size_t j = 0; j < dim; ++j) {
        model_worst = std::max(model_worst, std::abs(dense[j] - sparse[j]));
      }
    }
    worst = std::max(worst, model_worst);
    if (detail.tellp() > 0) {
      detail << "; ";
    }
    detail << name << " (dim " << dim << ") -> " << fmt(model_worst);
  }

  CheckResult r;
  r.name = "dense-oracle";
  r.passed = worst < tol;
  r.detail = "sparse step vs dense operator on every basis vector: " +
             detail.str() + " (tol " + fmt(tol) + ")";
  return r;
}

// --- check 5: memory operator is a permutation -------------------------------

CheckResult acceptance_memory_permutation() {
  bool ok = true;
  std::ostringstream detail;

  for (int tail = 1; tail <= 3; ++tail) {
    const LocalUnitary m = particle_history_memory(tail);
    const std::uint64_t t = static_cast<std::uint64_t>(tail);
    const std::uint64_t side = 1ull << (t + 1);
    const std::uint64_t tails = 1ull << t;

    std::vector<std::uint64_t> sources;
    for (std::uint64_t occupied_tail = 0; occupied_tail < tails; ++occupied_tail) {
      for (std::uint64_t other_tail = 0; other_tail < tails; ++other_tail) {
        const std::uint64_t left_occ =
            ((1ull << t) | occupied_tail) * side + other_tail;
        const std::uint64_t right_occ =
            other_tail * side + ((1ull << t) | occupied_tail);
        sources.push_back(left_occ);
        sources.push_back(right_occ);
      }
    }

    auto single_occupancy = [&](std::uint64_t idx) {
      const std::uint64_t s1 = idx / side;
      const std::uint64_t s2 = idx % side;
      return ((s1 >> t) + (s2 >> t)) == 1;
    };

    std::set<std::uint64_t> images;
    for (std::uint64_t src : sources) {
      std::size_t hits = 0;
      std::uint64_t image = 0;
      for (std::uint64_t row = 0; row < side * side; ++row) {
        const Amplitude a = m.at(row, src);
        if (a == Amplitude(0.0, 0.0)) {
          continue;
        }
        if (a != Amplitude(1.0, 0.0)) {
          ok = false;  // permutations carry exact unit amplitudes
        }
        ++hits;
        image = row;
      }
      if (hits != 1 || !single_occupancy(image)) {
        ok = false;
      }
      images.insert(image);
    }
    if (images.size() != sources.size()) {
      ok = false;  // must be injective on the sector
    }

    if (detail.tellp() > 0) {
      detail << "; ";
    }
    detail << "tail " << tail << ": " << sources.size()
           << " one-particle states permuted";
  }

  CheckResult r;
  r.name = "memory-permutation";
  r.passed = ok;
  r.detail = detail.str() +
             (ok ? " with exact unit amplitudes"
                 : " -- NOT a clean permutation");
  return r;
}

// --- check 6: direction-coin structure ---------------------------------------

CheckResult acceptance_direction_structure() {
  const double tol = 1e-12;
  std::mt19937_64 rng(4242u);

  auto reverse_dir = [](std::size_t d) { return d ^ 1u; };  // w<->e, s<->n

  double worst_repeat = 0.0;
  double worst_reverse = 0.0;
  for (int i = 0; i < 50; ++i) {
    const LocalUnitary c = random_zero_diagonal_unitary(rng);
    const LocalUnitary cr = c.compose_after(direction_swap());
    for (std::size_t d = 0; d < 4; ++d) {
      worst_repeat = std::max(worst_repeat, std::abs(c.at(d, d)));
      worst_reverse = std::max(worst_reverse, std::abs(cr.at(reverse_dir(d), d)));
    }
  }

  CheckResult r;
  r.name = "direction-coin-structure";
  r.passed = worst_repeat < tol && worst_reverse < tol;
  r.detail = "50 random coins: max |<d|C|d>| = " + fmt(worst_repeat) +
             ", max |<rev d|C.J|d>| = " + fmt(worst_reverse) + " (tol " +
             fmt(tol) + ")";
  return r;
}

// --- check 7: ballistic spread -----------------------------------------------

CheckResult acceptance_ballistic_spread() {
  const WalkModel model = build_standard(kPi / 4, Lattice::line());
  const double inv_sqrt2 = 0.70710678118654752440;
  WalkState init(0.0);
  init.add(StandardLabel{0, 1}, Amplitude(inv_sqrt2, 0.0));
  init.add(StandardLabel{0, -1}, Amplitude(0.0, inv_sqrt2));

  const SpreadSeries series = spread_series(
      model, init, 200, std::pair<std::uint64_t, std::uint64_t>{50, 200});

  const double s100 = series.rows[100].stddev;
  const double s200 = series.rows[200].stddev;
  const double ratio = s100 > 0.0 ? s200 / s100 : 0.0;
  const bool ok =
      series.fit.r2 > 0.999 && ratio >= 1.9 && ratio <= 2.1;

  CheckResult r;
  r.name = "ballistic-spread";
  r.passed = ok;
  r.detail = "stddev vs t on [50,200]: r^2 = " + fmt(series.fit.r2) +
             " (need > 0.999), stddev(200)/stddev(100) = " + fmt(ratio) +
             " (need [1.9, 2.1]); measured slope = " + fmt(series.fit.slope);
  return r;
}

// --- check 8: norm conservation ----------------------------------------------

CheckResult acceptance_norm_conservation() {
  const double tol = 1e-9;
  std::mt19937_64 coin_rng(2468u);

  std::vector<std::pair<std::string, WalkModel>> models;
  models.emplace_back("balanced-coin / line", build_standard(kPi / 4));
  models.emplace_back(
      "velocity-history depth 2, cycled coins / line",
      build_particle_history(2, {kPi / 4, kPi / 3}, HistoryVariant::cycled,
                             Lattice::line()));
  models.emplace_back(
      "controlled-history depth 2 / line",
      build_mcgettrick(2, symmetric_coin(kPi / 4), RicochetMode::transmit,
                       RicochetMode::reflect, Lattice::line()));
  models.emplace_back("site-memory ring 8",
                      build_site_history(8, kPi / 4, kPi / 3));
  models.emplace_back(
      "2d non-repeating / torus 12x12",
      build_2d(TwoDVariant::non_repeating, random_zero_diagonal_unitary(coin_rng),
               Lattice::torus(12, 12)));

  double worst = 0.0;
  for (const auto& [name, model] : models) {
    WalkState s(0.0);
    switch (model.kind()) {
      case WalkKind::standard:
        s.add(StandardLabel{0, 1}, Amplitude(1.0, 0.0));
        break;
      case WalkKind::particle_history:
        s.add(ParticleHistoryLabel{0, 2, 0}, Amplitude(1.0, 0.0));
        break;
      case WalkKind::mcgettrick:
        s.add(McGettrickLabel{0, 0, 2, 0}, Amplitude(1.0, 0.0));
        break;
      case WalkKind::site_history:
        s.add(SiteHistoryLabel{0, 1, 8, 0}, Amplitude(1.0, 0.0));
        break;
      case WalkKind::two_d:
        s.add(TwoDLabel{0, 0, 1}, Amplitude(1.0, 0.0));
        break;
    }
    for (std::uint64_t t = 0; t < 200; ++t) {
      s = model.step_at(s, t);
      worst = std::max(worst, std::abs(std::sqrt(s.norm2()) - 1.0));
    }
  }

  CheckResult r;
  r.name = "norm-conservation";
  r.passed = worst < tol;
  r.detail = "200 steps x 5 walk families: worst norm drift |norm - 1| = " +
             fmt(worst) + " (tol " + fmt(tol) + ")";
  return r;
}

// --- check 9: byte-identical reruns ------------------------------------------

namespace {

const char* kReproConfig = R"json({
  "output_dir": "overridden-by-env",
  "experiments": [
    {
      "name": "ring-walk",
      "model": {"kind": "standard", "theta": 0.7853981633974483},
      "lattice": {"kind": "ring", "n_sites": 16},
      "representation": "both",
      "t_max": 12,
      "outputs": ["distribution_per_step", "spread_series", "equivalence_report"]
    },
    {
      "name": "torus-walk",
      "model": {
        "kind": "two_d",
        "variant": "non_reversing",
        "c_matrix": [[0,0],[0,0],[1,0],[0,0],
                     [0,0],[0,0],[0,0],[1,0],
                     [1,0],[0,0],[0,0],[0,0],
                     [0,0],[1,0],[0,0],[0,0]]
      },
      "lattice": {"kind": "torus", "size_x": 6, "size_y": 6},
      "representation": "both",
      "t_max": 6,
      "outputs": ["distribution_per_step"]
    }
  ]
})json";

std::vector<std::filesystem::path> relative_files(
    const std::filesystem::path& root) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry :
       std::filesystem::recursive_directory_iterator(root)) {
    if (entry.is_regular_file()) {
      files.push_back(std::filesystem::relative(entry.path(), root));
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string read_bytes(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

CheckResult acceptance_reproducibility() {
  CheckResult r;
  r.name = "reproducibility";

  const std::filesystem::path root = scoped_temp_dir("rerun");
  const std::filesystem::path config = root / "config.json";
  write_text_atomically(config, kReproConfig);

  const std::filesystem::path dir_a = root / "a";
  const std::filesystem::path dir_b = root / "b";

  for (const auto& dir : {dir_a, dir_b}) {
    ScopedEnv env("QLGASIM_OUTPUT_DIR", dir.string());
    std::ostringstream out;
    std::ostringstream err;
    const int rc = run_experiments(config, out, err);
    if (rc != 0) {
      r.passed = false;
      r.detail = "harness run failed (exit " + std::to_string(rc) +
                 "): " + err.str();
      std::filesystem::remove_all(root);
      return r;
    }
  }

  const auto files_a = relative_files(dir_a);
  const auto files_b = relative_files(dir_b);
  if (files_a.empty() || files_a != files_b) {
    r.passed = false;
    r.detail = "reruns produced different file sets (" +
               std::to_string(files_a.size()) + " vs " +
               std::to_string(files_b.size()) + ")";
    std::filesystem::remove_all(root);
    return r;
  }

  std::size_t mismatches = 0;
  for (const auto& rel : files_a) {
    if (read_bytes(dir_a / rel) != read_bytes(dir_b / rel)) {
      ++mismatches;
    }
  }
  std::filesystem::remove_all(root);

  r.passed = mismatches == 0;
  r.detail = std::to_string(files_a.size()) + " output files compared, " +
             (mismatches == 0 ? std::string("all byte-identical")
                              : std::to_string(mismatches) + " differ");
  return r;
}

// --- suites -------------------------------------------------------------------

namespace {

CheckResult guarded(CheckResult (*fn)(), const char* name) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return CheckResult{name, false, std::string("exception: ") + e.what()};
  }
}

AcceptanceReport finish(std::vector<CheckResult> checks) {
  AcceptanceReport report;
  report.all_passed = true;
  for (const CheckResult& c : checks) {
    report.all_passed = report.all_passed && c.passed;
  }
  report.checks = std::move(checks);
  return report;
}

}  // namespace

AcceptanceReport run_acceptance() {
  return finish({
      guarded(&acceptance_unitarity, "unitarity"),
      guarded(&acceptance_sector_conservation, "sector-conservation"),
      guarded(&acceptance_equivalence, "walk-gas-equivalence"),
      guarded(&acceptance_dense_oracle, "dense-oracle"),
      guarded(&acceptance_memory_permutation, "memory-permutation"),
      guarded(&acceptance_direction_structure, "direction-coin-structure"),
      guarded(&acceptance_ballistic_spread, "ballistic-spread"),
      guarded(&acceptance_norm_conservation, "norm-conservation"),
      guarded(&acceptance_reproducibility, "reproducibility"),
  });
}

AcceptanceReport run_suite(const std::string& suite) {
  if (suite == "all") {
    return run_acceptance();
  }
  if (suite == "unitarity") {
    return finish({
        guarded(&acceptance_unitarity, "unitarity"),
        guarded(&acceptance_memory_permutation, "memory-permutation"),
        guarded(&acceptance_direction_structure, "direction-coin-structure"),
    });
  }
  if (suite == "conservation") {
    return finish({
        guarded(&acceptance_sector_conservation, "sector-conservation"),
        guarded(&acceptance_norm_conservation, "norm-conservation"),
    });
  }
  if (suite == "equivalence") {
    return finish({guarded(&acceptance_equivalence, "walk-gas-equivalence")});
  }
  if (suite == "oracle") {
    return finish({guarded(&acceptance_dense_oracle, "dense-oracle")});
  }
  throw ConfigError("suite",
                    "unknown suite (use unitarity, conservation, equivalence, "
                    "oracle, or all)");
}

}  // namespace qlgasim
