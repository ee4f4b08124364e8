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

#include "qlgasim/qlga.hpp"

#include <algorithm>
#include <utility>

#include "qlgasim/errors.hpp"
#include "qlgasim/operators.hpp"

namespace qlgasim {

namespace {

constexpr std::uint64_t kMaxCellDim = 65536;

std::vector<std::uint64_t> subcell_places(const std::vector<std::uint32_t>& dims) {
  std::vector<std::uint64_t> places(dims.size(), 1);
  for (std::size_t j = dims.size(); j-- > 1;) {
    places[j - 1] = places[j] * dims[j];
  }
  return places;
}

}  // namespace

std::uint64_t CellSpec::cell_dim() const {
  std::uint64_t dim = 1;
  for (std::uint32_t d : subcell_dims) {
    dim *= d;
    if (dim > kMaxCellDim) {
      throw Error("cell dimension exceeds the supported maximum of 65536");
    }
  }
  return dim;
}

std::vector<std::uint32_t> CellSpec::decode(std::uint64_t cell_value) const {
  std::vector<std::uint32_t> digits(subcell_dims.size(), 0);
  for (std::size_t j = subcell_dims.size(); j-- > 0;) {
    digits[j] = static_cast<std::uint32_t>(cell_value % subcell_dims[j]);
    cell_value /= subcell_dims[j];
  }
  if (cell_value != 0) {
    throw Error("cell value out of range for this cell layout");
  }
  return digits;
}

std::uint64_t CellSpec::encode(const std::vector<std::uint32_t>& subcell_values) const {
  if (subcell_values.size() != subcell_dims.size()) {
    throw Error("encode: wrong number of subcell values");
  }
  std::uint64_t v = 0;
  for (std::size_t j = 0; j < subcell_dims.size(); ++j) {
    if (subcell_values[j] >= subcell_dims[j]) {
      throw Error("encode: subcell value out of range");
    }
    v = v * subcell_dims[j] + subcell_values[j];
  }
  return v;
}

int CellSpec::particles_in(std::uint64_t cell_value) const {
  const std::vector<std::uint32_t> digits = decode(cell_value);
  int n = 0;
  for (std::size_t j = 0; j < digits.size(); ++j) {
    if (counts_particles[j] && digits[j] >= subcell_dims[j] / 2) {
      ++n;
    }
  }
  return n;
}

void CellSpec::validate() const {
  if (subcell_dims.empty()) {
    throw Error("cell layout needs at least one subcell");
  }
  if (neighborhood.size() != subcell_dims.size() ||
      counts_particles.size() != subcell_dims.size()) {
    throw Error("cell layout: neighborhood and particle flags must match the subcell list");
  }
  for (std::uint32_t d : subcell_dims) {
    if (d < 2) {
      throw Error("cell layout: every subcell needs dimension >= 2");
    }
  }
  if (quiescent_index != 0) {
    throw Error("cell layout: the quiescent cell must be basis index 0");
  }
  cell_dim();  // range check
  if (lattice.kind() == Lattice::Kind::line || lattice.kind() == Lattice::Kind::ring) {
    for (const Coord& e : neighborhood) {
      if (e.y != 0) {
        throw Error("cell layout: 1D lattices require y = 0 neighborhood offsets");
      }
    }
  }
}

QlgaRule::QlgaRule(CellSpec spec, LocalUnitary local_s,
                   std::vector<LocalUnitary> time_schedule)
    : spec_(std::move(spec)), local_s_(std::move(local_s)),
      schedule_(std::move(time_schedule)) {
  spec_.validate();
  const std::uint64_t dim = spec_.cell_dim();

  auto check_matrix = [&](const LocalUnitary& u) {
    if (u.dim() != dim) {
      throw Error("scattering matrix dimension does not match the cell layout");
    }
    if (!u.fixes_first_basis_vector()) {
      throw Error("scattering must map the quiescent cell to itself exactly");
    }
    for (std::size_t c = 1; c < dim; ++c) {
      const Amplitude a = u.at(0, c);
      if (a.real() != 0.0 || a.imag() != 0.0) {
        throw Error("scattering must not leak active cells into the quiescent cell");
      }
    }
  };
  auto columns_of = [&](const LocalUnitary& u) {
    std::vector<std::vector<std::pair<std::uint64_t, Amplitude>>> cols(dim);
    for (std::uint64_t v = 0; v < dim; ++v) {
      for (std::uint64_t w = 0; w < dim; ++w) {
        const Amplitude a = u.at(w, v);
        if (a.real() != 0.0 || a.imag() != 0.0) {
          cols[v].emplace_back(w, a);
        }
      }
    }
    return cols;
  };

  check_matrix(local_s_);
  columns_.push_back(columns_of(local_s_));
  for (const LocalUnitary& u : schedule_) {
    check_matrix(u);
    columns_.push_back(columns_of(u));
  }
}

const LocalUnitary& QlgaRule::scattering_for_step(std::uint64_t t) const {
  if (schedule_.empty()) {
    return local_s_;
  }
  return schedule_[t % schedule_.size()];
}

const std::vector<std::vector<std::pair<std::uint64_t, Amplitude>>>&
QlgaRule::sparse_columns_for_step(std::uint64_t t) const {
  if (schedule_.empty()) {
    return columns_[0];
  }
  return columns_[1 + (t % schedule_.size())];
}

ConfigState advect(const ConfigState& s, const CellSpec& spec) {
  const std::vector<std::uint64_t> places = subcell_places(spec.subcell_dims);
  return permute(s, [&](const Configuration& c) {
    Configuration moved;
    for (const auto& [coord, value] : c.cells()) {
      const std::vector<std::uint32_t> digits = spec.decode(value);
      for (std::size_t j = 0; j < digits.size(); ++j) {
        if (digits[j] == 0) {
          continue;
        }
        const Coord dst = spec.lattice.wrap(coord - spec.neighborhood[j]);
        moved.set_value(dst, moved.value_at(dst) + digits[j] * places[j]);
      }
    }
    return moved;
  });
}

ConfigState scatter_cells(const ConfigState& s, const QlgaRule& rule,
                          std::uint64_t step_index) {
  const auto& cols = rule.sparse_columns_for_step(step_index);
  ConfigState out(s.prune_epsilon());
  std::vector<std::pair<Configuration, Amplitude>> frontier;
  std::vector<std::pair<Configuration, Amplitude>> next;
  for (const auto& [config, amp] : s.entries()) {
    // Expand the product of per-cell scattering columns over the active cells.
    // Quiescent cells are exact fixed points, so they never enter the product.
    frontier.clear();
    frontier.emplace_back(config, amp);
    for (const auto& [coord, value] : config.cells()) {
      next.clear();
      for (const auto& [partial, partial_amp] : frontier) {
        for (const auto& [new_value, s_amp] : cols[value]) {
          Configuration branched = partial;
          branched.set_value(coord, new_value);
          next.emplace_back(std::move(branched), partial_amp * s_amp);
        }
      }
      frontier.swap(next);
    }
    for (auto& [branched, branched_amp] : frontier) {
      out.add(std::move(branched), branched_amp);
    }
  }
  return out;
}

ConfigState global_step(const ConfigState& s, const QlgaRule& rule,
                        std::uint64_t step_index) {
  return advect(scatter_cells(s, rule, step_index), rule.spec());
}

int particle_number(const Configuration& c, const CellSpec& spec) {
  int n = 0;
  for (const auto& [coord, value] : c.cells()) {
    (void)coord;
    n += spec.particles_in(value);
  }
  return n;
}

namespace {

CellSpec direction_pair_spec(const Lattice& lattice, std::uint32_t side_dim) {
  CellSpec spec;
  spec.subcell_dims = {side_dim, side_dim};
  // Subcell 0 holds the left-mover: its value is fetched from x + 1 so that
  // stored amplitude travels one site to the left per step, and vice versa.
  spec.neighborhood = {Coord{1, 0}, Coord{-1, 0}};
  spec.counts_particles = {true, true};
  spec.lattice = lattice;
  return spec;
}

}  // namespace

QlgaRule build_meyer_rule(double theta, double alpha, double beta,
                          const Lattice& lattice) {
  return QlgaRule(direction_pair_spec(lattice, 2),
                  meyer_scattering(theta, alpha, beta));
}

QlgaRule meyer_rule_from_coin(const LocalUnitary& coin, const Lattice& lattice) {
  if (coin.dim() != 2) {
    throw Error("meyer_rule_from_coin needs a 2x2 coin");
  }
  // Cell basis (l, r): index 1 = right-mover only (+1), index 2 = left-mover
  // only (-1); the coin acts on that pair in velocity order (+1, -1).
  return QlgaRule(direction_pair_spec(lattice, 2), embed_block(4, {1, 2}, coin));
}

LocalUnitary particle_history_memory(int tail_len) {
  if (tail_len < 1) {
    throw Error("velocity-history rules need tail length >= 1");
  }
  const std::uint32_t t = static_cast<std::uint32_t>(tail_len);
  const std::uint64_t side = 1ull << (t + 1);
  const std::uint64_t dim = side * side;
  const std::uint64_t tail_mask = (1ull << t) - 1;
  std::vector<Amplitude> m(dim * dim, Amplitude(0.0, 0.0));
  for (std::uint64_t src = 0; src < dim; ++src) {
    const std::uint64_t s1 = src / side;
    const std::uint64_t s2 = src % side;
    const std::uint64_t l = s1 >> t;
    const std::uint64_t r = s2 >> t;
    const std::uint64_t u = s1 & tail_mask;
    const std::uint64_t v = s2 & tail_mask;
    std::uint64_t n1 = s1;
    std::uint64_t n2 = s2;
    if (l == 0 && r == 1) {
      // The oldest stored velocity of the occupied (right) side becomes the
      // new travel direction; the rest of the tail shifts down one slot.
      if ((v & 1) == 0) {  // oldest velocity +1: keep moving right
        n1 = u;
        n2 = (1ull << t) | (v >> 1);
      } else {  // oldest velocity -1: hop to the left-mover subcell
        n1 = (1ull << t) | (v >> 1);
        n2 = u;
      }
    } else if (l == 1 && r == 0) {
      if ((u & 1) == 0) {  // oldest velocity +1: hop to the right-mover subcell
        n1 = v;
        n2 = (1ull << t) | (1ull << (t - 1)) | (u >> 1);
      } else {  // oldest velocity -1: keep moving left
        n1 = (1ull << t) | (1ull << (t - 1)) | (u >> 1);
        n2 = v;
      }
    }
    m[(n1 * side + n2) * dim + src] = Amplitude(1.0, 0.0);
  }
  // Basis: (left side, right side) with the occupancy bit above the tail bits.
  return LocalUnitary(dim, std::move(m));
}

LocalUnitary particle_history_ricochet(int tail_len, const LocalUnitary& coin) {
  if (tail_len < 1) {
    throw Error("velocity-history rules need tail length >= 1");
  }
  if (coin.dim() != 2) {
    throw Error("velocity-history ricochet needs a 2x2 coin");
  }
  const std::uint32_t t = static_cast<std::uint32_t>(tail_len);
  const std::uint64_t side = 1ull << (t + 1);
  const std::uint64_t dim = side * side;
  std::vector<Amplitude> m(dim * dim, Amplitude(0.0, 0.0));
  for (std::uint64_t src = 0; src < dim; ++src) {
    const std::uint64_t s1 = src / side;
    const std::uint64_t s2 = src % side;
    const std::uint64_t l = s1 >> t;
    const std::uint64_t r = s2 >> t;
    if (l == 0 && r == 1) {
      // Coin on the oldest stored velocity of the occupied right side.
      const std::uint64_t bit = s2 & 1;  // 0 = +1, 1 = -1, matching the coin basis
      for (std::uint64_t out = 0; out < 2; ++out) {
        const std::uint64_t dst = s1 * side + ((s2 & ~1ull) | out);
        m[dst * dim + src] = coin.at(out, bit);
      }
    } else if (l == 1 && r == 0) {
      const std::uint64_t bit = s1 & 1;
      for (std::uint64_t out = 0; out < 2; ++out) {
        const std::uint64_t dst = ((s1 & ~1ull) | out) * side + s2;
        m[dst * dim + src] = coin.at(out, bit);
      }
    } else {
      m[src * dim + src] = Amplitude(1.0, 0.0);
    }
  }
  // Coin acts on the oldest stored velocity of the occupied side.
  return LocalUnitary(dim, std::move(m));
}

QlgaRule build_particle_history_rule(int tail_len, double theta,
                                     const Lattice& lattice) {
  const LocalUnitary mem = particle_history_memory(tail_len);
  const LocalUnitary ric = particle_history_ricochet(tail_len, symmetric_coin(theta));
  const std::uint32_t side = 1u << (static_cast<std::uint32_t>(tail_len) + 1);
  return QlgaRule(direction_pair_spec(lattice, side), mem.compose_after(ric));
}

QlgaRule build_particle_history_rule(int tail_len, const std::vector<double>& thetas,
                                     const Lattice& lattice) {
  if (thetas.empty()) {
    throw Error("velocity-history rule needs at least one coin angle");
  }
  const LocalUnitary mem = particle_history_memory(tail_len);
  std::vector<LocalUnitary> schedule;
  schedule.reserve(thetas.size());
  for (double theta : thetas) {
    schedule.push_back(
        mem.compose_after(particle_history_ricochet(tail_len, symmetric_coin(theta))));
  }
  const std::uint32_t side = 1u << (static_cast<std::uint32_t>(tail_len) + 1);
  LocalUnitary first = schedule.front();
  return QlgaRule(direction_pair_spec(lattice, side), std::move(first),
                  std::move(schedule));
}

LocalUnitary site_history_memory(double theta_m) {
  const LocalUnitary mark = symmetric_coin(theta_m);
  std::vector<Amplitude> m(64, Amplitude(0.0, 0.0));
  for (std::uint64_t src = 0; src < 8; ++src) {
    const std::uint64_t mem = src >> 2;
    const std::uint64_t lr = src & 3;
    if (lr == 1 || lr == 2) {
      // Exactly one mover present: the visit marker acts on the memory qubit.
      for (std::uint64_t out = 0; out < 2; ++out) {
        m[(out * 4 + lr) * 8 + src] = mark.at(out, mem);
      }
    } else {
      m[src * 8 + src] = Amplitude(1.0, 0.0);
    }
  }
  // Basis: (memory, left-mover, right-mover).
  return LocalUnitary(8, std::move(m));
}

LocalUnitary site_history_ricochet(double theta_b) {
  const LocalUnitary fresh = balanced_coin();
  const LocalUnitary seen = symmetric_coin(theta_b);
  std::vector<Amplitude> m(64, Amplitude(0.0, 0.0));
  for (std::uint64_t src = 0; src < 8; ++src) {
    const std::uint64_t mem = src >> 2;
    const std::uint64_t lr = src & 3;
    if (lr == 1 || lr == 2) {
      // Direction pair in velocity order: cell index 1 = right-mover (+1),
      // cell index 2 = left-mover (-1).
      const LocalUnitary& coin = (mem == 0) ? fresh : seen;
      const std::uint64_t in_bit = (lr == 1) ? 0 : 1;
      for (std::uint64_t out_bit = 0; out_bit < 2; ++out_bit) {
        const std::uint64_t out_lr = (out_bit == 0) ? 1 : 2;
        m[(mem * 4 + out_lr) * 8 + src] = coin.at(out_bit, in_bit);
      }
    } else {
      m[src * 8 + src] = Amplitude(1.0, 0.0);
    }
  }
  // Memory-dependent coin on the direction pair.
  return LocalUnitary(8, std::move(m));
}

QlgaRule build_site_history_rule(double theta_m, double theta_b, int n_sites) {
  CellSpec spec;
  spec.subcell_dims = {2, 2, 2};
  spec.neighborhood = {Coord{0, 0}, Coord{1, 0}, Coord{-1, 0}};
  spec.counts_particles = {false, true, true};
  spec.lattice = Lattice::ring(n_sites);
  // Marker first, then the coin conditioned on the updated marker.
  LocalUnitary s = site_history_ricochet(theta_b).compose_after(site_history_memory(theta_m));
  return QlgaRule(std::move(spec), std::move(s));
}

QlgaRule build_2d_rule(const LocalUnitary& coin, const Lattice& lattice) {
  if (coin.dim() != 4) {
    throw Error("four-direction rules need a 4x4 coin");
  }
  CellSpec spec;
  spec.subcell_dims = {2, 2, 2, 2};
  // Subcell order (w, e, s, n); w moves toward -x, e toward +x, s toward -y,
  // n toward +y, so values are fetched from the opposite offsets.
  spec.neighborhood = {Coord{1, 0}, Coord{-1, 0}, Coord{0, 1}, Coord{0, -1}};
  spec.counts_particles = {true, true, true, true};
  spec.lattice = lattice;
  // One-hot cell indices in subcell order: w = 8, e = 4, s = 2, n = 1.
  return QlgaRule(std::move(spec), embed_block(16, {8, 4, 2, 1}, coin));
}

}  // namespace qlgasim
