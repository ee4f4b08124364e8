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

#include "qlgasim/correspondence.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "qlgasim/errors.hpp"
#include "qlgasim/operators.hpp"

namespace qlgasim {

namespace {

// One-hot cell values of the four-direction cell in subcell order (w, e, s, n).
constexpr std::uint64_t kOneHot[4] = {8, 4, 2, 1};

std::uint32_t tail_bits_mask(std::uint32_t len) {
  return (len >= 32) ? 0xffffffffu : ((1u << len) - 1u);
}

/// Walk tail (bit k = velocity k+1 steps back, bit 0 = current) to the
/// occupied subcell's stored word (most recent past velocity in the top
/// bit, oldest in bit 0).  The current velocity itself becomes occupancy.
std::uint32_t walk_tail_to_cell_tail(std::uint32_t tail, std::uint32_t history_len) {
  const std::uint32_t depth = history_len - 1;
  std::uint32_t cell_tail = 0;
  for (std::uint32_t k = 1; k <= depth; ++k) {
    if ((tail >> k) & 1u) {
      cell_tail |= 1u << (depth - k);
    }
  }
  return cell_tail;
}

std::uint32_t cell_tail_to_walk_tail(std::uint32_t cell_tail, std::uint32_t p1_bit,
                                     std::uint32_t history_len) {
  const std::uint32_t depth = history_len - 1;
  std::uint32_t tail = p1_bit;
  for (std::uint32_t k = 1; k <= depth; ++k) {
    if ((cell_tail >> (depth - k)) & 1u) {
      tail |= 1u << k;
    }
  }
  return tail;
}

}  // namespace

Configuration Embedding::forward(const WalkLabel& l) const {
  Configuration c;
  switch (kind_) {
    case WalkKind::standard: {
      const auto* s = std::get_if<StandardLabel>(&l);
      if (s == nullptr || (s->p != 1 && s->p != -1)) {
        throw ClassifierError("label does not belong to this embedding's walk");
      }
      c.set_value(Coord{s->x, 0}, s->p == 1 ? 1 : 2);
      return c;
    }
    case WalkKind::particle_history: {
      const auto* s = std::get_if<ParticleHistoryLabel>(&l);
      if (s == nullptr || s->history_len != history_len_ ||
          (s->tail & ~tail_bits_mask(history_len_)) != 0) {
        throw ClassifierError("label does not belong to this embedding's walk");
      }
      if (history_len_ == 1) {
        c.set_value(Coord{s->x, 0}, (s->tail & 1u) ? 2 : 1);
        return c;
      }
      const std::uint32_t depth = history_len_ - 1;
      const std::uint64_t side = 1ull << (depth + 1);
      const std::uint64_t occupied =
          (1ull << depth) | walk_tail_to_cell_tail(s->tail, history_len_);
      const std::uint64_t value =
          (s->tail & 1u) ? occupied * side  // moving left: left subcell holds it
                         : occupied;        // moving right: right subcell holds it
      c.set_value(Coord{s->x, 0}, value);
      return c;
    }
    case WalkKind::site_history: {
      const auto* s = std::get_if<SiteHistoryLabel>(&l);
      if (s == nullptr || s->n_sites != n_sites_ || s->x < 0 ||
          s->x >= static_cast<std::int64_t>(n_sites_) ||
          (s->p != 1 && s->p != -1)) {
        throw ClassifierError("label does not belong to this embedding's walk");
      }
      const std::uint64_t here = 1ull << s->x;
      c.set_value(Coord{s->x, 0},
                  ((s->mem & here) ? 4 : 0) + (s->p == 1 ? 1 : 2));
      for (std::uint32_t y = 0; y < n_sites_; ++y) {
        if (static_cast<std::int64_t>(y) != s->x && ((s->mem >> y) & 1ull)) {
          c.set_value(Coord{y, 0}, 4);
        }
      }
      return c;
    }
    case WalkKind::two_d: {
      const auto* s = std::get_if<TwoDLabel>(&l);
      if (s == nullptr || s->dir > 3) {
        throw ClassifierError("label does not belong to this embedding's walk");
      }
      c.set_value(Coord{s->x, s->y}, kOneHot[s->dir]);
      return c;
    }
    default:
      throw ClassifierError("label does not belong to this embedding's walk");
  }
}

std::optional<WalkLabel> Embedding::backward(const Configuration& c) const {
  switch (kind_) {
    case WalkKind::standard: {
      if (c.cells().size() != 1) {
        return std::nullopt;
      }
      const auto& [coord, value] = c.cells().front();
      if (coord.y != 0 || (value != 1 && value != 2)) {
        return std::nullopt;
      }
      return WalkLabel(StandardLabel{coord.x, value == 1 ? 1 : -1});
    }
    case WalkKind::particle_history: {
      if (c.cells().size() != 1) {
        return std::nullopt;
      }
      const auto& [coord, value] = c.cells().front();
      if (coord.y != 0) {
        return std::nullopt;
      }
      if (history_len_ == 1) {
        if (value != 1 && value != 2) {
          return std::nullopt;
        }
        return WalkLabel(
            ParticleHistoryLabel{coord.x, 1, value == 1 ? 0u : 1u});
      }
      const std::uint32_t depth = history_len_ - 1;
      const std::uint64_t side = 1ull << (depth + 1);
      const std::uint64_t s1 = value / side;
      const std::uint64_t s2 = value % side;
      std::uint32_t p1_bit;
      std::uint64_t occupied;
      if (s1 == 0 && (s2 >> depth) == 1) {
        p1_bit = 0;  // moving right
        occupied = s2;
      } else if (s2 == 0 && (s1 >> depth) == 1) {
        p1_bit = 1;  // moving left
        occupied = s1;
      } else {
        return std::nullopt;  // empty, doubly occupied, or stray tail bits
      }
      const std::uint32_t cell_tail =
          static_cast<std::uint32_t>(occupied & ((1ull << depth) - 1));
      return WalkLabel(ParticleHistoryLabel{
          coord.x, history_len_,
          cell_tail_to_walk_tail(cell_tail, p1_bit, history_len_)});
    }
    case WalkKind::site_history: {
      std::int64_t walker_x = 0;
      int walker_p = 0;
      std::uint64_t mem = 0;
      for (const auto& [coord, value] : c.cells()) {
        if (coord.y != 0 || coord.x < 0 ||
            coord.x >= static_cast<std::int64_t>(n_sites_) || value >= 8) {
          return std::nullopt;
        }
        const std::uint64_t movers = value & 3;
        if (movers == 3) {
          return std::nullopt;  // two particles in one cell
        }
        if (movers != 0) {
          if (walker_p != 0) {
            return std::nullopt;  // particles at two different sites
          }
          walker_x = coord.x;
          walker_p = (movers == 1) ? 1 : -1;
        }
        if (value & 4) {
          mem |= 1ull << coord.x;
        }
      }
      if (walker_p == 0) {
        return std::nullopt;  // no particle anywhere
      }
      return WalkLabel(SiteHistoryLabel{walker_x, walker_p, n_sites_, mem});
    }
    case WalkKind::two_d: {
      if (c.cells().size() != 1) {
        return std::nullopt;
      }
      const auto& [coord, value] = c.cells().front();
      for (std::uint8_t dir = 0; dir < 4; ++dir) {
        if (value == kOneHot[dir]) {
          return WalkLabel(TwoDLabel{coord.x, coord.y, dir});
        }
      }
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

Embedding make_embedding(const WalkModel& model) {
  switch (model.kind()) {
    case WalkKind::standard: {
      const auto& p = std::get<StandardParams>(model.params());
      return Embedding(WalkKind::standard,
                       meyer_rule_from_coin(symmetric_coin(p.theta), model.lattice()));
    }
    case WalkKind::particle_history: {
      const auto& p = std::get<ParticleHistoryParams>(model.params());
      Embedding e = [&] {
        if (p.history_len == 1) {
          return Embedding(WalkKind::particle_history,
                           meyer_rule_from_coin(symmetric_coin(p.thetas.front()),
                                                model.lattice()));
        }
        const int depth = static_cast<int>(p.history_len) - 1;
        if (p.variant == HistoryVariant::uniform) {
          return Embedding(
              WalkKind::particle_history,
              build_particle_history_rule(depth, p.thetas.front(), model.lattice()));
        }
        return Embedding(WalkKind::particle_history,
                         build_particle_history_rule(depth, p.thetas, model.lattice()));
      }();
      e.history_len_ = p.history_len;
      return e;
    }
    case WalkKind::site_history: {
      const auto& p = std::get<SiteHistoryParams>(model.params());
      Embedding e(WalkKind::site_history,
                  build_site_history_rule(p.theta_m, p.theta_b,
                                          static_cast<int>(p.n_sites)));
      e.n_sites_ = p.n_sites;
      return e;
    }
    case WalkKind::two_d: {
      const auto& p = std::get<TwoDParams>(model.params());
      // u_b already folds in the direction swap for the non-reversing case,
      // so one rule builder covers both variants.
      return Embedding(WalkKind::two_d, build_2d_rule(p.u_b, model.lattice()));
    }
    case WalkKind::mcgettrick:
      throw Error("the controlled-history walk has no lattice-gas counterpart here");
  }
  throw Error("unknown walk kind");  // unreachable
}

ConfigState embed(const Embedding& e, const WalkState& s) {
  ConfigState out(s.prune_epsilon());
  for (const auto& [label, amp] : s.entries()) {
    out.add(e.forward(label), amp);
  }
  return out;
}

Projection project(const Embedding& e, const ConfigState& s, double max_leakage) {
  Projection p;
  p.state = WalkState(s.prune_epsilon());
  for (const auto& [config, amp] : s.entries()) {
    const std::optional<WalkLabel> label = e.backward(config);
    if (label.has_value()) {
      p.state.add(*label, amp);
    } else {
      p.leakage += abs2(amp);
    }
  }
  if (p.leakage > max_leakage) {
    std::ostringstream os;
    os << "squared norm outside the single-particle image: " << p.leakage
       << " (limit " << max_leakage << ")";
    throw SectorLeakageError(os.str());
  }
  return p;
}

EquivalenceReport check_equivalence(const WalkModel& model, const Embedding& e,
                                    const WalkState& init, std::uint64_t t_max,
                                    double tol) {
  EquivalenceReport report;
  report.tol = tol;
  WalkState walk = init;
  ConfigState config = embed(e, init);
  for (std::uint64_t t = 1; t <= t_max; ++t) {
    walk = model.step_at(walk, t - 1);
    config = global_step(config, e.rule(), t - 1);
    const Projection proj =
        project(e, config, std::numeric_limits<double>::infinity());
    double dev = 0.0;
    for (const auto& [label, amp] : walk.entries()) {
      dev = std::max(dev, std::abs(amp - proj.state.amplitude(label)));
    }
    for (const auto& [label, amp] : proj.state.entries()) {
      if (!walk.contains(label)) {
        dev = std::max(dev, std::abs(amp));
      }
    }
    report.rows.push_back(EquivalenceRow{t, dev, proj.leakage});
    report.max_deviation = std::max(report.max_deviation, dev);
    report.max_leakage = std::max(report.max_leakage, proj.leakage);
  }
  report.passed = report.max_deviation < tol;
  return report;
}

}  // namespace qlgasim
