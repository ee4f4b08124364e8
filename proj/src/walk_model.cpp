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

#include "qlgasim/walk_model.hpp"

#include <utility>

#include "qlgasim/errors.hpp"
#include "qlgasim/operators.hpp"

namespace qlgasim {

namespace {

constexpr int kMaxHistoryLen = 20;   // tails are expanded into dense labels
constexpr int kMaxRingMemory = 64;   // visit markers live in one 64-bit word

std::uint32_t tail_mask(std::uint32_t len) {
  return (len >= 32) ? 0xffffffffu : ((1u << len) - 1u);
}

std::uint64_t mem_mask(std::uint32_t n_sites) {
  return (n_sites >= 64) ? ~0ull : ((1ull << n_sites) - 1ull);
}

/// Oldest stored velocity becomes the current one; everything else ages by
/// one slot.
std::uint32_t cycle_tail(std::uint32_t tail, std::uint32_t len) {
  return ((tail << 1) | (tail >> (len - 1))) & tail_mask(len);
}

const StandardLabel& as_standard(const WalkLabel& l) {
  const auto* s = std::get_if<StandardLabel>(&l);
  if (s == nullptr) {
    throw ClassifierError("label does not belong to a plain coined walk");
  }
  if (s->p != 1 && s->p != -1) {
    throw ClassifierError("velocity must be +1 or -1");
  }
  return *s;
}

const ParticleHistoryLabel& as_particle_history(const WalkLabel& l,
                                                std::uint32_t history_len) {
  const auto* s = std::get_if<ParticleHistoryLabel>(&l);
  if (s == nullptr) {
    throw ClassifierError("label does not belong to a velocity-history walk");
  }
  if (s->history_len != history_len) {
    throw ClassifierError("label history length does not match the model");
  }
  if ((s->tail & ~tail_mask(history_len)) != 0) {
    throw ClassifierError("velocity tail has bits beyond the history length");
  }
  return *s;
}

const McGettrickLabel& as_mcgettrick(const WalkLabel& l, std::uint32_t history_len) {
  const auto* s = std::get_if<McGettrickLabel>(&l);
  if (s == nullptr) {
    throw ClassifierError("label does not belong to a controlled-history walk");
  }
  if (s->history_len != history_len) {
    throw ClassifierError("label history length does not match the model");
  }
  if (s->c > 1) {
    throw ClassifierError("control bit must be 0 or 1");
  }
  if ((s->tail & ~tail_mask(history_len)) != 0) {
    throw ClassifierError("velocity tail has bits beyond the history length");
  }
  return *s;
}

const SiteHistoryLabel& as_site_history(const WalkLabel& l, std::uint32_t n_sites) {
  const auto* s = std::get_if<SiteHistoryLabel>(&l);
  if (s == nullptr) {
    throw ClassifierError("label does not belong to a site-memory walk");
  }
  if (s->n_sites != n_sites) {
    throw ClassifierError("label ring size does not match the model");
  }
  if (s->x < 0 || s->x >= static_cast<std::int64_t>(n_sites)) {
    throw ClassifierError("site index out of range");
  }
  if (s->p != 1 && s->p != -1) {
    throw ClassifierError("velocity must be +1 or -1");
  }
  if ((s->mem & ~mem_mask(n_sites)) != 0) {
    throw ClassifierError("memory word has bits beyond the ring size");
  }
  return *s;
}

const TwoDLabel& as_two_d(const WalkLabel& l) {
  const auto* s = std::get_if<TwoDLabel>(&l);
  if (s == nullptr) {
    throw ClassifierError("label does not belong to a four-direction walk");
  }
  if (s->dir > 3) {
    throw ClassifierError("direction must index (w, e, s, n)");
  }
  return *s;
}

// Classifiers share Key = WalkLabel: the key is the label with the scattered
// component reset to index 0, so hashing and equality come for free.

struct StandardCoinClassifier {
  using Key = WalkLabel;
  const LocalUnitary& coin;

  std::pair<Key, std::size_t> classify(const WalkLabel& l) const {
    const StandardLabel& s = as_standard(l);
    return {WalkLabel(StandardLabel{s.x, 1}), s.p == 1 ? 0u : 1u};
  }
  WalkLabel label_of(const Key& k, std::size_t i) const {
    StandardLabel s = std::get<StandardLabel>(k);
    s.p = (i == 0) ? 1 : -1;
    return s;
  }
  const LocalUnitary& unitary(const Key&) const { return coin; }
};

/// Coin on the oldest stored velocity (the last tail slot).
struct TailSlotClassifier {
  using Key = WalkLabel;
  const LocalUnitary& coin;
  std::uint32_t history_len;

  std::pair<Key, std::size_t> classify(const WalkLabel& l) const {
    const ParticleHistoryLabel& s = as_particle_history(l, history_len);
    const std::uint32_t slot_bit = 1u << (history_len - 1);
    ParticleHistoryLabel key = s;
    key.tail &= ~slot_bit;
    return {WalkLabel(key), (s.tail & slot_bit) ? 1u : 0u};
  }
  WalkLabel label_of(const Key& k, std::size_t i) const {
    ParticleHistoryLabel s = std::get<ParticleHistoryLabel>(k);
    if (i == 1) {
      s.tail |= 1u << (history_len - 1);
    }
    return s;
  }
  const LocalUnitary& unitary(const Key&) const { return coin; }
};

struct ControlBitClassifier {
  using Key = WalkLabel;
  const LocalUnitary& coin;
  std::uint32_t history_len;

  std::pair<Key, std::size_t> classify(const WalkLabel& l) const {
    const McGettrickLabel& s = as_mcgettrick(l, history_len);
    McGettrickLabel key = s;
    key.c = 0;
    return {WalkLabel(key), static_cast<std::size_t>(s.c)};
  }
  WalkLabel label_of(const Key& k, std::size_t i) const {
    McGettrickLabel s = std::get<McGettrickLabel>(k);
    s.c = static_cast<std::uint8_t>(i);
    return s;
  }
  const LocalUnitary& unitary(const Key&) const { return coin; }
};

/// Visit-marker coin on the memory qubit of the walker's current site.
struct MarkerClassifier {
  using Key = WalkLabel;
  const LocalUnitary& coin;
  std::uint32_t n_sites;

  std::pair<Key, std::size_t> classify(const WalkLabel& l) const {
    const SiteHistoryLabel& s = as_site_history(l, n_sites);
    const std::uint64_t bit = 1ull << s.x;
    SiteHistoryLabel key = s;
    key.mem &= ~bit;
    return {WalkLabel(key), (s.mem & bit) ? 1u : 0u};
  }
  WalkLabel label_of(const Key& k, std::size_t i) const {
    SiteHistoryLabel s = std::get<SiteHistoryLabel>(k);
    if (i == 1) {
      s.mem |= 1ull << s.x;
    }
    return s;
  }
  const LocalUnitary& unitary(const Key&) const { return coin; }
};

/// Velocity coin selected by the (already updated) marker of the current site.
struct MemoryControlledCoinClassifier {
  using Key = WalkLabel;
  const LocalUnitary& fresh;  // marker 0
  const LocalUnitary& seen;   // marker 1
  std::uint32_t n_sites;

  std::pair<Key, std::size_t> classify(const WalkLabel& l) const {
    const SiteHistoryLabel& s = as_site_history(l, n_sites);
    SiteHistoryLabel key = s;
    key.p = 1;
    return {WalkLabel(key), s.p == 1 ? 0u : 1u};
  }
  WalkLabel label_of(const Key& k, std::size_t i) const {
    SiteHistoryLabel s = std::get<SiteHistoryLabel>(k);
    s.p = (i == 0) ? 1 : -1;
    return s;
  }
  const LocalUnitary& unitary(const Key& k) const {
    const SiteHistoryLabel& s = std::get<SiteHistoryLabel>(k);
    return ((s.mem >> s.x) & 1ull) ? seen : fresh;
  }
};

struct DirectionClassifier {
  using Key = WalkLabel;
  const LocalUnitary& coin;

  std::pair<Key, std::size_t> classify(const WalkLabel& l) const {
    const TwoDLabel& s = as_two_d(l);
    TwoDLabel key = s;
    key.dir = 0;
    return {WalkLabel(key), static_cast<std::size_t>(s.dir)};
  }
  WalkLabel label_of(const Key& k, std::size_t i) const {
    TwoDLabel s = std::get<TwoDLabel>(k);
    s.dir = static_cast<std::uint8_t>(i);
    return s;
  }
  const LocalUnitary& unitary(const Key&) const { return coin; }
};

}  // namespace

WalkModel::WalkModel(WalkKind kind, WalkParams params, Lattice lattice)
    : kind_(kind), params_(std::move(params)), lattice_(std::move(lattice)) {
  switch (kind_) {
    case WalkKind::standard: {
      const auto& p = std::get<StandardParams>(params_);
      if (lattice_.kind() != Lattice::Kind::line &&
          lattice_.kind() != Lattice::Kind::ring) {
        throw Error("plain coined walks need a 1D lattice");
      }
      coins_.push_back(symmetric_coin(p.theta));
      break;
    }
    case WalkKind::particle_history: {
      const auto& p = std::get<ParticleHistoryParams>(params_);
      if (lattice_.kind() != Lattice::Kind::line &&
          lattice_.kind() != Lattice::Kind::ring) {
        throw Error("velocity-history walks need a 1D lattice");
      }
      if (p.history_len < 1 || p.history_len > kMaxHistoryLen) {
        throw Error("history length must be between 1 and 20");
      }
      const std::size_t expected =
          (p.variant == HistoryVariant::uniform) ? 1 : p.history_len;
      if (p.thetas.size() != expected) {
        throw Error("uniform scheduling takes one coin angle; cycled scheduling "
                    "takes one per history slot");
      }
      for (double theta : p.thetas) {
        coins_.push_back(symmetric_coin(theta));
      }
      break;
    }
    case WalkKind::mcgettrick: {
      const auto& p = std::get<McGettrickParams>(params_);
      if (lattice_.kind() != Lattice::Kind::line &&
          lattice_.kind() != Lattice::Kind::ring) {
        throw Error("controlled-history walks need a 1D lattice");
      }
      if (p.history_len < 1 || p.history_len > kMaxHistoryLen) {
        throw Error("history length must be between 1 and 20");
      }
      if (p.u_s.dim() != 2) {
        throw Error("control coin must be 2x2");
      }
      coins_.push_back(p.u_s);
      break;
    }
    case WalkKind::site_history: {
      const auto& p = std::get<SiteHistoryParams>(params_);
      if (p.n_sites < 2 || p.n_sites > kMaxRingMemory) {
        throw Error("site-memory walks support 2 to 64 ring sites");
      }
      lattice_ = Lattice::ring(static_cast<std::int64_t>(p.n_sites));
      coins_.push_back(symmetric_coin(p.theta_m));
      coins_.push_back(balanced_coin());
      coins_.push_back(symmetric_coin(p.theta_b));
      break;
    }
    case WalkKind::two_d: {
      const auto& p = std::get<TwoDParams>(params_);
      if (lattice_.kind() != Lattice::Kind::plane &&
          lattice_.kind() != Lattice::Kind::torus) {
        throw Error("four-direction walks need a 2D lattice");
      }
      if (p.u_b.dim() != 4) {
        throw Error("direction scattering must be 4x4");
      }
      coins_.push_back(p.u_b);
      break;
    }
  }
}

const LocalUnitary& WalkModel::history_coin_for_step(std::uint64_t step_index) const {
  if (kind_ != WalkKind::particle_history) {
    throw Error("per-step coins exist only for velocity-history walks");
  }
  return coins_[step_index % coins_.size()];
}

WalkState WalkModel::step(const WalkState& s) {
  WalkState out = step_at(s, steps_taken_);
  ++steps_taken_;
  return out;
}

WalkState WalkModel::step_at(const WalkState& s, std::uint64_t step_index) const {
  switch (kind_) {
    case WalkKind::standard: {
      WalkState scattered = scatter(s, StandardCoinClassifier{coins_[0]});
      return permute(scattered, [this](const WalkLabel& l) {
        StandardLabel w = as_standard(l);
        w.x = lattice_.wrap(Coord{w.x + w.p, 0}).x;
        return WalkLabel(w);
      });
    }
    case WalkKind::particle_history: {
      const auto& p = std::get<ParticleHistoryParams>(params_);
      const LocalUnitary& coin = coins_[step_index % coins_.size()];
      WalkState scattered = scatter(s, TailSlotClassifier{coin, p.history_len});
      // Memory shift then advection by the recycled velocity.
      return permute(scattered, [this, &p](const WalkLabel& l) {
        ParticleHistoryLabel w = as_particle_history(l, p.history_len);
        w.tail = cycle_tail(w.tail, p.history_len);
        const int p1 = (w.tail & 1u) ? -1 : 1;
        w.x = lattice_.wrap(Coord{w.x + p1, 0}).x;
        return WalkLabel(w);
      });
    }
    case WalkKind::mcgettrick: {
      const auto& p = std::get<McGettrickParams>(params_);
      WalkState cycled = permute(s, [&p](const WalkLabel& l) {
        McGettrickLabel w = as_mcgettrick(l, p.history_len);
        w.tail = cycle_tail(w.tail, p.history_len);
        return WalkLabel(w);
      });
      WalkState controlled =
          scatter(cycled, ControlBitClassifier{coins_[0], p.history_len});
      // Transmit or reflect the current velocity, then advect by it.
      return permute(controlled, [this, &p](const WalkLabel& l) {
        McGettrickLabel w = as_mcgettrick(l, p.history_len);
        const RicochetMode mode = (w.c == 0) ? p.mode0 : p.mode1;
        if (mode == RicochetMode::reflect) {
          w.tail ^= 1u;
        }
        const int p1 = (w.tail & 1u) ? -1 : 1;
        w.x = lattice_.wrap(Coord{w.x + p1, 0}).x;
        return WalkLabel(w);
      });
    }
    case WalkKind::site_history: {
      const auto& p = std::get<SiteHistoryParams>(params_);
      WalkState marked = scatter(s, MarkerClassifier{coins_[0], p.n_sites});
      WalkState bounced = scatter(
          marked, MemoryControlledCoinClassifier{coins_[1], coins_[2], p.n_sites});
      return permute(bounced, [this, &p](const WalkLabel& l) {
        SiteHistoryLabel w = as_site_history(l, p.n_sites);
        w.x = lattice_.wrap(Coord{w.x + w.p, 0}).x;
        return WalkLabel(w);
      });
    }
    case WalkKind::two_d: {
      WalkState scattered = scatter(s, DirectionClassifier{coins_[0]});
      return permute(scattered, [this](const WalkLabel& l) {
        TwoDLabel w = as_two_d(l);
        static constexpr std::int64_t kDx[4] = {-1, 1, 0, 0};
        static constexpr std::int64_t kDy[4] = {0, 0, -1, 1};
        const Coord moved =
            lattice_.wrap(Coord{w.x + kDx[w.dir], w.y + kDy[w.dir]});
        w.x = moved.x;
        w.y = moved.y;
        return WalkLabel(w);
      });
    }
  }
  throw Error("unknown walk kind");  // unreachable
}

WalkModel build_standard(double theta, const Lattice& lattice) {
  return WalkModel(WalkKind::standard, StandardParams{theta}, lattice);
}

WalkModel build_particle_history(int history_len, const std::vector<double>& thetas,
                                 HistoryVariant variant, const Lattice& lattice) {
  if (history_len < 1) {
    throw Error("history length must be between 1 and 20");
  }
  ParticleHistoryParams p;
  p.history_len = static_cast<std::uint32_t>(history_len);
  p.thetas = thetas;
  p.variant = variant;
  return WalkModel(WalkKind::particle_history, std::move(p), lattice);
}

WalkModel build_mcgettrick(int history_len, const LocalUnitary& u_s,
                           RicochetMode mode0, RicochetMode mode1,
                           const Lattice& lattice) {
  if (history_len < 1) {
    throw Error("history length must be between 1 and 20");
  }
  McGettrickParams p{static_cast<std::uint32_t>(history_len), u_s, mode0, mode1};
  return WalkModel(WalkKind::mcgettrick, std::move(p), lattice);
}

WalkModel build_site_history(int n_sites, double theta_m, double theta_b) {
  if (n_sites < 2 || n_sites > kMaxRingMemory) {
    throw Error("site-memory walks support 2 to 64 ring sites");
  }
  SiteHistoryParams p{static_cast<std::uint32_t>(n_sites), theta_m, theta_b};
  return WalkModel(WalkKind::site_history, std::move(p),
                   Lattice::ring(n_sites));
}

WalkModel build_2d(TwoDVariant variant, const LocalUnitary& c,
                   const Lattice& lattice) {
  if (c.dim() != 4) {
    throw Error("direction scattering must be 4x4");
  }
  if (!has_zero_diagonal(c, 1e-12)) {
    throw Error("four-direction walks take a coin with an all-zero diagonal");
  }
  TwoDParams p{variant, (variant == TwoDVariant::non_repeating)
                            ? c
                            : c.compose_after(direction_swap())};
  return WalkModel(WalkKind::two_d, std::move(p), lattice);
}

}  // namespace qlgasim
