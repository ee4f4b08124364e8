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

#include "qlgasim/dense_oracle.hpp"

#include <algorithm>
#include <utility>

#include "qlgasim/errors.hpp"
#include "qlgasim/operators.hpp"

namespace qlgasim {

namespace {

constexpr std::size_t kMaxOracleDim = 65536;
constexpr std::size_t kMaxDenseMatrixDim = 2048;

// The oracle works on velocity tails as explicit +1/-1 sequences (entry 0 =
// current velocity) so its update rules are spelled out independently of the
// packed-bits stepping code.
std::vector<int> unpack_tail(std::uint32_t tail, std::uint32_t len) {
  std::vector<int> v(len);
  for (std::uint32_t k = 0; k < len; ++k) {
    v[k] = ((tail >> k) & 1u) ? -1 : 1;
  }
  return v;
}

std::uint32_t pack_tail(const std::vector<int>& v) {
  std::uint32_t tail = 0;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == -1) {
      tail |= 1u << k;
    }
  }
  return tail;
}

/// (p1 ... pN) -> (pN, p1 ... p_{N-1}): the oldest velocity moves to front.
void recycle_oldest(std::vector<int>& v) {
  std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
}

using Fanout = std::vector<std::pair<WalkLabel, Amplitude>>;

}  // namespace

DenseWalkOracle::DenseWalkOracle(const WalkModel& model, const Lattice& truncation)
    : truncation_(truncation), kind_(model.kind()) {
  if (!truncation_.finite()) {
    throw Error("oracle truncation must be a finite lattice");
  }
  const bool model_is_2d = (kind_ == WalkKind::two_d);
  if (model_is_2d != truncation_.is_2d()) {
    throw Error("oracle truncation dimensionality does not match the walk");
  }
  if (model.lattice().finite() && !(model.lattice() == truncation_)) {
    throw Error("a finite-lattice walk must be enumerated over its own lattice");
  }

  const std::vector<Coord> coords = truncation_.all_coords();
  switch (kind_) {
    case WalkKind::standard: {
      for (const Coord& c : coords) {
        for (int p : {1, -1}) {
          labels_.emplace_back(StandardLabel{c.x, p});
        }
      }
      break;
    }
    case WalkKind::particle_history: {
      const auto& p = std::get<ParticleHistoryParams>(model.params());
      const std::uint64_t tails = 1ull << p.history_len;
      for (const Coord& c : coords) {
        for (std::uint64_t tail = 0; tail < tails; ++tail) {
          labels_.emplace_back(ParticleHistoryLabel{
              c.x, p.history_len, static_cast<std::uint32_t>(tail)});
        }
      }
      break;
    }
    case WalkKind::mcgettrick: {
      const auto& p = std::get<McGettrickParams>(model.params());
      const std::uint64_t tails = 1ull << p.history_len;
      for (const Coord& c : coords) {
        for (std::uint8_t ctrl = 0; ctrl < 2; ++ctrl) {
          for (std::uint64_t tail = 0; tail < tails; ++tail) {
            labels_.emplace_back(McGettrickLabel{
                c.x, ctrl, p.history_len, static_cast<std::uint32_t>(tail)});
          }
        }
      }
      break;
    }
    case WalkKind::site_history: {
      const auto& p = std::get<SiteHistoryParams>(model.params());
      if (p.n_sites > 16) {
        throw Error("truncation too large to enumerate");
      }
      const std::uint64_t mems = 1ull << p.n_sites;
      for (const Coord& c : coords) {
        for (int vel : {1, -1}) {
          for (std::uint64_t mem = 0; mem < mems; ++mem) {
            labels_.emplace_back(SiteHistoryLabel{c.x, vel, p.n_sites, mem});
          }
        }
      }
      break;
    }
    case WalkKind::two_d: {
      for (const Coord& c : coords) {
        for (std::uint8_t dir = 0; dir < 4; ++dir) {
          labels_.emplace_back(TwoDLabel{c.x, c.y, dir});
        }
      }
      break;
    }
  }

  if (labels_.size() > kMaxOracleDim) {
    throw Error("truncation too large to enumerate");
  }
  std::sort(labels_.begin(), labels_.end());
  index_.reserve(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    index_.emplace(labels_[i], i);
  }

  build_pipelines(model);
}

std::optional<std::size_t> DenseWalkOracle::index_of(const WalkLabel& l) const {
  const auto it = index_.find(l);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

void DenseWalkOracle::build_pipelines(const WalkModel& model) {
  auto make_stage = [&](auto&& fanout_of) {
    StageCols cols(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      for (const auto& [label, amp] : fanout_of(labels_[i])) {
        const auto it = index_.find(label);
        if (it == index_.end()) {
          throw Error("oracle stage produced a label outside the enumerated space");
        }
        if (amp.real() != 0.0 || amp.imag() != 0.0) {
          cols[i].emplace_back(static_cast<std::uint32_t>(it->second), amp);
        }
      }
    }
    return cols;
  };

  switch (kind_) {
    case WalkKind::standard: {
      const auto& p = std::get<StandardParams>(model.params());
      const LocalUnitary coin = symmetric_coin(p.theta);
      StageCols scatter_stage = make_stage([&](const WalkLabel& l) {
        const auto& s = std::get<StandardLabel>(l);
        const std::size_t in = (s.p == 1) ? 0 : 1;
        Fanout out;
        for (std::size_t o = 0; o < 2; ++o) {
          out.emplace_back(StandardLabel{s.x, o == 0 ? 1 : -1}, coin.at(o, in));
        }
        return out;
      });
      StageCols advect_stage = make_stage([&](const WalkLabel& l) {
        auto s = std::get<StandardLabel>(l);
        s.x = truncation_.wrap(Coord{s.x + s.p, 0}).x;
        return Fanout{{s, Amplitude(1.0, 0.0)}};
      });
      pipelines_.push_back({std::move(scatter_stage), std::move(advect_stage)});
      break;
    }
    case WalkKind::particle_history: {
      const auto& p = std::get<ParticleHistoryParams>(model.params());
      StageCols memory_stage = make_stage([&](const WalkLabel& l) {
        auto s = std::get<ParticleHistoryLabel>(l);
        std::vector<int> vels = unpack_tail(s.tail, p.history_len);
        recycle_oldest(vels);
        s.tail = pack_tail(vels);
        return Fanout{{s, Amplitude(1.0, 0.0)}};
      });
      StageCols advect_stage = make_stage([&](const WalkLabel& l) {
        auto s = std::get<ParticleHistoryLabel>(l);
        const std::vector<int> vels = unpack_tail(s.tail, p.history_len);
        s.x = truncation_.wrap(Coord{s.x + vels.front(), 0}).x;
        return Fanout{{s, Amplitude(1.0, 0.0)}};
      });
      for (double theta : p.thetas) {
        const LocalUnitary coin = symmetric_coin(theta);
        StageCols ricochet_stage = make_stage([&](const WalkLabel& l) {
          const auto& s = std::get<ParticleHistoryLabel>(l);
          std::vector<int> vels = unpack_tail(s.tail, p.history_len);
          const std::size_t in = (vels.back() == 1) ? 0 : 1;
          Fanout out;
          for (std::size_t o = 0; o < 2; ++o) {
            vels.back() = (o == 0) ? 1 : -1;
            ParticleHistoryLabel next = s;
            next.tail = pack_tail(vels);
            out.emplace_back(next, coin.at(o, in));
          }
          return out;
        });
        pipelines_.push_back({std::move(ricochet_stage), memory_stage, advect_stage});
      }
      break;
    }
    case WalkKind::mcgettrick: {
      const auto& p = std::get<McGettrickParams>(model.params());
      StageCols memory_stage = make_stage([&](const WalkLabel& l) {
        auto s = std::get<McGettrickLabel>(l);
        std::vector<int> vels = unpack_tail(s.tail, p.history_len);
        recycle_oldest(vels);
        s.tail = pack_tail(vels);
        return Fanout{{s, Amplitude(1.0, 0.0)}};
      });
      StageCols control_stage = make_stage([&](const WalkLabel& l) {
        const auto& s = std::get<McGettrickLabel>(l);
        Fanout out;
        for (std::size_t o = 0; o < 2; ++o) {
          McGettrickLabel next = s;
          next.c = static_cast<std::uint8_t>(o);
          out.emplace_back(next, p.u_s.at(o, s.c));
        }
        return out;
      });
      StageCols ricochet_advect_stage = make_stage([&](const WalkLabel& l) {
        auto s = std::get<McGettrickLabel>(l);
        std::vector<int> vels = unpack_tail(s.tail, p.history_len);
        const RicochetMode mode = (s.c == 0) ? p.mode0 : p.mode1;
        if (mode == RicochetMode::reflect) {
          vels.front() = -vels.front();
        }
        s.tail = pack_tail(vels);
        s.x = truncation_.wrap(Coord{s.x + vels.front(), 0}).x;
        return Fanout{{s, Amplitude(1.0, 0.0)}};
      });
      pipelines_.push_back({std::move(memory_stage), std::move(control_stage),
                            std::move(ricochet_advect_stage)});
      break;
    }
    case WalkKind::site_history: {
      const auto& p = std::get<SiteHistoryParams>(model.params());
      const LocalUnitary marker = symmetric_coin(p.theta_m);
      const LocalUnitary fresh = balanced_coin();
      const LocalUnitary seen = symmetric_coin(p.theta_b);
      StageCols marker_stage = make_stage([&](const WalkLabel& l) {
        const auto& s = std::get<SiteHistoryLabel>(l);
        const std::uint64_t bit = 1ull << s.x;
        const std::size_t in = (s.mem & bit) ? 1 : 0;
        Fanout out;
        for (std::size_t o = 0; o < 2; ++o) {
          SiteHistoryLabel next = s;
          next.mem = (o == 1) ? (s.mem | bit) : (s.mem & ~bit);
          out.emplace_back(next, marker.at(o, in));
        }
        return out;
      });
      StageCols bounce_stage = make_stage([&](const WalkLabel& l) {
        const auto& s = std::get<SiteHistoryLabel>(l);
        const LocalUnitary& coin = ((s.mem >> s.x) & 1ull) ? seen : fresh;
        const std::size_t in = (s.p == 1) ? 0 : 1;
        Fanout out;
        for (std::size_t o = 0; o < 2; ++o) {
          SiteHistoryLabel next = s;
          next.p = (o == 0) ? 1 : -1;
          out.emplace_back(next, coin.at(o, in));
        }
        return out;
      });
      StageCols advect_stage = make_stage([&](const WalkLabel& l) {
        auto s = std::get<SiteHistoryLabel>(l);
        s.x = truncation_.wrap(Coord{s.x + s.p, 0}).x;
        return Fanout{{s, Amplitude(1.0, 0.0)}};
      });
      pipelines_.push_back({std::move(marker_stage), std::move(bounce_stage),
                            std::move(advect_stage)});
      break;
    }
    case WalkKind::two_d: {
      const auto& p = std::get<TwoDParams>(model.params());
      StageCols scatter_stage = make_stage([&](const WalkLabel& l) {
        const auto& s = std::get<TwoDLabel>(l);
        Fanout out;
        for (std::size_t o = 0; o < 4; ++o) {
          TwoDLabel next = s;
          next.dir = static_cast<std::uint8_t>(o);
          out.emplace_back(next, p.u_b.at(o, s.dir));
        }
        return out;
      });
      StageCols advect_stage = make_stage([&](const WalkLabel& l) {
        auto s = std::get<TwoDLabel>(l);
        static constexpr std::int64_t kDx[4] = {-1, 1, 0, 0};
        static constexpr std::int64_t kDy[4] = {0, 0, -1, 1};
        const Coord moved =
            truncation_.wrap(Coord{s.x + kDx[s.dir], s.y + kDy[s.dir]});
        s.x = moved.x;
        s.y = moved.y;
        return Fanout{{s, Amplitude(1.0, 0.0)}};
      });
      pipelines_.push_back({std::move(scatter_stage), std::move(advect_stage)});
      break;
    }
  }
}

std::vector<Amplitude> DenseWalkOracle::apply_step(const std::vector<Amplitude>& v,
                                                   std::uint64_t step_index) const {
  if (v.size() != labels_.size()) {
    throw Error("oracle vector length does not match the enumerated space");
  }
  const auto& pipeline = pipelines_[pipelines_.size() == 1
                                        ? 0
                                        : step_index % pipelines_.size()];
  std::vector<Amplitude> cur = v;
  std::vector<Amplitude> next(v.size());
  for (const StageCols& stage : pipeline) {
    std::fill(next.begin(), next.end(), Amplitude(0.0, 0.0));
    for (std::size_t col = 0; col < stage.size(); ++col) {
      const Amplitude a = cur[col];
      if (a.real() == 0.0 && a.imag() == 0.0) {
        continue;
      }
      for (const auto& [row, amp] : stage[col]) {
        next[row] += amp * a;
      }
    }
    cur.swap(next);
  }
  return cur;
}

LocalUnitary DenseWalkOracle::step_matrix(std::uint64_t step_index) const {
  const std::size_t n = labels_.size();
  if (n > kMaxDenseMatrixDim) {
    throw Error("label space too large for a dense step matrix; use apply_step");
  }
  std::vector<Amplitude> entries(n * n, Amplitude(0.0, 0.0));
  std::vector<Amplitude> basis(n, Amplitude(0.0, 0.0));
  for (std::size_t c = 0; c < n; ++c) {
    basis[c] = Amplitude(1.0, 0.0);
    const std::vector<Amplitude> col = apply_step(basis, step_index);
    basis[c] = Amplitude(0.0, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      entries[r * n + c] = col[r];
    }
  }
  std::vector<std::string> doc;
  doc.reserve(n);
  for (const WalkLabel& l : labels_) {
    doc.push_back(to_string(l));
  }
  return LocalUnitary(n, std::move(entries), std::move(doc));
}

std::vector<Amplitude> DenseWalkOracle::to_vector(const SparseState<WalkLabel>& s) const {
  std::vector<Amplitude> v(labels_.size(), Amplitude(0.0, 0.0));
  for (const auto& [label, amp] : s.entries()) {
    const auto idx = index_of(label);
    if (!idx.has_value()) {
      throw Error("state has support outside the enumerated label space");
    }
    v[*idx] += amp;
  }
  return v;
}

SparseState<WalkLabel> DenseWalkOracle::to_state(const std::vector<Amplitude>& v) const {
  if (v.size() != labels_.size()) {
    throw Error("oracle vector length does not match the enumerated space");
  }
  SparseState<WalkLabel> s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].real() != 0.0 || v[i].imag() != 0.0) {
      s.add(labels_[i], v[i]);
    }
  }
  return s;
}

bool DenseWalkOracle::touches_seam(const SparseState<WalkLabel>& s) const {
  for (const auto& [label, amp] : s.entries()) {
    (void)amp;
    const Coord c = std::visit(
        [](const auto& alt) -> Coord {
          using Alt = std::decay_t<decltype(alt)>;
          if constexpr (std::is_same_v<Alt, TwoDLabel>) {
            return Coord{alt.x, alt.y};
          } else {
            return Coord{alt.x, 0};
          }
        },
        label);
    if (truncation_.on_seam(c)) {
      return true;
    }
  }
  return false;
}

LocalUnitary dense_operator(const WalkModel& model, const Lattice& truncation,
                            std::uint64_t step_index) {
  return DenseWalkOracle(model, truncation).step_matrix(step_index);
}

}  // namespace qlgasim
