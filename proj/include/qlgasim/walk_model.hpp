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

#ifndef QLGASIM_WALK_MODEL_HPP
#define QLGASIM_WALK_MODEL_HPP

#include <cstdint>
#include <variant>
#include <vector>

#include "qlgasim/lattice.hpp"
#include "qlgasim/local_unitary.hpp"
#include "qlgasim/sparse_state.hpp"
#include "qlgasim/walk_label.hpp"

namespace qlgasim {

using WalkState = SparseState<WalkLabel>;

enum class WalkKind { standard, particle_history, mcgettrick, site_history, two_d };

/// Scheduling of the velocity-history coins.
enum class HistoryVariant {
  uniform,   // one angle, reused every step
  cycled,    // history_len angles, angle t mod N at step t
};

/// Whether the control bit keeps or flips the recycled velocity.
enum class RicochetMode { transmit, reflect };

enum class TwoDVariant { non_repeating, non_reversing };

struct StandardParams {
  double theta = 0.0;
};

struct ParticleHistoryParams {
  std::uint32_t history_len = 1;
  std::vector<double> thetas;
  HistoryVariant variant = HistoryVariant::uniform;
};

struct McGettrickParams {
  std::uint32_t history_len = 1;
  LocalUnitary u_s;  // ricochet-control coin on |c>
  RicochetMode mode0 = RicochetMode::transmit;
  RicochetMode mode1 = RicochetMode::reflect;
};

struct SiteHistoryParams {
  std::uint32_t n_sites = 2;
  double theta_m = 0.0;  // visit-marker strength
  double theta_b = 0.0;  // back-action angle; balanced coin is theta = pi/4
};

struct TwoDParams {
  TwoDVariant variant = TwoDVariant::non_repeating;
  LocalUnitary u_b;  // effective direction scattering (includes the swap for
                     // the non-reversing variant)
};

using WalkParams = std::variant<StandardParams, ParticleHistoryParams,
                                McGettrickParams, SiteHistoryParams, TwoDParams>;

/// One first-quantized walk: a step operator on SparseState<WalkLabel>.
/// Every step is composed from the two state primitives (label permutation
/// and blockwise scattering).  The model is immutable after construction
/// except for the step counter, which schedules per-step coins.
class WalkModel {
 public:
  WalkModel(WalkKind kind, WalkParams params, Lattice lattice);

  WalkKind kind() const { return kind_; }
  const Lattice& lattice() const { return lattice_; }
  const WalkParams& params() const { return params_; }
  std::uint64_t steps_taken() const { return steps_taken_; }
  void reset_step_counter() { steps_taken_ = 0; }

  /// Applies the transition scheduled for the internal counter, then
  /// increments the counter.
  WalkState step(const WalkState& s);

  /// Applies the transition scheduled for an explicit step index; does not
  /// touch the counter.
  WalkState step_at(const WalkState& s, std::uint64_t step_index) const;

  /// The coin applied to the scattered tail slot at a given step
  /// (velocity-history models only).
  const LocalUnitary& history_coin_for_step(std::uint64_t step_index) const;

 private:
  WalkKind kind_;
  WalkParams params_;
  Lattice lattice_;
  std::uint64_t steps_taken_ = 0;
  std::vector<LocalUnitary> coins_;  // kind-dependent prebuilt matrices
};

/// Plain coined walk; velocity basis (|+1>, |-1>), the coin sends |+1> to
/// cos(theta)|+1> + i sin(theta)|-1>.
WalkModel build_standard(double theta, const Lattice& lattice = Lattice::line());

/// Walk remembering its last `history_len` velocities.  Each step scatters
/// the oldest stored velocity with the scheduled coin, recycles it into the
/// travel direction, and advects.  `thetas` holds one angle (uniform) or
/// history_len angles (cycled).
WalkModel build_particle_history(int history_len, const std::vector<double>& thetas,
                                 HistoryVariant variant,
                                 const Lattice& lattice = Lattice::line());

/// Velocity-history walk with a control qubit: the tail cycles, u_s scatters
/// the control, and the control selects transmit/reflect on the current
/// velocity before advection.
WalkModel build_mcgettrick(int history_len, const LocalUnitary& u_s,
                           RicochetMode mode0, RicochetMode mode1,
                           const Lattice& lattice = Lattice::line());

/// Walk on a ring whose sites remember visits: the marker coin (theta_m)
/// rotates the memory qubit of the current site, then the velocity scatters
/// with the balanced coin on unvisited sites and the back-action coin
/// (theta_b) on visited ones.  2 <= n_sites <= 64.
WalkModel build_site_history(int n_sites, double theta_m, double theta_b);

/// Planar four-direction walk.  `c` must be unitary with an exactly-zero
/// diagonal (within 1e-12); the non-reversing variant uses c * J where J
/// swaps west/east and south/north.
WalkModel build_2d(TwoDVariant variant, const LocalUnitary& c,
                   const Lattice& lattice = Lattice::plane());

}  // namespace qlgasim

#endif
