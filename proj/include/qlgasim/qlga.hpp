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

#ifndef QLGASIM_QLGA_HPP
#define QLGASIM_QLGA_HPP

#include <cstdint>
#include <vector>

#include "qlgasim/configuration.hpp"
#include "qlgasim/lattice.hpp"
#include "qlgasim/local_unitary.hpp"
#include "qlgasim/sparse_state.hpp"

namespace qlgasim {

/// Shape of one lattice-gas cell: an ordered list of subcell factors.
///
/// Cell basis indices are mixed-radix with subcell 0 as the most significant
/// digit, so the all-quiescent cell is always index 0.  A subcell that counts
/// particles keeps its occupancy bit in the most significant digit of its own
/// value (values >= dim/2 hold a particle); tail digits below it are memory.
struct CellSpec {
  std::vector<std::uint32_t> subcell_dims;
  std::vector<Coord> neighborhood;      // e_j: subcell j at x is fetched from x + e_j
  std::vector<bool> counts_particles;   // false marks pure memory subcells
  Lattice lattice;
  std::uint32_t quiescent_index = 0;

  std::size_t subcell_count() const { return subcell_dims.size(); }
  std::uint64_t cell_dim() const;

  /// Subcell values, most significant (subcell 0) first.
  std::vector<std::uint32_t> decode(std::uint64_t cell_value) const;
  std::uint64_t encode(const std::vector<std::uint32_t>& subcell_values) const;

  int particles_in(std::uint64_t cell_value) const;

  void validate() const;
};

/// A lattice-gas update rule: cellwise scattering followed by advection.
/// The scattering operator must fix the quiescent cell exactly; together with
/// unitarity this means active cells can never gain or lose quiescent
/// amplitude, so sparse support tracking stays exact.
class QlgaRule {
 public:
  QlgaRule(CellSpec spec, LocalUnitary local_s,
           std::vector<LocalUnitary> time_schedule = {});

  const CellSpec& spec() const { return spec_; }
  const LocalUnitary& local_s() const { return local_s_; }
  const std::vector<LocalUnitary>& time_schedule() const { return schedule_; }

  /// Matrix applied at step t: time_schedule[t mod len] when a schedule is
  /// present, local_s otherwise.
  const LocalUnitary& scattering_for_step(std::uint64_t t) const;

  /// Nonzero entries of column v of the step-t scattering, as (row, amp).
  const std::vector<std::vector<std::pair<std::uint64_t, Amplitude>>>&
  sparse_columns_for_step(std::uint64_t t) const;

 private:
  CellSpec spec_;
  LocalUnitary local_s_;
  std::vector<LocalUnitary> schedule_;
  // Sparse columns per distinct matrix; index 0 = local_s, then schedule.
  std::vector<std::vector<std::vector<std::pair<std::uint64_t, Amplitude>>>> columns_;
};

using ConfigState = SparseState<Configuration>;

/// Advection: the value of subcell j at x is fetched from x + e_j, so stored
/// values move by -e_j.  A pure label permutation.
ConfigState advect(const ConfigState& s, const CellSpec& spec);

/// Applies the cellwise scattering at every lattice site.  Sites outside the
/// stored support are quiescent and fixed by construction, so only stored
/// cells are expanded.
ConfigState scatter_cells(const ConfigState& s, const QlgaRule& rule,
                          std::uint64_t step_index = 0);

/// One global step: scatter, then advect.
ConfigState global_step(const ConfigState& s, const QlgaRule& rule,
                        std::uint64_t step_index = 0);

int particle_number(const Configuration& c, const CellSpec& spec);

// Rule builders.  Cell layouts:
//   one-particle-per-direction (1D): subcells (left-mover, right-mover).
//   velocity-history (1D):          same pair, each with a tail of
//                                   `tail_len` velocity qubits below the
//                                   occupancy bit.
//   site-memory ring:               subcells (memory, left-mover,
//                                   right-mover); memory does not advect.
//   four-direction plane:           subcells (w, e, s, n).

/// Scattering = meyer_scattering(theta, alpha, beta) on the direction pair.
QlgaRule build_meyer_rule(double theta, double alpha, double beta,
                          const Lattice& lattice = Lattice::line());

/// Same cell layout as build_meyer_rule but with an arbitrary 2x2 velocity
/// coin (basis |+1>, |-1>) in the one-particle block and identity on |11>.
QlgaRule meyer_rule_from_coin(const LocalUnitary& coin,
                              const Lattice& lattice = Lattice::line());

/// Velocity-history rule.  The scattering is memory_shift * ricochet where
/// the ricochet applies the coin to the oldest stored velocity of the
/// occupied side and the memory shift recycles it into the travel direction.
QlgaRule build_particle_history_rule(int tail_len, double theta,
                                     const Lattice& lattice = Lattice::line());

/// Velocity-history rule with per-step coins cycled via the time schedule.
QlgaRule build_particle_history_rule(int tail_len, const std::vector<double>& thetas,
                                     const Lattice& lattice = Lattice::line());

/// Site-memory rule on a ring: scattering marks the local memory qubit with
/// symmetric_coin(theta_m), then scatters the direction pair with
/// balanced_coin() on unvisited sites and symmetric_coin(theta_b) on visited
/// ones.
QlgaRule build_site_history_rule(double theta_m, double theta_b, int n_sites);

/// Four-direction rule: `coin` acts on the one-particle block (w, e, s, n),
/// identity on every other occupancy pattern.
QlgaRule build_2d_rule(const LocalUnitary& coin,
                       const Lattice& lattice = Lattice::plane());

// The scattering factors, exposed for direct property checks.
LocalUnitary particle_history_memory(int tail_len);
LocalUnitary particle_history_ricochet(int tail_len, const LocalUnitary& coin);
LocalUnitary site_history_memory(double theta_m);
LocalUnitary site_history_ricochet(double theta_b);

}  // namespace qlgasim

#endif
