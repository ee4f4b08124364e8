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

#ifndef QLGASIM_CORRESPONDENCE_HPP
#define QLGASIM_CORRESPONDENCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "qlgasim/qlga.hpp"
#include "qlgasim/walk_model.hpp"

namespace qlgasim {

/// Identifies each walk basis label with a single-particle lattice-gas
/// configuration of the matching rule.  backward(forward(l)) == l for every
/// walk label; backward returns nullopt off the image (multi-particle
/// configurations, malformed cells).
class Embedding {
 public:
  WalkKind kind() const { return kind_; }
  const QlgaRule& rule() const { return rule_; }

  Configuration forward(const WalkLabel& l) const;
  std::optional<WalkLabel> backward(const Configuration& c) const;

 private:
  friend Embedding make_embedding(const WalkModel& model);
  Embedding(WalkKind kind, QlgaRule rule) : kind_(kind), rule_(std::move(rule)) {}

  WalkKind kind_;
  QlgaRule rule_;
  std::uint32_t history_len_ = 1;
  std::uint32_t n_sites_ = 2;
};

/// Builds the lattice-gas rule matching `model` together with the label maps.
/// Covered kinds: standard (direction-pair rule carrying the same coin),
/// velocity-history (tail rule one slot shorter than the walk history, since
/// the walk's current velocity becomes the occupancy bit), site-memory, and
/// four-direction walks.  The controlled-history walk has no lattice-gas
/// counterpart here and is rejected.
Embedding make_embedding(const WalkModel& model);

/// Amplitude-preserving relabeling of a walk state into configuration space.
ConfigState embed(const Embedding& e, const WalkState& s);

struct Projection {
  WalkState state;
  double leakage = 0.0;  // squared norm found outside the embedding image
};

/// Inverse relabeling.  Amplitude outside the image is dropped and reported
/// as leakage; leakage above max_leakage throws SectorLeakageError, since it
/// signals broken particle conservation.
Projection project(const Embedding& e, const ConfigState& s,
                   double max_leakage = 1e-10);

struct EquivalenceRow {
  std::uint64_t t = 0;
  double max_deviation = 0.0;
  double leakage = 0.0;
};

struct EquivalenceReport {
  std::vector<EquivalenceRow> rows;
  double max_deviation = 0.0;
  double max_leakage = 0.0;
  double tol = 0.0;
  bool passed = false;
};

/// Evolves `init` for t_max steps through the walk and, in parallel, its
/// embedding through the lattice gas, comparing amplitudes after every step.
/// Both sides scatter before advecting, so states are compared at identical
/// phases.  Passes iff the largest amplitude deviation stays below tol.
EquivalenceReport check_equivalence(const WalkModel& model, const Embedding& e,
                                    const WalkState& init, std::uint64_t t_max,
                                    double tol);

}  // namespace qlgasim

#endif
