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

#ifndef QLGASIM_DENSE_ORACLE_HPP
#define QLGASIM_DENSE_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "qlgasim/lattice.hpp"
#include "qlgasim/local_unitary.hpp"
#include "qlgasim/walk_model.hpp"

namespace qlgasim {

/// Explicit-matrix reference implementation of a walk step over an
/// enumerated finite label space.  Built directly from the stage definitions
/// (stage-by-stage sparse matrices over the full basis) rather than from the
/// sparse stepping code, so the two can check each other.
///
/// The truncation must be finite (periodic).  When it is a window cut out of
/// an infinite lattice, comparisons against the untruncated walk are valid
/// only while the support stays off the wrap seam; see touches_seam().
class DenseWalkOracle {
 public:
  DenseWalkOracle(const WalkModel& model, const Lattice& truncation);

  std::size_t dim() const { return labels_.size(); }
  const Lattice& truncation() const { return truncation_; }
  const std::vector<WalkLabel>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const WalkLabel& l) const;

  /// One step on a dense vector over labels(), stage matrices applied in
  /// definition order.
  std::vector<Amplitude> apply_step(const std::vector<Amplitude>& v,
                                    std::uint64_t step_index = 0) const;

  /// The explicit one-step matrix (columns = images of basis labels).
  /// Refuses dimensions above 2048; use apply_step for larger spaces.
  LocalUnitary step_matrix(std::uint64_t step_index = 0) const;

  /// Dense view of a sparse state; throws if any support label lies outside
  /// the enumerated space.
  std::vector<Amplitude> to_vector(const SparseState<WalkLabel>& s) const;
  SparseState<WalkLabel> to_state(const std::vector<Amplitude>& v) const;

  /// True if any support label sits on the truncation's wrap seam, i.e. where
  /// a windowed comparison against the infinite lattice stops being faithful.
  bool touches_seam(const SparseState<WalkLabel>& s) const;

 private:
  // Column-sparse stage matrix: outputs of each basis label.
  using StageCols = std::vector<std::vector<std::pair<std::uint32_t, Amplitude>>>;

  void build_pipelines(const WalkModel& model);

  Lattice truncation_;
  WalkKind kind_;
  std::vector<WalkLabel> labels_;
  std::unordered_map<WalkLabel, std::size_t> index_;
  // pipelines_[phase] = stage list for step indices congruent to phase.
  std::vector<std::vector<StageCols>> pipelines_;
};

/// Convenience wrapper: the one-step matrix of `model` over `truncation`.
LocalUnitary dense_operator(const WalkModel& model, const Lattice& truncation,
                            std::uint64_t step_index = 0);

}  // namespace qlgasim

#endif
