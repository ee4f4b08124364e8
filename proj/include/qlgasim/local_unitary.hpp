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

#ifndef QLGASIM_LOCAL_UNITARY_HPP
#define QLGASIM_LOCAL_UNITARY_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qlgasim/amplitude.hpp"

namespace qlgasim {

/// Dense unitary acting on one finite factor of a label space.
///
/// Unitarity is checked at construction and is a hard invariant: code holding
/// a LocalUnitary may assume ||U'U - I||_max <= 1e-12.  The full Gram check is
/// cubic, so above kFullCheckDim construction falls back to a seeded sampled
/// check (all column norms, random column pairs, random round trips).
class LocalUnitary {
 public:
  static constexpr double kUnitarityTol = 1e-12;
  static constexpr std::size_t kFullCheckDim = 512;

  /// 1x1 identity; exists so containers of LocalUnitary are constructible.
  LocalUnitary();

  /// `row_major` holds dim*dim entries, row index major.  `basis_doc` names
  /// the basis vectors (generated as indices when omitted).
  LocalUnitary(std::size_t dim, std::vector<Amplitude> row_major,
               std::vector<std::string> basis_doc = {});

  static LocalUnitary identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const Amplitude& at(std::size_t row, std::size_t col) const {
    return m_[row * dim_ + col];
  }
  const std::vector<Amplitude>& data() const { return m_; }

  /// Interleaved (re, im) view for the kernels.
  const double* raw() const { return reinterpret_cast<const double*>(m_.data()); }

  const std::vector<std::string>& basis_doc() const { return basis_doc_; }

  /// True when column 0 is exactly e0: required of every cellwise scattering
  /// operator so the quiescent state is a strict fixed point.
  bool fixes_first_basis_vector() const;

  /// max |(U'U - I)_ij| over the pairs the validation mode inspects.
  double unitarity_defect() const;

  /// Matrix product this * rhs (this applied last).
  LocalUnitary compose_after(const LocalUnitary& rhs) const;

  LocalUnitary adjoint() const;

  bool same_entries(const LocalUnitary& other, double tol) const;

 private:
  std::size_t dim_;
  std::vector<Amplitude> m_;
  std::vector<std::string> basis_doc_;

  void validate() const;
};

}  // namespace qlgasim

#endif
