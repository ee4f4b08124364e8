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

#include "qlgasim/local_unitary.hpp"

#include <cmath>
#include <random>

#include "qlgasim/errors.hpp"
#include "qlgasim/kernels.hpp"

namespace qlgasim {
namespace {

std::vector<std::string> default_doc(std::size_t dim) {
  std::vector<std::string> doc;
  doc.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    doc.push_back(std::to_string(i));
  }
  return doc;
}

}  // namespace

LocalUnitary::LocalUnitary() : LocalUnitary(1, {Amplitude(1.0, 0.0)}) {}

LocalUnitary::LocalUnitary(std::size_t dim, std::vector<Amplitude> row_major,
                           std::vector<std::string> basis_doc)
    : dim_(dim), m_(std::move(row_major)), basis_doc_(std::move(basis_doc)) {
  if (dim_ == 0) {
    throw Error("LocalUnitary: dimension must be positive");
  }
  if (m_.size() != dim_ * dim_) {
    throw Error("LocalUnitary: entry count does not match dimension");
  }
  if (basis_doc_.empty()) {
    basis_doc_ = default_doc(dim_);
  } else if (basis_doc_.size() != dim_) {
    throw Error("LocalUnitary: basis_doc size does not match dimension");
  }
  for (const Amplitude& a : m_) {
    if (!amplitude_is_finite(a)) {
      throw Error("LocalUnitary: non-finite entry");
    }
  }
  validate();
}

LocalUnitary LocalUnitary::identity(std::size_t dim) {
  std::vector<Amplitude> m(dim * dim, Amplitude(0.0, 0.0));
  for (std::size_t i = 0; i < dim; ++i) {
    m[i * dim + i] = Amplitude(1.0, 0.0);
  }
  return LocalUnitary(dim, std::move(m));
}

bool LocalUnitary::fixes_first_basis_vector() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    const Amplitude want = i == 0 ? Amplitude(1.0, 0.0) : Amplitude(0.0, 0.0);
    if (m_[i * dim_] != want) {
      return false;
    }
  }
  return true;
}

double LocalUnitary::unitarity_defect() const {
  double worst = 0.0;
  auto column_pair = [&](std::size_t a, std::size_t b) {
    // (U'U)_{ab} = <col_a, col_b>.
    Amplitude acc(0.0, 0.0);
    for (std::size_t k = 0; k < dim_; ++k) {
      acc += std::conj(m_[k * dim_ + a]) * m_[k * dim_ + b];
    }
    if (a == b) {
      acc -= Amplitude(1.0, 0.0);
    }
    return std::abs(acc);
  };

  if (dim_ <= kFullCheckDim) {
    for (std::size_t a = 0; a < dim_; ++a) {
      for (std::size_t b = a; b < dim_; ++b) {
        worst = std::max(worst, column_pair(a, b));
      }
    }
    return worst;
  }

  // Sampled check for large matrices: every column norm, then random column
  // pairs and random round trips through U then U'.
  for (std::size_t a = 0; a < dim_; ++a) {
    worst = std::max(worst, column_pair(a, a));
  }
  std::mt19937_64 rng(0x5eedu);
  std::uniform_int_distribution<std::size_t> pick(0, dim_ - 1);
  for (int trial = 0; trial < 256; ++trial) {
    std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (a != b) {
      worst = std::max(worst, column_pair(a, b));
    }
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Amplitude> x(dim_), ux(dim_), back(dim_);
  const LocalUnitary adj = adjoint();
  const auto& ops = kernels::active_ops();
  for (int trial = 0; trial < 4; ++trial) {
    double nrm = 0.0;
    for (auto& a : x) {
      a = Amplitude(gauss(rng), gauss(rng));
      nrm += abs2(a);
    }
    nrm = std::sqrt(nrm);
    for (auto& a : x) {
      a /= nrm;
    }
    ops.gemv(raw(), dim_, reinterpret_cast<const double*>(x.data()),
             reinterpret_cast<double*>(ux.data()));
    ops.gemv(adj.raw(), dim_, reinterpret_cast<const double*>(ux.data()),
             reinterpret_cast<double*>(back.data()));
    for (std::size_t i = 0; i < dim_; ++i) {
      worst = std::max(worst, std::abs(back[i] - x[i]));
    }
  }
  return worst;
}

LocalUnitary LocalUnitary::compose_after(const LocalUnitary& rhs) const {
  if (dim_ != rhs.dim_) {
    throw Error("LocalUnitary: dimension mismatch in composition");
  }
  std::vector<Amplitude> out(dim_ * dim_, Amplitude(0.0, 0.0));
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Amplitude lhs_ik = m_[i * dim_ + k];
      if (lhs_ik == Amplitude(0.0, 0.0)) {
        continue;
      }
      for (std::size_t j = 0; j < dim_; ++j) {
        out[i * dim_ + j] += lhs_ik * rhs.m_[k * dim_ + j];
      }
    }
  }
  return LocalUnitary(dim_, std::move(out), rhs.basis_doc_);
}

LocalUnitary LocalUnitary::adjoint() const {
  std::vector<Amplitude> out(dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      out[j * dim_ + i] = std::conj(m_[i * dim_ + j]);
    }
  }
  // Bypassing validation is unnecessary: the adjoint of a unitary is unitary.
  return LocalUnitary(dim_, std::move(out), basis_doc_);
}

bool LocalUnitary::same_entries(const LocalUnitary& other, double tol) const {
  if (dim_ != other.dim_) {
    return false;
  }
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (std::abs(m_[i] - other.m_[i]) > tol) {
      return false;
    }
  }
  return true;
}

void LocalUnitary::validate() const {
  const double defect = unitarity_defect();
  if (!(defect < kUnitarityTol)) {
    throw Error("LocalUnitary: matrix is not unitary (defect " +
                std::to_string(defect) + ")");
  }
}

}  // namespace qlgasim
