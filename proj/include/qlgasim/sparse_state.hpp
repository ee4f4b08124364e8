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

#ifndef QLGASIM_SPARSE_STATE_HPP
#define QLGASIM_SPARSE_STATE_HPP

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qlgasim/amplitude.hpp"
#include "qlgasim/errors.hpp"
#include "qlgasim/kernels.hpp"
#include "qlgasim/local_unitary.hpp"

namespace qlgasim {

/// Sparse vector in the Hilbert space spanned by orthonormal basis labels of
/// type Label.  Absent labels have amplitude zero; basis labels never carry
/// non-finite amplitudes.
///
/// Label must be equality comparable, std::hash-able, and totally ordered by
/// operator< (used only for canonical serialization order).
template <typename Label>
class SparseState {
 public:
  using Map = std::unordered_map<Label, Amplitude>;

  SparseState() = default;

  /// prune_epsilon is carried along by the unitary operations and applied by
  /// evolution drivers between steps; it is not applied implicitly.
  explicit SparseState(double prune_epsilon) : prune_epsilon_(prune_epsilon) {
    if (prune_epsilon < 0.0) {
      throw Error("SparseState: prune_epsilon must be non-negative");
    }
  }

  static SparseState basis(const Label& label) {
    SparseState s;
    s.add(label, Amplitude(1.0, 0.0));
    return s;
  }

  double prune_epsilon() const { return prune_epsilon_; }

  /// Accumulates onto the label's amplitude (inserting if absent).
  void add(const Label& label, const Amplitude& amp) {
    if (!amplitude_is_finite(amp)) {
      throw Error("SparseState: non-finite amplitude");
    }
    entries_[label] += amp;
  }

  Amplitude amplitude(const Label& label) const {
    auto it = entries_.find(label);
    return it == entries_.end() ? Amplitude(0.0, 0.0) : it->second;
  }

  bool contains(const Label& label) const { return entries_.count(label) != 0; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const Map& entries() const { return entries_; }

  std::vector<std::pair<Label, Amplitude>> sorted_entries() const {
    std::vector<std::pair<Label, Amplitude>> out(entries_.begin(), entries_.end());
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  double norm2() const {
    double total = 0.0;
    for (const auto& [label, amp] : entries_) {
      total += abs2(amp);
    }
    return total;
  }

  void normalize() {
    const double n2 = norm2();
    if (n2 == 0.0) {
      throw Error("SparseState: cannot normalize the zero state");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& [label, amp] : entries_) {
      amp *= inv;
    }
  }

  /// Removes entries with |amplitude| <= epsilon.  epsilon = 0 removes exact
  /// zeros only, so support tracking stays exact.
  void prune_in_place(double epsilon) {
    if (epsilon < 0.0) {
      throw Error("SparseState: prune epsilon must be non-negative");
    }
    // Compare squared magnitudes when epsilon > 0; epsilon = 0 must test the
    // components directly, because abs2 of a subnormal amplitude can
    // underflow to zero even though the amplitude itself is not zero.
    const double e2 = epsilon * epsilon;
    for (auto it = entries_.begin(); it != entries_.end();) {
      const bool drop =
          (epsilon == 0.0)
              ? (it->second.real() == 0.0 && it->second.imag() == 0.0)
              : (abs2(it->second) <= e2);
      if (drop) {
        it = entries_.erase(it);
      } else {
        ++it;
      }
    }
  }

 private:
  Map entries_;
  double prune_epsilon_ = 0.0;
};

template <typename Label>
double norm2(const SparseState<Label>& s) {
  return s.norm2();
}

/// <a|b> with the first argument conjugated.
template <typename Label>
Amplitude inner_product(const SparseState<Label>& a, const SparseState<Label>& b) {
  const bool a_smaller = a.support_size() <= b.support_size();
  const auto& lead = a_smaller ? a : b;
  const auto& other = a_smaller ? b : a;
  Amplitude acc(0.0, 0.0);
  for (const auto& [label, amp] : lead.entries()) {
    const Amplitude mate = other.amplitude(label);
    if (a_smaller) {
      acc += std::conj(amp) * mate;
    } else {
      acc += std::conj(mate) * amp;
    }
  }
  return acc;
}

template <typename Label>
SparseState<Label> prune(const SparseState<Label>& s, double epsilon) {
  SparseState<Label> out = s;
  out.prune_in_place(epsilon);
  return out;
}

/// Relabels every basis vector through `map`.  `map` must be injective on the
/// support; a collision raises LabelCollisionError.  Norm is preserved
/// exactly (amplitudes move, no arithmetic happens).
template <typename Label, typename MapFn>
SparseState<Label> permute(const SparseState<Label>& s, MapFn&& map) {
  SparseState<Label> out(s.prune_epsilon());
  for (const auto& [label, amp] : s.entries()) {
    const Label image = map(label);
    if (out.contains(image)) {
      throw LabelCollisionError("permute: two labels map to the same image");
    }
    out.add(image, amp);
  }
  return out;
}

/// Classifier requirements for scatter():
///   using Key = <hashable, equality-comparable class id>;
///   std::pair<Key, std::size_t> classify(const Label&) const;
///   Label label_of(const Key&, std::size_t index) const;
///   const LocalUnitary& unitary(const Key&) const;
///
/// classify() must partition the label space into classes; within one class it
/// must biject the class labels onto 0..dim-1 (dim = unitary(key).dim()), with
/// label_of as its inverse.  The unitary reference must stay valid for the
/// call and identical keys must return the same object (blocks sharing one
/// matrix are batched through the kernels).
template <typename Label, typename Classifier>
SparseState<Label> scatter(const SparseState<Label>& s, const Classifier& cls) {
  using Key = typename Classifier::Key;
  struct ClassData {
    const Key* key;
    std::vector<std::pair<std::size_t, Amplitude>> filled;
  };
  std::unordered_map<Key, std::size_t> class_index;
  std::vector<ClassData> classes;
  std::vector<const LocalUnitary*> class_unitary;

  for (const auto& [label, amp] : s.entries()) {
    auto [key, index] = cls.classify(label);
    auto [it, inserted] = class_index.try_emplace(std::move(key), classes.size());
    if (inserted) {
      classes.push_back(ClassData{&it->first, {}});
      class_unitary.push_back(&cls.unitary(it->first));
    }
    const std::size_t dim = class_unitary[it->second]->dim();
    if (index >= dim) {
      throw ClassifierError("scatter: local index out of range");
    }
    classes[it->second].filled.emplace_back(index, amp);
  }

  // Group classes that share a matrix so one kernel call covers them all.
  std::unordered_map<const LocalUnitary*, std::vector<std::size_t>> by_matrix;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    by_matrix[class_unitary[c]].push_back(c);
  }

  SparseState<Label> out(s.prune_epsilon());
  std::vector<Amplitude> in_buf;
  std::vector<Amplitude> out_buf;
  std::vector<char> occupied;
  for (const auto& [matrix, members] : by_matrix) {
    const std::size_t dim = matrix->dim();
    in_buf.assign(members.size() * dim, Amplitude(0.0, 0.0));
    out_buf.assign(members.size() * dim, Amplitude(0.0, 0.0));
    for (std::size_t slot = 0; slot < members.size(); ++slot) {
      const ClassData& cd = classes[members[slot]];
      occupied.assign(dim, 0);
      for (const auto& [index, amp] : cd.filled) {
        if (occupied[index]) {
          throw ClassifierError("scatter: duplicate local index within a class");
        }
        occupied[index] = 1;
        in_buf[slot * dim + index] = amp;
      }
    }
    kernels::active_ops().apply_block_batch(
        matrix->raw(), dim, reinterpret_cast<const double*>(in_buf.data()),
        reinterpret_cast<double*>(out_buf.data()), members.size());
    for (std::size_t slot = 0; slot < members.size(); ++slot) {
      const ClassData& cd = classes[members[slot]];
      for (std::size_t w = 0; w < dim; ++w) {
        const Amplitude& amp = out_buf[slot * dim + w];
        if (amp != Amplitude(0.0, 0.0)) {
          out.add(cls.label_of(*cd.key, w), amp);
        }
      }
    }
  }
  return out;
}

}  // namespace qlgasim

#endif
