// Copyright 2026 The pauliprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "pauliprop/pauli_word.hpp"

namespace pauliprop {

inline constexpr double kDefaultPruneEps = 1e-15;

/// Sparse real-coefficient map PauliWord -> coefficient.
///
/// Entries live in flat arrays (packed keys, coefficients) indexed by an
/// open-addressing hash table, so the propagation hot loop never allocates
/// per term. Iteration order is insertion order, which keeps every
/// downstream result deterministic.
class PauliSum {
 public:
  explicit PauliSum(std::size_t num_qubits = 0, double prune_eps = kDefaultPruneEps);

  /// Convenience: PauliSum::from_terms({{"XI", 0.5}, {"ZZ", -1.0}}).
  static PauliSum from_terms(std::initializer_list<std::pair<std::string_view, double>> terms,
                             double prune_eps = kDefaultPruneEps);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_blocks() const { return num_blocks_; }
  std::size_t size() const { return coeffs_.size(); }
  bool empty() const { return coeffs_.empty(); }
  double prune_eps() const { return prune_eps_; }
  void set_prune_eps(double eps) { prune_eps_ = eps; }

  /// Adds `coeff` to the entry for `word`; removes it if the result falls to
  /// |c| <= prune_eps.
  void accumulate(const PauliWord& word, double coeff);

  /// Hot-path aggregation without pruning. `key` is a packed word (2*W blocks).
  void add(const std::uint64_t* key, double coeff);

  double coefficient(const PauliWord& word) const;
  bool contains(const PauliWord& word) const;

  // Entry access by position in insertion order.
  std::span<const std::uint64_t> key(std::size_t i) const {
    return {keys_.data() + i * stride(), stride()};
  }
  double coeff(std::size_t i) const { return coeffs_[i]; }
  PauliWord word(std::size_t i) const { return PauliWord(num_qubits_, key(i)); }
  std::span<const double> coefficients() const { return coeffs_; }

  void scale(double factor);
  /// Drops entries with |c| <= eps; returns the squared mass removed.
  double prune(double eps);
  /// Keeps only the entries whose positions are listed (ascending order).
  void retain(std::span<const std::size_t> positions);
  void reserve(std::size_t capacity);
  void clear();

  /// Sum of squared coefficients.
  double squared_norm() const;

  /// Terms sorted by word (lexicographic on (x, z)).
  std::vector<std::pair<PauliWord, double>> sorted_terms() const;

 private:
  std::size_t stride() const { return 2 * num_blocks_; }
  // Returns slot index holding `key`, or the empty slot where it would go.
  std::size_t probe(const std::uint64_t* key) const;
  void rehash(std::size_t capacity);
  void erase_at(std::size_t position);

  std::size_t num_qubits_;
  std::size_t num_blocks_;
  double prune_eps_;
  std::vector<std::uint64_t> keys_;
  std::vector<double> coeffs_;
  // position + 1, or 0 for an empty slot; size is a power of two.
  std::vector<std::uint32_t> slots_;
};

/// sqrt(sum c^2): the normalized Hilbert-Schmidt norm ||.||_{Pauli,2}.
double pauli_norm2(const PauliSum& sum);

/// Copy of `sum` with `coeff` added to `word` (pruned at the sum's prune_eps).
PauliSum accumulate(PauliSum sum, const PauliWord& word, double coeff);

}  // namespace pauliprop
