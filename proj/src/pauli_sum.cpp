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

#include "pauliprop/pauli_sum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>

namespace pauliprop {

PauliSum::PauliSum(std::size_t num_qubits, double prune_eps)
    : num_qubits_(num_qubits),
      num_blocks_(bits::blocks_for(num_qubits)),
      prune_eps_(prune_eps),
      slots_(16, 0) {}

PauliSum PauliSum::from_terms(std::initializer_list<std::pair<std::string_view, double>> terms,
                              double prune_eps) {
  if (terms.size() == 0) return PauliSum(0, prune_eps);
  PauliSum sum(terms.begin()->first.size(), prune_eps);
  for (const auto& [text, c] : terms) sum.accumulate(PauliWord::from_string(text), c);
  return sum;
}

std::size_t PauliSum::probe(const std::uint64_t* key) const {
  const std::size_t mask = slots_.size() - 1;
  const std::size_t bytes = stride() * sizeof(std::uint64_t);
  std::size_t i = static_cast<std::size_t>(bits::hash(key, num_blocks_)) & mask;
  while (true) {
    const std::uint32_t s = slots_[i];
    if (s == 0) return i;
    if (std::memcmp(keys_.data() + (s - 1) * stride(), key, bytes) == 0) return i;
    i = (i + 1) & mask;
  }
}

void PauliSum::rehash(std::size_t capacity) {
  std::size_t want = std::bit_ceil(std::max<std::size_t>(16, 2 * capacity + 2));
  slots_.assign(want, 0);
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    slots_[probe(keys_.data() + p * stride())] = static_cast<std::uint32_t>(p + 1);
  }
}

void PauliSum::reserve(std::size_t capacity) {
  keys_.reserve(capacity * stride());
  coeffs_.reserve(capacity);
  if (2 * capacity + 2 > slots_.size()) rehash(capacity);
}

void PauliSum::clear() {
  keys_.clear();
  coeffs_.clear();
  std::fill(slots_.begin(), slots_.end(), 0);
}

void PauliSum::add(const std::uint64_t* key, double coeff) {
  if (2 * (coeffs_.size() + 1) > slots_.size()) rehash(2 * coeffs_.size() + 2);
  const std::size_t slot = probe(key);
  if (slots_[slot] != 0) {
    coeffs_[slots_[slot] - 1] += coeff;
    return;
  }
  keys_.insert(keys_.end(), key, key + stride());
  coeffs_.push_back(coeff);
  slots_[slot] = static_cast<std::uint32_t>(coeffs_.size());
}

void PauliSum::accumulate(const PauliWord& word, double coeff) {
  if (word.num_qubits() != num_qubits_) {
    throw DimensionMismatch("PauliSum::accumulate: word has " + std::to_string(word.num_qubits()) +
                            " qubits, sum has " + std::to_string(num_qubits_));
  }
  add(word.packed().data(), coeff);
  const std::size_t slot = probe(word.packed().data());
  const std::size_t position = slots_[slot] - 1;
  if (std::abs(coeffs_[position]) <= prune_eps_) erase_at(position);
}

void PauliSum::erase_at(std::size_t position) {
  const std::size_t mask = slots_.size() - 1;
  std::size_t hole = probe(keys_.data() + position * stride());
  // Backward-shift deletion keeps linear probing chains intact.
  std::size_t j = hole;
  while (true) {
    j = (j + 1) & mask;
    const std::uint32_t s = slots_[j];
    if (s == 0) break;
    const std::size_t home =
        static_cast<std::size_t>(bits::hash(keys_.data() + (s - 1) * stride(), num_blocks_)) & mask;
    const bool movable = (j > hole) ? (home <= hole || home > j) : (home <= hole && home > j);
    if (movable) {
      slots_[hole] = s;
      hole = j;
    }
  }
  slots_[hole] = 0;

  const std::size_t last = coeffs_.size() - 1;
  if (position != last) {
    const std::size_t last_slot = probe(keys_.data() + last * stride());
    std::copy_n(keys_.data() + last * stride(), stride(), keys_.data() + position * stride());
    coeffs_[position] = coeffs_[last];
    slots_[last_slot] = static_cast<std::uint32_t>(position + 1);
  }
  keys_.resize(last * stride());
  coeffs_.pop_back();
}

double PauliSum::coefficient(const PauliWord& word) const {
  if (word.num_qubits() != num_qubits_) return 0.0;
  const std::uint32_t s = slots_[probe(word.packed().data())];
  return s == 0 ? 0.0 : coeffs_[s - 1];
}

bool PauliSum::contains(const PauliWord& word) const {
  return word.num_qubits() == num_qubits_ && slots_[probe(word.packed().data())] != 0;
}

void PauliSum::scale(double factor) {
  for (double& c : coeffs_) c *= factor;
}

double PauliSum::prune(double eps) {
  std::vector<std::size_t> keep;
  keep.reserve(coeffs_.size());
  double removed = 0.0;
  for (std::size_t p = 0; p < coeffs_.size(); ++p) {
    if (std::abs(coeffs_[p]) > eps) {
      keep.push_back(p);
    } else {
      removed += coeffs_[p] * coeffs_[p];
    }
  }
  if (keep.size() != coeffs_.size()) retain(keep);
  return removed;
}

void PauliSum::retain(std::span<const std::size_t> positions) {
  std::vector<std::uint64_t> keys;
  std::vector<double> coeffs;
  keys.reserve(positions.size() * stride());
  coeffs.reserve(positions.size());
  for (std::size_t p : positions) {
    keys.insert(keys.end(), keys_.begin() + p * stride(), keys_.begin() + (p + 1) * stride());
    coeffs.push_back(coeffs_[p]);
  }
  keys_ = std::move(keys);
  coeffs_ = std::move(coeffs);
  rehash(coeffs_.size());
}

double PauliSum::squared_norm() const {
  double total = 0.0;
  for (double c : coeffs_) total += c * c;
  return total;
}

std::vector<std::pair<PauliWord, double>> PauliSum::sorted_terms() const {
  std::vector<std::size_t> order(size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return bits::lex_compare(key(a).data(), key(b).data(), num_blocks_) < 0;
  });
  std::vector<std::pair<PauliWord, double>> out;
  out.reserve(order.size());
  for (std::size_t i : order) out.emplace_back(word(i), coeffs_[i]);
  return out;
}

double pauli_norm2(const PauliSum& sum) { return std::sqrt(sum.squared_norm()); }

PauliSum accumulate(PauliSum sum, const PauliWord& word, double coeff) {
  sum.accumulate(word, coeff);
  return sum;
}

}  // namespace pauliprop
