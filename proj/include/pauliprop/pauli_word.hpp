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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pauliprop {

/// Thrown when two Pauli objects of different qubit counts are combined.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Multiplicative phase i^k, with k reduced mod 4.
struct PhaseExponent {
  std::uint8_t k = 0;

  constexpr PhaseExponent() = default;
  constexpr explicit PhaseExponent(int value) : k(static_cast<std::uint8_t>(((value % 4) + 4) % 4)) {}

  constexpr PhaseExponent operator+(PhaseExponent other) const { return PhaseExponent(k + other.k); }
  constexpr bool is_real() const { return (k & 1) == 0; }
  constexpr bool operator==(const PhaseExponent&) const = default;
};

namespace bits {

inline constexpr std::size_t kBlockBits = 64;

constexpr std::size_t blocks_for(std::size_t num_qubits) {
  return (num_qubits + kBlockBits - 1) / kBlockBits;
}

// Packed-word kernels. A packed word is 2*W blocks: W blocks of x followed by
// W blocks of z, site j at bit (j % 64) of block (j / 64).

bool anticommutes(const std::uint64_t* a, const std::uint64_t* b, std::size_t num_blocks);

// Writes a*b into out (2*W blocks) and returns the phase exponent k with
// a*b = i^k P(out).
PhaseExponent multiply_into(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out,
                            std::size_t num_blocks);

std::size_t weight(const std::uint64_t* a, std::size_t num_blocks);

// Lexicographic order on (x_0..x_{n-1}, z_0..z_{n-1}); negative if a < b.
int lex_compare(const std::uint64_t* a, const std::uint64_t* b, std::size_t num_blocks);

std::uint64_t hash(const std::uint64_t* a, std::size_t num_blocks);

}  // namespace bits

/// An n-qubit Hermitian Pauli operator in binary symplectic form.
///
/// The pair (x, z) denotes P(x,z) = prod_j i^{x_j z_j} X_j^{x_j} Z_j^{z_j}, so
/// (1,1) at a site is Y and every word squares to the identity. Bits are packed
/// little-endian by site index. The textual form has one character per site
/// from {I,X,Y,Z}, site 0 leftmost.
class PauliWord {
 public:
  PauliWord() = default;
  /// Identity on `num_qubits` sites.
  explicit PauliWord(std::size_t num_qubits);
  /// Adopts packed storage (2*W blocks); bits beyond `num_qubits` must be clear.
  PauliWord(std::size_t num_qubits, std::span<const std::uint64_t> packed);

  static PauliWord from_string(std::string_view text);
  /// Single-site operator `pauli` in {I,X,Y,Z} at `site`.
  static PauliWord single(std::size_t num_qubits, std::size_t site, char pauli);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t num_blocks() const { return bits::blocks_for(num_qubits_); }

  bool x(std::size_t site) const;
  bool z(std::size_t site) const;
  char at(std::size_t site) const;
  void set(std::size_t site, bool x_bit, bool z_bit);
  void set(std::size_t site, char pauli);

  bool is_identity() const;
  std::span<const std::uint64_t> packed() const { return data_; }
  std::string to_string() const;

  bool operator==(const PauliWord& other) const = default;
  std::strong_ordering operator<=>(const PauliWord& other) const;

 private:
  std::size_t num_qubits_ = 0;
  std::vector<std::uint64_t> data_;
};

/// True iff p and q commute (even symplectic inner product).
bool commutes(const PauliWord& p, const PauliWord& q);

/// Returns (r, k) with p*q = i^k * r.
std::pair<PauliWord, PhaseExponent> multiply(const PauliWord& p, const PauliWord& q);

/// Number of non-identity sites.
std::size_t weight(const PauliWord& p);

struct PauliWordHash {
  std::size_t operator()(const PauliWord& p) const {
    return static_cast<std::size_t>(bits::hash(p.packed().data(), p.num_blocks()));
  }
};

}  // namespace pauliprop
