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

#include "pauliprop/pauli_word.hpp"

#include <bit>

namespace pauliprop {
namespace bits {

bool anticommutes(const std::uint64_t* a, const std::uint64_t* b, std::size_t num_blocks) {
  const std::uint64_t* ax = a;
  const std::uint64_t* az = a + num_blocks;
  const std::uint64_t* bx = b;
  const std::uint64_t* bz = b + num_blocks;
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < num_blocks; ++w) {
    acc ^= (ax[w] & bz[w]) ^ (az[w] & bx[w]);
  }
  return (std::popcount(acc) & 1) != 0;
}

PhaseExponent multiply_into(const std::uint64_t* a, const std::uint64_t* b, std::uint64_t* out,
                            std::size_t num_blocks) {
  // Per site: P(x1,z1) P(x2,z2) = i^{x1 z1 + x2 z2 + 2 z1 x2 - x3 z3} P(x3,z3).
  int k = 0;
  for (std::size_t w = 0; w < num_blocks; ++w) {
    const std::uint64_t x1 = a[w], z1 = a[num_blocks + w];
    const std::uint64_t x2 = b[w], z2 = b[num_blocks + w];
    const std::uint64_t x3 = x1 ^ x2, z3 = z1 ^ z2;
    out[w] = x3;
    out[num_blocks + w] = z3;
    k += std::popcount(x1 & z1) + std::popcount(x2 & z2) + 2 * std::popcount(z1 & x2) -
         std::popcount(x3 & z3);
  }
  return PhaseExponent(k);
}

std::size_t weight(const std::uint64_t* a, std::size_t num_blocks) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < num_blocks; ++w) {
    total += static_cast<std::size_t>(std::popcount(a[w] | a[num_blocks + w]));
  }
  return total;
}

int lex_compare(const std::uint64_t* a, const std::uint64_t* b, std::size_t num_blocks) {
  for (std::size_t w = 0; w < 2 * num_blocks; ++w) {
    const std::uint64_t diff = a[w] ^ b[w];
    if (diff != 0) {
      // Lowest differing bit is the earliest differing site.
      const std::uint64_t lowest = diff & (~diff + 1);
      return (a[w] & lowest) != 0 ? 1 : -1;
    }
  }
  return 0;
}

std::uint64_t hash(const std::uint64_t* a, std::size_t num_blocks) {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (std::size_t w = 0; w < 2 * num_blocks; ++w) {
    std::uint64_t v = a[w] + h + 0x9e3779b97f4a7c15ULL * (w + 1);
    v = (v ^ (v >> 30)) * 0xbf58476d1ce4e5b9ULL;
    v = (v ^ (v >> 27)) * 0x94d049bb133111ebULL;
    h = v ^ (v >> 31);
  }
  return h;
}

}  // namespace bits

PauliWord::PauliWord(std::size_t num_qubits)
    : num_qubits_(num_qubits), data_(2 * bits::blocks_for(num_qubits), 0) {}

PauliWord::PauliWord(std::size_t num_qubits, std::span<const std::uint64_t> packed)
    : num_qubits_(num_qubits), data_(packed.begin(), packed.end()) {
  if (data_.size() != 2 * bits::blocks_for(num_qubits)) {
    throw DimensionMismatch("PauliWord: packed storage has wrong block count");
  }
}

PauliWord PauliWord::from_string(std::string_view text) {
  PauliWord word(text.size());
  for (std::size_t j = 0; j < text.size(); ++j) {
    word.set(j, text[j]);
  }
  return word;
}

PauliWord PauliWord::single(std::size_t num_qubits, std::size_t site, char pauli) {
  PauliWord word(num_qubits);
  word.set(site, pauli);
  return word;
}

bool PauliWord::x(std::size_t site) const {
  return ((data_[site / 64] >> (site % 64)) & 1) != 0;
}

bool PauliWord::z(std::size_t site) const {
  return ((data_[num_blocks() + site / 64] >> (site % 64)) & 1) != 0;
}

char PauliWord::at(std::size_t site) const {
  static constexpr char kChars[4] = {'I', 'X', 'Z', 'Y'};
  return kChars[(x(site) ? 1 : 0) | (z(site) ? 2 : 0)];
}

void PauliWord::set(std::size_t site, bool x_bit, bool z_bit) {
  if (site >= num_qubits_) {
    throw std::out_of_range("PauliWord: site " + std::to_string(site) + " out of range");
  }
  const std::uint64_t mask = std::uint64_t{1} << (site % 64);
  std::uint64_t& xb = data_[site / 64];
  std::uint64_t& zb = data_[num_blocks() + site / 64];
  xb = x_bit ? (xb | mask) : (xb & ~mask);
  zb = z_bit ? (zb | mask) : (zb & ~mask);
}

void PauliWord::set(std::size_t site, char pauli) {
  switch (pauli) {
    case 'I': set(site, false, false); break;
    case 'X': set(site, true, false); break;
    case 'Y': set(site, true, true); break;
    case 'Z': set(site, false, true); break;
    default:
      throw std::invalid_argument(std::string("PauliWord: invalid Pauli character '") + pauli + "'");
  }
}

bool PauliWord::is_identity() const {
  for (std::uint64_t b : data_) {
    if (b != 0) return false;
  }
  return true;
}

std::string PauliWord::to_string() const {
  std::string out(num_qubits_, 'I');
  for (std::size_t j = 0; j < num_qubits_; ++j) out[j] = at(j);
  return out;
}

std::strong_ordering PauliWord::operator<=>(const PauliWord& other) const {
  if (num_qubits_ != other.num_qubits_) return num_qubits_ <=> other.num_qubits_;
  const int c = bits::lex_compare(data_.data(), other.data_.data(), num_blocks());
  return c <=> 0;
}

namespace {
void require_same_size(const PauliWord& p, const PauliWord& q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw DimensionMismatch("Pauli words of different lengths: " + std::to_string(p.num_qubits()) +
                            " vs " + std::to_string(q.num_qubits()));
  }
}
}  // namespace

bool commutes(const PauliWord& p, const PauliWord& q) {
  require_same_size(p, q);
  return !bits::anticommutes(p.packed().data(), q.packed().data(), p.num_blocks());
}

std::pair<PauliWord, PhaseExponent> multiply(const PauliWord& p, const PauliWord& q) {
  require_same_size(p, q);
  std::vector<std::uint64_t> out(p.packed().size());
  const PhaseExponent k = bits::multiply_into(p.packed().data(), q.packed().data(), out.data(), p.num_blocks());
  return {PauliWord(p.num_qubits(), out), k};
}

std::size_t weight(const PauliWord& p) {
  return bits::weight(p.packed().data(), p.num_blocks());
}

}  // namespace pauliprop
