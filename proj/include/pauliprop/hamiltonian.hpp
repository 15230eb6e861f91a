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
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pauliprop/pauli_word.hpp"

namespace pauliprop {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct HamiltonianTerm {
  double weight;
  PauliWord word;
};

enum class Boundary { Open, Periodic };

Boundary parse_boundary(std::string_view name);
std::string to_string(Boundary boundary);

/// Ordered list of weighted Pauli words. The order defines the Trotter
/// product: within each step, terms act on the observable first-to-last.
class Hamiltonian {
 public:
  explicit Hamiltonian(std::size_t num_qubits = 0) : num_qubits_(num_qubits) {}

  /// Appends a term. Zero weights are dropped; identity words and length
  /// mismatches are rejected.
  void add_term(double weight, PauliWord word);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t size() const { return terms_.size(); }
  const std::vector<HamiltonianTerm>& terms() const { return terms_; }
  const HamiltonianTerm& operator[](std::size_t i) const { return terms_[i]; }

  /// Human-readable description of the term order, echoed into output headers.
  const std::string& order_label() const { return order_label_; }
  void set_order_label(std::string label) { order_label_ = std::move(label); }

 private:
  std::size_t num_qubits_;
  std::vector<HamiltonianTerm> terms_;
  std::string order_label_ = "file order";
};

/// XXZ-type chain sum_i Jx X_i X_{i+1} + Jy Y_i Y_{i+1} + Jz Z_i Z_{i+1}, emitted
/// bond-major (bond 0..L-2, then the wrap bond if periodic) with XX, YY, ZZ
/// inside each bond.
Hamiltonian build_xxz_chain(std::size_t length, double jx, double jy, double jz,
                            Boundary boundary = Boundary::Open);

/// Parses "<weight> <pauli-string>" lines; '#' starts a comment line.
Hamiltonian parse_hamiltonian(std::string_view text);

/// Inverse of parse_hamiltonian; weights printed with 17 significant digits.
std::string format_hamiltonian(const Hamiltonian& hamiltonian);

}  // namespace pauliprop
