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

#include "pauliprop/hamiltonian.hpp"

#include <cstdio>
#include <sstream>

namespace pauliprop {

Boundary parse_boundary(std::string_view name) {
  if (name == "open" || name == "obc") return Boundary::Open;
  if (name == "periodic" || name == "pbc") return Boundary::Periodic;
  throw std::invalid_argument("unknown boundary '" + std::string(name) + "'");
}

std::string to_string(Boundary boundary) {
  return boundary == Boundary::Open ? "open" : "periodic";
}

void Hamiltonian::add_term(double weight, PauliWord word) {
  if (word.num_qubits() != num_qubits_) {
    throw DimensionMismatch("Hamiltonian term has " + std::to_string(word.num_qubits()) +
                            " qubits, expected " + std::to_string(num_qubits_));
  }
  if (word.is_identity()) throw std::invalid_argument("Hamiltonian term is the identity");
  if (weight == 0.0) return;
  terms_.push_back({weight, std::move(word)});
}

Hamiltonian build_xxz_chain(std::size_t length, double jx, double jy, double jz, Boundary boundary) {
  if (length < 2) throw std::invalid_argument("build_xxz_chain: L must be >= 2");
  if (boundary == Boundary::Periodic && length < 3) {
    throw std::invalid_argument("build_xxz_chain: periodic chain needs L >= 3");
  }
  Hamiltonian h(length);
  auto bond = [&](std::size_t a, std::size_t b) {
    const std::pair<char, double> couplings[] = {{'X', jx}, {'Y', jy}, {'Z', jz}};
    for (const auto& [pauli, j] : couplings) {
      PauliWord w(length);
      w.set(a, pauli);
      w.set(b, pauli);
      h.add_term(j, std::move(w));
    }
  };
  for (std::size_t i = 0; i + 1 < length; ++i) bond(i, i + 1);
  if (boundary == Boundary::Periodic) bond(length - 1, 0);
  h.set_order_label("bond-major (bonds 0..L-2" +
                    std::string(boundary == Boundary::Periodic ? ", then wrap" : "") +
                    "), XX,YY,ZZ within bond; terms act on the observable in list order");
  return h;
}

Hamiltonian parse_hamiltonian(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::pair<double, std::string>> rows;
  std::vector<std::size_t> row_lines;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double weight = 0.0;
    std::string word;
    std::string extra;
    if (!(fields >> weight) || !(fields >> word) || (fields >> extra)) {
      throw ParseError(line_no, "expected '<weight> <pauli-string>'");
    }
    if (weight == 0.0) throw ParseError(line_no, "zero weight");
    if (!rows.empty() && word.size() != rows.front().second.size()) {
      throw ParseError(line_no, "Pauli string length " + std::to_string(word.size()) +
                                    " differs from " + std::to_string(rows.front().second.size()));
    }
    rows.emplace_back(weight, word);
    row_lines.push_back(line_no);
  }
  if (rows.empty()) throw ParseError(line_no, "no Hamiltonian terms");

  Hamiltonian h(rows.front().second.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    PauliWord word;
    try {
      word = PauliWord::from_string(rows[r].second);
    } catch (const std::invalid_argument& e) {
      throw ParseError(row_lines[r], e.what());
    }
    if (word.is_identity()) throw ParseError(row_lines[r], "identity word");
    h.add_term(rows[r].first, std::move(word));
  }
  return h;
}

std::string format_hamiltonian(const Hamiltonian& hamiltonian) {
  std::string out;
  char buf[64];
  for (const auto& term : hamiltonian.terms()) {
    std::snprintf(buf, sizeof(buf), "%.17g ", term.weight);
    out += buf;
    out += term.word.to_string();
    out += '\n';
  }
  return out;
}

}  // namespace pauliprop
