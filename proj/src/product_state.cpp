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

#include "pauliprop/product_state.hpp"

#include <cmath>
#include <stdexcept>

namespace pauliprop {

ProductState::ProductState(std::vector<Bloch> sites) : sites_(std::move(sites)) {
  for (std::size_t j = 0; j < sites_.size(); ++j) {
    const Bloch& b = sites_[j];
    const double norm = std::sqrt(b.x * b.x + b.y * b.y + b.z * b.z);
    if (!(norm <= 1.0 + 1e-12)) {
      throw std::invalid_argument("ProductState: Bloch vector at site " + std::to_string(j) +
                                  " has norm " + std::to_string(norm) + " > 1");
    }
  }
}

ProductState ProductState::neel(std::size_t num_qubits) {
  std::vector<Bloch> sites(num_qubits);
  for (std::size_t j = 0; j < num_qubits; ++j) sites[j].z = (j % 2 == 0) ? 1.0 : -1.0;
  return ProductState(std::move(sites));
}

ProductState ProductState::all_up(std::size_t num_qubits) {
  return ProductState(std::vector<Bloch>(num_qubits));
}

ProductState ProductState::parse(std::string_view spec, std::size_t num_qubits) {
  if (spec == "neel") return neel(num_qubits);
  if (spec == "up") return all_up(num_qubits);
  if (spec == "down") return ProductState(std::vector<Bloch>(num_qubits, Bloch{0, 0, -1}));
  if (spec == "plus") return ProductState(std::vector<Bloch>(num_qubits, Bloch{1, 0, 0}));
  if (spec.size() != num_qubits) {
    throw std::invalid_argument("state '" + std::string(spec) + "' must name a preset or have one character per site");
  }
  std::vector<Bloch> sites;
  sites.reserve(num_qubits);
  for (char c : spec) {
    switch (c) {
      case 'U': sites.push_back({0, 0, 1}); break;
      case 'D': sites.push_back({0, 0, -1}); break;
      case '+': sites.push_back({1, 0, 0}); break;
      case '-': sites.push_back({-1, 0, 0}); break;
      case 'R': sites.push_back({0, 1, 0}); break;
      case 'L': sites.push_back({0, -1, 0}); break;
      default: throw std::invalid_argument(std::string("unknown site state '") + c + "'");
    }
  }
  return ProductState(std::move(sites));
}

bool ProductState::is_pure(double tol) const {
  for (const Bloch& b : sites_) {
    if (std::abs(b.x * b.x + b.y * b.y + b.z * b.z - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace pauliprop
