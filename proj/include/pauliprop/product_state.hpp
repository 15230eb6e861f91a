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
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pauliprop {

/// Single-site Bloch vector (<X>, <Y>, <Z>).
struct Bloch {
  double x = 0.0;
  double y = 0.0;
  double z = 1.0;
};

/// Product state rho = (x) rho_j, each site given by its Bloch vector.
class ProductState {
 public:
  ProductState() = default;
  /// Throws std::invalid_argument if any Bloch vector has norm > 1.
  explicit ProductState(std::vector<Bloch> sites);

  /// |up down up down ...>, spin up (<Z> = +1) on even sites.
  static ProductState neel(std::size_t num_qubits);
  static ProductState all_up(std::size_t num_qubits);
  /// Accepts "neel", "up", "down", "plus", or one character per site from
  /// {U, D, +, -, R, L} (Z, X and Y eigenstates).
  static ProductState parse(std::string_view spec, std::size_t num_qubits);

  std::size_t num_qubits() const { return sites_.size(); }
  const Bloch& operator[](std::size_t site) const { return sites_[site]; }
  std::span<const Bloch> sites() const { return sites_; }

  /// True when every site is a pure state (|Bloch| = 1 within tol).
  bool is_pure(double tol = 1e-12) const;

 private:
  std::vector<Bloch> sites_;
};

}  // namespace pauliprop
