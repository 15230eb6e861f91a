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
#include <stdexcept>
#include <vector>

#include "pauliprop/hamiltonian.hpp"
#include "pauliprop/pauli_sum.hpp"
#include "pauliprop/product_state.hpp"

namespace pauliprop {

/// Raised when a dense computation is requested beyond its qubit cap.
class OracleCapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDenseStateCap = 12;
inline constexpr std::size_t kDecompositionCap = 8;
inline constexpr std::size_t kScramblingCap = 10;

/// tr(O rho(t)) with rho evolved by N dense first-order Trotter steps of
/// tau = t/N. Gate order matches the propagation engine: the step unitary is
/// G_1 G_2 ... G_{N_H}, G_i = cos(w_i tau) I - i sin(w_i tau) P_i.
double dense_trotter_expectation(const Hamiltonian& hamiltonian, const ProductState& state,
                                 const PauliSum& observable, double t, std::size_t steps);

/// Values after 1..steps Trotter steps of size tau.
std::vector<double> dense_trotter_trajectory(const Hamiltonian& hamiltonian, const ProductState& state,
                                             const PauliSum& observable, double tau, std::size_t steps);

/// Full Pauli decomposition c_P = tr(P U^dag O U) / 2^n of the Trotter-evolved
/// observable. Coefficients below 1e-12 in magnitude are dropped.
PauliSum dense_heisenberg_coefficients(const Hamiltonian& hamiltonian, const PauliSum& observable, double t,
                                       std::size_t steps);

struct MonteCarloEstimate {
  double mean_sq_error = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// E |<O_hat>_rho - <O>_rho|^2 over rho = V|0><0|V^dag with V a product of
/// independent Haar single-qubit unitaries.
MonteCarloEstimate local_scrambling_mc(const PauliSum& observable, const PauliSum& approximation,
                                       std::size_t samples, std::uint64_t seed);

}  // namespace pauliprop
