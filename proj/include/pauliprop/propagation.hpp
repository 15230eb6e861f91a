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
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pauliprop/hamiltonian.hpp"
#include "pauliprop/pauli_sum.hpp"
#include "pauliprop/product_state.hpp"
#include "pauliprop/truncation.hpp"

namespace pauliprop {

/// Engine abort: the operator collapsed or its norm underflowed.
class PropagationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  double total_time = 0.0;  // t
  std::size_t steps = 1;    // N; tau = t / N
  TruncationPolicy policy = TruncationPolicy::unbounded();
  std::size_t record_every = 1;
  bool rescale_every_step = false;
  bool record_ose = false;

  double tau() const { return total_time / static_cast<double>(steps); }
  void validate() const;
};

struct TrajectoryRecord {
  std::size_t step = 0;  // Trotter steps applied so far
  double time = 0.0;     // step * tau
  double value = 0.0;    // expectation of the rescaled operator; NaN without a state
  std::size_t terms = 0;
  double discarded_mass = 0.0;  // cumulative squared mass removed by truncation
  double norm_ratio = 1.0;      // ||O_s|| / ||O|| before rescaling
  std::optional<double> ose_half;
  std::optional<double> ose_shannon;
};

struct PropagationResult {
  PauliSum evolved;  // rescaled to the input norm
  std::vector<TrajectoryRecord> trajectory;
};

/// Called at every recorded step with the (unrescaled) current operator.
using StepObserver = std::function<void(const TrajectoryRecord&, const PauliSum&)>;

/// Conjugates every term of `sum` by exp(-i w P tau): commuting terms pass
/// through, anticommuting ones become cos(2 w tau) P_a + r sin(2 w tau) Q with
/// P*P_a = i^k Q and r = Re(i * i^k), i.e. the exact adjoint action
/// exp(i w P tau) P_a exp(-i w P tau). The policy is applied afterwards.
PauliSum conjugate_rotation(const PauliSum& sum, const PauliWord& generator, double weight, double tau,
                            const TruncationPolicy& policy);

/// Trotterized Heisenberg back-propagation with truncation after every
/// Hamiltonian term and a final rescale to the input norm. Because every step
/// applies the same U(tau), the operator after s steps yields the expectation
/// at time s * tau, so one run produces the whole trajectory.
PropagationResult backpropagate(const PauliSum& observable, const Hamiltonian& hamiltonian,
                                const RunConfig& config, const ProductState* state = nullptr,
                                const StepObserver& observer = {});

/// sum_a c_a prod_j <P_{a,j}>_{rho_j}.
double expectation_product_state(const PauliSum& sum, const ProductState& state);

enum class MagnetizationMode { PerSite, Joint };

MagnetizationMode parse_magnetization_mode(const std::string& name);

/// (1/L) sum_i (-1)^i sigma^z_i / 2, positive on even sites.
PauliSum staggered_observable(std::size_t length);

/// m_z(t) series. PerSite propagates each Z_l with its own budget (in
/// parallel over `threads` workers; 0 means PAULIPROP_THREADS or hardware
/// concurrency) and combines; Joint propagates the signed sum under one budget.
std::vector<TrajectoryRecord> staggered_magnetization(const Hamiltonian& hamiltonian,
                                                      const ProductState& state, const RunConfig& config,
                                                      MagnetizationMode mode, std::size_t threads = 0);

/// Worker count from PAULIPROP_THREADS, falling back to hardware concurrency.
std::size_t default_thread_count();

}  // namespace pauliprop
