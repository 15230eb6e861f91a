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

#include "pauliprop/propagation.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>

#include "pauliprop/analytics.hpp"

namespace pauliprop {

void RunConfig::validate() const {
  if (!(total_time >= 0.0)) throw std::invalid_argument("total time t must be >= 0");
  if (steps < 1) throw std::invalid_argument("step count N must be >= 1");
  if (record_every < 1) throw std::invalid_argument("record_every must be >= 1");
  policy.validate();
}

namespace {

constexpr double kNormUnderflow = 1e-14;

struct Rotation {
  const std::uint64_t* generator;
  double cos_angle;
  double sin_angle;
};

// One conjugation into `scratch`, then swapped back into `sum`.
void rotate(PauliSum& sum, PauliSum& scratch, const Rotation& rot, std::vector<std::uint64_t>& product) {
  const std::size_t nb = sum.num_blocks();
  scratch.clear();
  scratch.reserve(2 * sum.size());
  for (std::size_t p = 0; p < sum.size(); ++p) {
    const std::uint64_t* key = sum.key(p).data();
    const double c = sum.coeff(p);
    if (!bits::anticommutes(rot.generator, key, nb)) {
      scratch.add(key, c);
      continue;
    }
    const PhaseExponent k = bits::multiply_into(rot.generator, key, product.data(), nb);
    // e^{+iwP tau} P_a e^{-iwP tau} = cos P_a + i sin P P_a; i * i^k must be real.
    if (k.is_real()) {
      throw std::logic_error("conjugate_rotation: imaginary coefficient from anticommuting product");
    }
    const double sign = (k.k == 1) ? -1.0 : 1.0;
    scratch.add(key, c * rot.cos_angle);
    scratch.add(product.data(), sign * c * rot.sin_angle);
  }
  std::swap(sum, scratch);
}

void require_dims(const PauliSum& sum, std::size_t n, const char* what) {
  if (sum.num_qubits() != n) {
    throw DimensionMismatch(std::string(what) + ": operator has " + std::to_string(sum.num_qubits()) +
                            " qubits, expected " + std::to_string(n));
  }
}

}  // namespace

PauliSum conjugate_rotation(const PauliSum& sum, const PauliWord& generator, double weight, double tau,
                            const TruncationPolicy& policy) {
  require_dims(sum, generator.num_qubits(), "conjugate_rotation");
  PauliSum current = sum;
  PauliSum scratch(sum.num_qubits(), sum.prune_eps());
  std::vector<std::uint64_t> product(generator.packed().size());
  const double angle = 2.0 * weight * tau;
  rotate(current, scratch, {generator.packed().data(), std::cos(angle), std::sin(angle)}, product);
  apply_truncation(policy, current);
  return current;
}

PropagationResult backpropagate(const PauliSum& observable, const Hamiltonian& hamiltonian,
                                const RunConfig& config, const ProductState* state,
                                const StepObserver& observer) {
  config.validate();
  const std::size_t n = hamiltonian.num_qubits();
  require_dims(observable, n, "backpropagate");
  if (state != nullptr && state->num_qubits() != n) {
    throw DimensionMismatch("backpropagate: state has " + std::to_string(state->num_qubits()) + " sites");
  }
  if (observable.empty()) throw std::invalid_argument("backpropagate: observable is empty");

  const double tau = config.tau();
  std::vector<Rotation> rotations;
  rotations.reserve(hamiltonian.size());
  for (const auto& term : hamiltonian.terms()) {
    const double angle = 2.0 * term.weight * tau;
    rotations.push_back({term.word.packed().data(), std::cos(angle), std::sin(angle)});
  }

  const double initial_norm = pauli_norm2(observable);
  PauliSum current = observable;
  current.set_prune_eps(config.policy.prune_eps);
  PauliSum scratch(n, config.policy.prune_eps);
  std::vector<std::uint64_t> product(2 * bits::blocks_for(n));

  PropagationResult result;
  double discarded = 0.0;
  for (std::size_t step = 1; step <= config.steps; ++step) {
    for (std::size_t i = 0; i < rotations.size(); ++i) {
      rotate(current, scratch, rotations[i], product);
      discarded += apply_truncation(config.policy, current).discarded_mass;
      if (current.empty()) {
        throw PropagationError("operator truncated to empty at step " + std::to_string(step) + ", term " +
                               std::to_string(i));
      }
    }
    const double norm = pauli_norm2(current);
    const double ratio = norm / initial_norm;
    if (!(ratio >= kNormUnderflow)) {
      throw PropagationError("norm ratio underflow (" + std::to_string(ratio) + ") at step " +
                             std::to_string(step));
    }
    const double rescale = initial_norm / norm;

    const bool record = (step % config.record_every == 0) || step == config.steps;
    if (record) {
      TrajectoryRecord rec;
      rec.step = step;
      rec.time = static_cast<double>(step) * tau;
      rec.value = state ? rescale * expectation_product_state(current, *state)
                        : std::numeric_limits<double>::quiet_NaN();
      rec.terms = current.size();
      rec.discarded_mass = discarded;
      rec.norm_ratio = ratio;
      if (config.record_ose) {
        PauliSum scaled = current;
        scaled.scale(rescale);
        rec.ose_half = ose(scaled, 0.5).value;
        rec.ose_shannon = ose(scaled, 1.0).value;
      }
      if (observer) observer(rec, current);
      result.trajectory.push_back(rec);
    }
    if (config.rescale_every_step) current.scale(rescale);
  }

  current.scale(initial_norm / pauli_norm2(current));
  result.evolved = std::move(current);
  return result;
}

double expectation_product_state(const PauliSum& sum, const ProductState& state) {
  require_dims(sum, state.num_qubits(), "expectation_product_state");
  const std::size_t nb = sum.num_blocks();
  double total = 0.0;
  for (std::size_t p = 0; p < sum.size(); ++p) {
    const std::uint64_t* key = sum.key(p).data();
    double value = sum.coeff(p);
    for (std::size_t w = 0; w < nb && value != 0.0; ++w) {
      std::uint64_t support = key[w] | key[nb + w];
      while (support != 0 && value != 0.0) {
        const int bit = __builtin_ctzll(support);
        support &= support - 1;
        const Bloch& b = state[w * 64 + static_cast<std::size_t>(bit)];
        const bool xb = (key[w] >> bit) & 1;
        const bool zb = (key[nb + w] >> bit) & 1;
        value *= xb ? (zb ? b.y : b.x) : b.z;
      }
    }
    total += value;
  }
  return total;
}

MagnetizationMode parse_magnetization_mode(const std::string& name) {
  if (name == "per_site") return MagnetizationMode::PerSite;
  if (name == "joint") return MagnetizationMode::Joint;
  throw std::invalid_argument("unknown mode '" + name + "' (expected per_site or joint)");
}

PauliSum staggered_observable(std::size_t length) {
  PauliSum sum(length);
  const double scale = 0.5 / static_cast<double>(length);
  for (std::size_t i = 0; i < length; ++i) {
    sum.accumulate(PauliWord::single(length, i, 'Z'), (i % 2 == 0) ? scale : -scale);
  }
  return sum;
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("PAULIPROP_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<TrajectoryRecord> staggered_magnetization(const Hamiltonian& hamiltonian,
                                                      const ProductState& state, const RunConfig& config,
                                                      MagnetizationMode mode, std::size_t threads) {
  const std::size_t length = hamiltonian.num_qubits();
  if (state.num_qubits() != length) {
    throw DimensionMismatch("staggered_magnetization: state/Hamiltonian size mismatch");
  }
  if (mode == MagnetizationMode::Joint) {
    return backpropagate(staggered_observable(length), hamiltonian, config, &state).trajectory;
  }

  // Per-site runs are independent; results are combined in site order, so the
  // output does not depend on the worker count.
  std::vector<std::vector<TrajectoryRecord>> per_site(length);
  std::vector<std::string> errors(length);
  const std::size_t center = length / 2;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t site = next++; site < length; site = next++) {
      RunConfig cfg = config;
      cfg.record_ose = config.record_ose && site == center;
      try {
        PauliSum z(length, config.policy.prune_eps);
        z.accumulate(PauliWord::single(length, site, 'Z'), 1.0);
        per_site[site] = backpropagate(z, hamiltonian, cfg, &state).trajectory;
      } catch (const std::exception& e) {
        errors[site] = e.what();
      }
    }
  };
  if (threads == 0) threads = default_thread_count();
  threads = std::max<std::size_t>(1, std::min(threads, length));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (std::size_t site = 0; site < length; ++site) {
    if (!errors[site].empty()) throw PropagationError("site " + std::to_string(site) + ": " + errors[site]);
  }

  // Combined record: summed term counts and discarded mass, worst norm ratio,
  // and the OSE of the central site's operator.
  std::vector<TrajectoryRecord> combined = per_site.front();
  const double scale = 0.5 / static_cast<double>(length);
  for (std::size_t r = 0; r < combined.size(); ++r) {
    TrajectoryRecord& out = combined[r];
    out.value = 0.0;
    out.terms = 0;
    out.discarded_mass = 0.0;
    out.norm_ratio = 1.0;
    for (std::size_t site = 0; site < length; ++site) {
      const TrajectoryRecord& rec = per_site[site][r];
      out.value += ((site % 2 == 0) ? scale : -scale) * rec.value;
      out.terms += rec.terms;
      out.discarded_mass += rec.discarded_mass;
      out.norm_ratio = std::min(out.norm_ratio, rec.norm_ratio);
    }
    out.ose_half = per_site[center][r].ose_half;
    out.ose_shannon = per_site[center][r].ose_shannon;
  }
  return combined;
}

}  // namespace pauliprop
