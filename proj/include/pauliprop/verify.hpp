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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pauliprop/hamiltonian.hpp"
#include "pauliprop/pauli_sum.hpp"
#include "pauliprop/product_state.hpp"

namespace pauliprop {

/// Outcome of one invariant / benchmark suite.
struct SuiteReport {
  std::string name;
  bool passed = true;
  bool informational = false;  // reported but excluded from the overall verdict
  std::vector<std::pair<std::string, double>> metrics;
  std::vector<std::string> notes;
  std::vector<std::string> failures;
  double seconds = 0.0;

  void fail(std::string message);
  void metric(std::string key, double value) { metrics.emplace_back(std::move(key), value); }
  double metric_value(const std::string& key) const;
  /// One-line machine-readable summary: "name PASS|FAIL key=value ...".
  std::string summary() const;
};

namespace random_gen {

using Rng = std::mt19937_64;

PauliWord word(std::size_t n, Rng& rng);
/// Word supported on exactly `w` random sites.
PauliWord word_of_weight(std::size_t n, std::size_t w, Rng& rng);
/// `terms` distinct random words with Gaussian (or |Gaussian|) coefficients,
/// normalized to unit Pauli-2 norm when `normalize`.
PauliSum operator_sum(std::size_t n, std::size_t terms, Rng& rng, bool normalize = true, bool nonnegative = false);
/// Random Bloch vectors; mixed ones when `allow_mixed`.
ProductState state(std::size_t n, Rng& rng, bool allow_mixed = true);
/// Random XXZ chain or random Pauli-sum Hamiltonian.
Hamiltonian hamiltonian(std::size_t n, Rng& rng);

}  // namespace random_gen

SuiteReport verify_algebra();
SuiteReport verify_oracle_equivalence(std::uint64_t seed, std::size_t instances = 50);
SuiteReport verify_unitarity(std::uint64_t seed, std::size_t instances = 20);
SuiteReport verify_lemma1(std::uint64_t seed, std::size_t operators = 200);
SuiteReport verify_theorem1(std::uint64_t seed);
SuiteReport verify_lemma2(std::uint64_t seed);
SuiteReport verify_k_prescription();

struct XyOptions {
  std::size_t length = 50;
  std::size_t site = 25;
  std::size_t steps = 200;
  double tau = 0.05;
  double jz = 0.0;
  Boundary boundary = Boundary::Open;
};

/// Untruncated propagation of Z_site with the structure check at every step.
SuiteReport verify_xy_structure(const XyOptions& options = {});
/// Expects a family-violating witness once Jz != 0.
SuiteReport verify_xy_witness(double jz = 0.5, std::size_t length = 12, std::size_t steps = 3);

SuiteReport verify_weight_mc(std::uint64_t seed, std::size_t samples = 4000);

struct Fig2aOptions {
  std::size_t length = 50;
  double t = 10.0;
  double tau = 0.05;
  std::size_t budget = 4096;
  bool per_site = true;
  std::size_t probe_budget = 1024;  // reported only; 0 disables
};
SuiteReport verify_fig2a(const Fig2aOptions& options = {});

struct InteractingOptions {
  std::size_t length = 20;
  std::size_t oracle_length = 10;
  double jz = 0.5;
  double t = 6.0;
  double tau = 0.05;
  std::size_t small_budget = std::size_t{1} << 15;
  std::size_t large_budget = std::size_t{1} << 17;
};
SuiteReport verify_interacting(const InteractingOptions& options = {});

/// Suite names accepted by run_suite, plus "all" (every quick suite).
std::vector<std::string> suite_names();
std::vector<SuiteReport> run_suite(const std::string& name, std::uint64_t seed);

}  // namespace pauliprop
