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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pauliprop/pauli_sum.hpp"

namespace pauliprop {

/// Operator stabilizer Renyi entropy in nats. alpha == 1 is the Shannon limit.
struct OseResult {
  double alpha = 0.5;
  double value = 0.0;
  /// False when |sum c^2 - 1| > 1e-6; the entropy is still computed as-is.
  bool normalized = true;
};

/// S^alpha(O) = (1/(1-alpha)) ln sum_P c_P^{2 alpha} for 0 < alpha < 1, via
/// log-sum-exp. For alpha == 1 returns -sum p ln p with p = c^2 / sum c^2.
OseResult ose(const PauliSum& sum, double alpha);

/// Right-hand side of ln Delta(K) <= ((1-a)/a)(S - ln K) + ln(a/(1-a)).
double delta_bound(double entropy, double k, double alpha);

/// Raised when the prescribed budget does not fit in 64 bits.
class BudgetOverflow : public std::overflow_error {
 public:
  explicit BudgetOverflow(double ln_value);
  double ln_value() const { return ln_value_; }

 private:
  double ln_value_;
};

/// ln of exp(S) * (2a / ((1-a) eps^2))^{a/(1-a)}.
double ln_k_prescription(double entropy, double epsilon, double alpha);

/// Smallest integer K meeting the entropy-based sufficient condition for a
/// Pauli-2 error of at most epsilon. Throws BudgetOverflow past 2^63.
std::uint64_t k_prescription(double entropy, double epsilon, double alpha);

struct BoundReport {
  std::size_t k = 1;
  double alpha = 0.5;
  double entropy = 0.0;
  double ln_delta_bound = 0.0;
  std::optional<double> epsilon;
  std::optional<std::uint64_t> k_required;
  std::optional<double> ln_k_required;
};

BoundReport bound_report(double entropy, double alpha, std::size_t k, std::optional<double> epsilon = {});

struct TruncationErrorReport {
  double exact = 0.0;  // ||O - O_hat||_{Pauli,2}, O_hat the rescaled Top-K approximant
  double bound = 0.0;  // sqrt(2 Delta(K))
};

TruncationErrorReport truncation_error(const PauliSum& sum, std::size_t k);

struct XyStructureReport {
  std::size_t site = 0;
  std::size_t steps = 0;
  std::size_t count = 0;
  std::size_t count_bound = 0;  // 2s + 4s(2s-1); 0 when s == 0
  bool family_ok = true;
  bool support_ok = true;
  bool count_ok = true;
  std::optional<PauliWord> witness;  // first term violating family or support
  std::string message;

  bool passed() const { return family_ok && support_ok && count_ok; }
};

/// Checks an evolved Z_l against the free-fermion structure: every term is a
/// single Z_m or an X/Y-ended string with Z on all interior sites, support lies
/// in [l-s, l+s], and the term count is at most 2s + 4s(2s-1).
XyStructureReport xy_structure_check(const PauliSum& sum, std::size_t site, std::size_t steps);

/// True if `word` is Z_m or (X|Y) Z...Z (X|Y).
bool in_free_fermion_family(const PauliWord& word);

/// (2/3)^M ||O||^2 + sum_{wt(P) >= M} c_P^2.
double weight_truncation_bound(const PauliSum& sum, std::size_t max_weight);

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  double mass = 0.0;  // summed c^2
  std::size_t count = 0;
};

struct Distributions {
  std::vector<HistogramBin> magnitude;  // c^2 in [2^b, 2^{b+1}), ascending
  std::vector<HistogramBin> weight;     // Hamming weight w in [w, w+1), ascending
  std::size_t terms = 0;
};

Distributions distributions(const PauliSum& sum);

}  // namespace pauliprop
