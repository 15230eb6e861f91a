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
#include <limits>
#include <string>

#include "pauliprop/pauli_sum.hpp"

namespace pauliprop {

/// How the evolving operator is cut back after each rotation.
struct TruncationPolicy {
  enum class Kind { TopKExact, TopKBucket, WeightCap, Combined };

  Kind kind = Kind::TopKExact;
  std::size_t budget = std::numeric_limits<std::size_t>::max();  // K
  std::size_t buckets = 32;                                      // B
  std::size_t weight_cap = std::numeric_limits<std::size_t>::max();  // M
  double prune_eps = kDefaultPruneEps;

  static TruncationPolicy unbounded() { return {}; }
  static TruncationPolicy top_k(std::size_t k) { return {Kind::TopKExact, k}; }
  static TruncationPolicy bucket(std::size_t k, std::size_t b) { return {Kind::TopKBucket, k, b}; }

  bool is_unbounded() const;
  /// Throws std::invalid_argument when an invariant (K, B, M >= 1, eps >= 0) fails.
  void validate() const;
  std::string describe() const;
};

TruncationPolicy::Kind parse_policy_kind(const std::string& name);
std::string to_string(TruncationPolicy::Kind kind);

/// The K entries of largest |c|; ties at the cutoff go to the
/// lexicographically smaller word.
PauliSum top_k_exact(const PauliSum& sum, std::size_t k);

/// Approximate Top-K by power-of-two magnitude buckets relative to the current
/// max |c|. Whole buckets are kept, largest first, until at least K entries
/// are held; the closing bucket is capped so that at most 2K entries survive.
/// The result always contains the exact Top-K set.
PauliSum top_k_bucket(const PauliSum& sum, std::size_t k, std::size_t num_buckets);

struct WeightTruncation {
  PauliSum kept;
  bool degenerate = false;  // input was non-empty and nothing survived
};

/// Keeps entries with weight(P) < M.
WeightTruncation weight_truncate(const PauliSum& sum, std::size_t max_weight);

/// Sum of squared coefficients beyond the K largest.
double squared_tail(const PauliSum& sum, std::size_t k);

struct TruncationOutcome {
  double discarded_mass = 0.0;
  bool degenerate = false;
};

/// In-place application of `policy`, including the prune_eps sweep.
TruncationOutcome apply_truncation(const TruncationPolicy& policy, PauliSum& sum);

}  // namespace pauliprop
