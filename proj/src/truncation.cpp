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

#include "pauliprop/truncation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace pauliprop {

bool TruncationPolicy::is_unbounded() const {
  const bool no_budget = budget == std::numeric_limits<std::size_t>::max();
  const bool no_cap = weight_cap == std::numeric_limits<std::size_t>::max();
  switch (kind) {
    case Kind::TopKExact:
    case Kind::TopKBucket: return no_budget;
    case Kind::WeightCap: return no_cap;
    case Kind::Combined: return no_budget && no_cap;
  }
  return false;
}

void TruncationPolicy::validate() const {
  if (budget < 1) throw std::invalid_argument("truncation budget K must be >= 1");
  if (buckets < 1) throw std::invalid_argument("bucket count B must be >= 1");
  if (weight_cap < 1) throw std::invalid_argument("weight threshold M must be >= 1");
  if (!(prune_eps >= 0.0)) throw std::invalid_argument("prune_eps must be >= 0");
}

std::string to_string(TruncationPolicy::Kind kind) {
  switch (kind) {
    case TruncationPolicy::Kind::TopKExact: return "topk";
    case TruncationPolicy::Kind::TopKBucket: return "bucket";
    case TruncationPolicy::Kind::WeightCap: return "weight";
    case TruncationPolicy::Kind::Combined: return "combined";
  }
  return "unknown";
}

TruncationPolicy::Kind parse_policy_kind(const std::string& name) {
  if (name == "topk" || name == "exact") return TruncationPolicy::Kind::TopKExact;
  if (name == "bucket") return TruncationPolicy::Kind::TopKBucket;
  if (name == "weight") return TruncationPolicy::Kind::WeightCap;
  if (name == "combined") return TruncationPolicy::Kind::Combined;
  throw std::invalid_argument("unknown truncation policy '" + name + "'");
}

std::string TruncationPolicy::describe() const {
  auto num = [](std::size_t v) {
    return v == std::numeric_limits<std::size_t>::max() ? std::string("inf") : std::to_string(v);
  };
  return to_string(kind) + "(K=" + num(budget) + ",B=" + std::to_string(buckets) +
         ",M=" + num(weight_cap) + ")";
}

namespace {

// Strict total order: larger magnitude first, then lexicographically smaller word.
struct Ranking {
  const PauliSum& sum;
  bool operator()(std::size_t a, std::size_t b) const {
    const double ma = std::abs(sum.coeff(a));
    const double mb = std::abs(sum.coeff(b));
    if (ma != mb) return ma > mb;
    return bits::lex_compare(sum.key(a).data(), sum.key(b).data(), sum.num_blocks()) < 0;
  }
};

// Best `count` of `candidates` under Ranking, appended to `out`.
void take_best(const PauliSum& sum, std::vector<std::size_t>& candidates, std::size_t count,
               std::vector<std::size_t>& out) {
  count = std::min(count, candidates.size());
  if (count < candidates.size()) {
    std::nth_element(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(count),
                     candidates.end(), Ranking{sum});
  }
  out.insert(out.end(), candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(count));
}

std::vector<std::size_t> top_k_positions(const PauliSum& sum, std::size_t k) {
  std::vector<std::size_t> all(sum.size());
  std::iota(all.begin(), all.end(), std::size_t{0});
  std::vector<std::size_t> out;
  take_best(sum, all, k, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> bucket_positions(const PauliSum& sum, std::size_t k, std::size_t num_buckets) {
  double cmax = 0.0;
  for (double c : sum.coefficients()) cmax = std::max(cmax, std::abs(c));

  // Bucket b holds 2^{-(b+1)} cmax <= |c| < 2^{-b} cmax; index num_buckets is underflow.
  std::vector<std::vector<std::size_t>> bins(num_buckets + 1);
  for (std::size_t p = 0; p < sum.size(); ++p) {
    const double mag = std::abs(sum.coeff(p));
    std::size_t b = num_buckets;
    if (mag > 0.0 && cmax > 0.0) {
      int exponent = 0;
      std::frexp(mag / cmax, &exponent);
      const long idx = std::max(0L, -static_cast<long>(exponent));
      if (idx < static_cast<long>(num_buckets)) b = static_cast<std::size_t>(idx);
    }
    bins[b].push_back(p);
  }

  std::vector<std::size_t> out;
  out.reserve(2 * k);
  for (auto& bin : bins) {
    if (out.size() + bin.size() < k) {
      out.insert(out.end(), bin.begin(), bin.end());
      continue;
    }
    if (out.size() + bin.size() <= 2 * k) {
      out.insert(out.end(), bin.begin(), bin.end());
    } else {
      take_best(sum, bin, 2 * k - out.size(), out);
    }
    break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

double removed_mass(const PauliSum& sum, const std::vector<std::size_t>& kept) {
  double dropped = 0.0;
  std::size_t next = 0;
  for (std::size_t p = 0; p < sum.size(); ++p) {
    if (next < kept.size() && kept[next] == p) {
      ++next;
      continue;
    }
    dropped += sum.coeff(p) * sum.coeff(p);
  }
  return dropped;
}

std::vector<std::size_t> weight_positions(const PauliSum& sum, std::size_t max_weight) {
  std::vector<std::size_t> out;
  out.reserve(sum.size());
  for (std::size_t p = 0; p < sum.size(); ++p) {
    if (bits::weight(sum.key(p).data(), sum.num_blocks()) < max_weight) out.push_back(p);
  }
  return out;
}

}  // namespace

PauliSum top_k_exact(const PauliSum& sum, std::size_t k) {
  if (k < 1) throw std::invalid_argument("top_k_exact: K must be >= 1");
  PauliSum out = sum;
  if (sum.size() > k) out.retain(top_k_positions(sum, k));
  return out;
}

PauliSum top_k_bucket(const PauliSum& sum, std::size_t k, std::size_t num_buckets) {
  if (k < 1) throw std::invalid_argument("top_k_bucket: K must be >= 1");
  if (num_buckets < 1) throw std::invalid_argument("top_k_bucket: B must be >= 1");
  PauliSum out = sum;
  if (sum.size() > k) out.retain(bucket_positions(sum, k, num_buckets));
  return out;
}

WeightTruncation weight_truncate(const PauliSum& sum, std::size_t max_weight) {
  if (max_weight < 1) throw std::invalid_argument("weight_truncate: M must be >= 1");
  WeightTruncation result{sum, false};
  const auto kept = weight_positions(sum, max_weight);
  if (kept.size() != sum.size()) result.kept.retain(kept);
  result.degenerate = !sum.empty() && result.kept.empty();
  return result;
}

double squared_tail(const PauliSum& sum, std::size_t k) {
  if (k >= sum.size()) return 0.0;
  std::vector<double> squares;
  squares.reserve(sum.size());
  for (double c : sum.coefficients()) squares.push_back(c * c);
  std::nth_element(squares.begin(), squares.begin() + static_cast<std::ptrdiff_t>(k), squares.end(),
                   std::greater<>());
  std::sort(squares.begin() + static_cast<std::ptrdiff_t>(k), squares.end());
  double tail = 0.0;
  for (auto it = squares.begin() + static_cast<std::ptrdiff_t>(k); it != squares.end(); ++it) tail += *it;
  return tail;
}

TruncationOutcome apply_truncation(const TruncationPolicy& policy, PauliSum& sum) {
  TruncationOutcome outcome;
  const bool was_nonempty = !sum.empty();
  outcome.discarded_mass += sum.prune(policy.prune_eps);

  auto cut = [&](const std::vector<std::size_t>& kept) {
    if (kept.size() == sum.size()) return;
    outcome.discarded_mass += removed_mass(sum, kept);
    sum.retain(kept);
  };

  using Kind = TruncationPolicy::Kind;
  if ((policy.kind == Kind::WeightCap || policy.kind == Kind::Combined) &&
      policy.weight_cap != std::numeric_limits<std::size_t>::max()) {
    cut(weight_positions(sum, policy.weight_cap));
  }
  if (sum.size() > policy.budget) {
    switch (policy.kind) {
      case Kind::TopKExact:
      case Kind::Combined: cut(top_k_positions(sum, policy.budget)); break;
      case Kind::TopKBucket: cut(bucket_positions(sum, policy.budget, policy.buckets)); break;
      case Kind::WeightCap: break;
    }
  }
  outcome.degenerate = was_nonempty && sum.empty();
  return outcome;
}

}  // namespace pauliprop
