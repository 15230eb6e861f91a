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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "pauliprop/truncation.hpp"

using namespace pauliprop;

namespace {

std::vector<std::pair<std::string, double>> terms_of(const PauliSum& s) {
  std::vector<std::pair<std::string, double>> out;
  for (const auto& [w, c] : s.sorted_terms()) out.emplace_back(w.to_string(), c);
  return out;
}

// Small sums with heavy magnitude ties so cutoff tie-breaks are exercised.
PauliSum random_sum(std::mt19937_64& rng, std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> level(1, 12);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = 4;
  PauliSum s(n);
  const std::size_t target = count(rng);
  const bool tied = coin(rng) == 1;
  while (s.size() < target) {
    PauliWord w(n);
    for (std::size_t j = 0; j < n; ++j) w.set(j, "IXYZ"[pick(rng)]);
    if (s.contains(w)) continue;
    const double mag = tied ? std::ldexp(1.0, -level(rng)) : unit(rng) * std::ldexp(1.0, -level(rng));
    s.accumulate(w, coin(rng) ? mag : -mag);
  }
  return s;
}

// Brute-force reference: sort by (|c| desc, word asc).
std::vector<std::string> reference_top_k(const PauliSum& s, std::size_t k) {
  auto terms = s.sorted_terms();
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return std::abs(a.second) > std::abs(b.second); });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < std::min(k, terms.size()); ++i) out.push_back(terms[i].first.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> keys(const PauliSum& s) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s.word(i).to_string());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(TopKExact, Examples) {
  const PauliSum s = PauliSum::from_terms({{"X", 0.9}, {"Y", 0.5}, {"Z", 0.1}});
  EXPECT_EQ(terms_of(top_k_exact(s, 2)), (std::vector<std::pair<std::string, double>>{{"X", 0.9}, {"Y", 0.5}}));
  const PauliSum one = PauliSum::from_terms({{"X", 0.9}});
  EXPECT_EQ(terms_of(top_k_exact(one, 4)), terms_of(one));
}

TEST(TopKExact, TiesGoToLexicographicallySmaller) {
  const PauliSum s = PauliSum::from_terms({{"X", 0.5}, {"Y", -0.5}, {"Z", 0.5}});
  const PauliSum kept = top_k_exact(s, 2);
  // Word order is Z < X < Y on the (x, z) bit tuple.
  EXPECT_EQ(keys(kept), (std::vector<std::string>{"X", "Z"}));
}

TEST(TopKExact, MatchesBruteForce) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 400; ++trial) {
    const PauliSum s = random_sum(rng, 64);
    for (std::size_t k : {std::size_t{1}, std::size_t{3}, s.size() / 2 + 1, s.size()}) {
      EXPECT_EQ(keys(top_k_exact(s, k)), reference_top_k(s, k));
    }
  }
}

TEST(TopKExact, NormPlusTailIsTotal) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const PauliSum s = random_sum(rng, 64);
    for (std::size_t k = 0; k <= s.size(); k += 3) {
      const double kept = k == 0 ? 0.0 : top_k_exact(s, k).squared_norm();
      EXPECT_NEAR(kept + squared_tail(s, k), s.squared_norm(), 1e-12 * s.squared_norm());
    }
  }
}

TEST(SquaredTail, Examples) {
  const PauliSum s = PauliSum::from_terms({{"X", std::sqrt(0.5)}, {"Y", std::sqrt(0.3)}, {"Z", std::sqrt(0.2)}});
  EXPECT_NEAR(squared_tail(s, 1), 0.5, 1e-15);
  EXPECT_EQ(squared_tail(s, 3), 0.0);
  EXPECT_NEAR(squared_tail(s, 0), 1.0, 1e-15);
}

TEST(TopKBucket, Examples) {
  const PauliSum s = PauliSum::from_terms({{"X", 0.9}, {"Y", 0.5}, {"Z", 0.1}});
  EXPECT_EQ(keys(top_k_bucket(s, 2, 32)), (std::vector<std::string>{"X", "Y"}));
  EXPECT_EQ(keys(top_k_bucket(s, 3, 32)), keys(s));
}

TEST(TopKBucket, UniformMagnitudesFillToTwiceK) {
  PauliSum s(3);
  for (const char* w : {"XII", "IXI", "IIX", "ZII", "IZI", "IIZ", "YII", "IYI"}) s.accumulate(PauliWord::from_string(w), 0.25);
  for (std::size_t k = 1; k <= 4; ++k) {
    const PauliSum kept = top_k_bucket(s, k, 32);
    EXPECT_EQ(kept.size(), 2 * k);
    EXPECT_EQ(keys(kept), keys(top_k_exact(s, 2 * k)));
  }
}

TEST(TopKBucket, SupersetOfExactAndSizeBounds) {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<std::size_t> buckets(1, 40);
  for (int trial = 0; trial < 1000; ++trial) {
    const PauliSum s = random_sum(rng, 64);
    std::uniform_int_distribution<std::size_t> kdist(1, s.size() + 2);
    const std::size_t k = kdist(rng);
    const PauliSum kept = top_k_bucket(s, k, buckets(rng));
    const auto kept_keys = keys(kept);
    const auto half = reference_top_k(s, (k + 1) / 2);
    EXPECT_TRUE(std::includes(kept_keys.begin(), kept_keys.end(), half.begin(), half.end()));
    const auto full = reference_top_k(s, k);
    EXPECT_TRUE(std::includes(kept_keys.begin(), kept_keys.end(), full.begin(), full.end()));
    EXPECT_GE(kept.size(), std::min(k, s.size()));
    EXPECT_LE(kept.size(), 2 * k);
    for (std::size_t i = 0; i < kept.size(); ++i) EXPECT_EQ(kept.coeff(i), s.coefficient(kept.word(i)));
  }
}

TEST(WeightTruncate, Examples) {
  const PauliSum s = PauliSum::from_terms({{"ZI", 0.6}, {"XX", 0.8}});
  const auto a = weight_truncate(s, 2);
  EXPECT_EQ(terms_of(a.kept), (std::vector<std::pair<std::string, double>>{{"ZI", 0.6}}));
  EXPECT_FALSE(a.degenerate);
  const auto b = weight_truncate(PauliSum::from_terms({{"Z", 1.0}}), 2);
  EXPECT_EQ(b.kept.size(), 1u);
  const auto c = weight_truncate(PauliSum::from_terms({{"XX", 1.0}}), 1);
  EXPECT_TRUE(c.kept.empty());
  EXPECT_TRUE(c.degenerate);
}

TEST(Policy, Idempotent) {
  std::mt19937_64 rng(34);
  std::vector<TruncationPolicy> policies{TruncationPolicy::top_k(5), TruncationPolicy::bucket(5, 8),
                                         TruncationPolicy::top_k(1)};
  TruncationPolicy weight;
  weight.kind = TruncationPolicy::Kind::WeightCap;
  weight.weight_cap = 3;
  policies.push_back(weight);
  TruncationPolicy combined = TruncationPolicy::top_k(6);
  combined.kind = TruncationPolicy::Kind::Combined;
  combined.weight_cap = 3;
  policies.push_back(combined);
  for (int trial = 0; trial < 200; ++trial) {
    const PauliSum s = random_sum(rng, 64);
    for (const auto& p : policies) {
      PauliSum once = s;
      apply_truncation(p, once);
      PauliSum twice = once;
      const auto second = apply_truncation(p, twice);
      EXPECT_EQ(terms_of(once), terms_of(twice)) << p.describe();
      EXPECT_EQ(second.discarded_mass, 0.0);
    }
  }
}

TEST(Policy, DiscardedMassAccounting) {
  const PauliSum s = PauliSum::from_terms({{"XI", 0.8}, {"IZ", 0.5}, {"YY", 0.3}});
  PauliSum t = s;
  const auto outcome = apply_truncation(TruncationPolicy::top_k(1), t);
  EXPECT_NEAR(outcome.discarded_mass, 0.25 + 0.09, 1e-15);
  EXPECT_NEAR(t.squared_norm() + outcome.discarded_mass, s.squared_norm(), 1e-15);
}

TEST(Policy, ValidateAndParse) {
  EXPECT_THROW(TruncationPolicy::top_k(0).validate(), std::invalid_argument);
  EXPECT_THROW(TruncationPolicy::bucket(4, 0).validate(), std::invalid_argument);
  EXPECT_EQ(parse_policy_kind("bucket"), TruncationPolicy::Kind::TopKBucket);
  EXPECT_EQ(parse_policy_kind("topk"), TruncationPolicy::Kind::TopKExact);
  EXPECT_THROW(parse_policy_kind("random"), std::invalid_argument);
  EXPECT_TRUE(TruncationPolicy::unbounded().is_unbounded());
}
