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

#include <cmath>
#include <random>

#include "pauliprop/oracle.hpp"
#include "pauliprop/propagation.hpp"
#include "pauliprop/truncation.hpp"
#include "pauliprop/verify.hpp"

using namespace pauliprop;

TEST(DenseOracle, SingleBondCosine) {
  Hamiltonian h(2);
  h.add_term(1.0, PauliWord::from_string("XX"));
  const PauliSum z0 = PauliSum::from_terms({{"ZI", 1.0}});
  for (double t : {0.0, 0.4, 1.9}) EXPECT_NEAR(dense_trotter_expectation(h, ProductState::neel(2), z0, t, 1), std::cos(2 * t), 1e-13);
}

TEST(DenseOracle, TimeZeroIsProductExpectation) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const ProductState st = random_gen::state(n, rng);
    const PauliSum o = random_gen::operator_sum(n, 6, rng);
    EXPECT_NEAR(dense_trotter_expectation(random_gen::hamiltonian(n, rng), st, o, 0.0, 3), expectation_product_state(o, st), 1e-12);
  }
}

TEST(DenseOracle, CommutingObservableIsConstant) {
  const Hamiltonian h = build_xxz_chain(4, 0.0, 0.0, 1.3);
  const PauliSum zz = PauliSum::from_terms({{"ZZII", 1.0}});
  const ProductState st({Bloch{0.6, 0, 0.8}, Bloch{0, 0.6, -0.8}, Bloch{1, 0, 0}, Bloch{0, 0, 1}});
  const auto traj = dense_trotter_trajectory(h, st, zz, 0.3, 5);
  for (double v : traj) EXPECT_NEAR(v, 0.8 * -0.8, 1e-13);
}

TEST(DenseOracle, MixedPathAgreesWithPureByLinearity) {
  // The expectation is affine in each site's Bloch vector, so a half-length
  // Bloch vector at one site averages the pure states along +n and -n.
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 8; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const Hamiltonian h = random_gen::hamiltonian(n, rng);
    const PauliSum o = random_gen::operator_sum(n, 5, rng);
    const ProductState pure = random_gen::state(n, rng, false);
    std::vector<Bloch> plus(pure.sites().begin(), pure.sites().end()), minus = plus, half = plus;
    minus[0] = {-plus[0].x, -plus[0].y, -plus[0].z};
    half[0] = {0.5 * plus[0].x, 0.5 * plus[0].y, 0.5 * plus[0].z};
    const double ep = dense_trotter_expectation(h, ProductState(plus), o, 0.8, 4);
    const double em = dense_trotter_expectation(h, ProductState(minus), o, 0.8, 4);
    const double eh = dense_trotter_expectation(h, ProductState(half), o, 0.8, 4);
    EXPECT_NEAR(eh, 0.75 * ep + 0.25 * em, 1e-12);
  }
}

TEST(DenseOracle, HeisenbergCoefficientsPreserveNorm) {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 6; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const PauliSum o = random_gen::operator_sum(n, 4, rng);
    const PauliSum evolved = dense_heisenberg_coefficients(random_gen::hamiltonian(n, rng), o, 1.1, 6);
    EXPECT_NEAR(evolved.squared_norm(), o.squared_norm(), 1e-10);
  }
  const PauliSum o = PauliSum::from_terms({{"XYZ", 0.3}, {"ZZI", -0.7}});
  const PauliSum same = dense_heisenberg_coefficients(build_xxz_chain(3, 1, 1, 1), o, 0.0, 2);
  EXPECT_EQ(same.size(), 2u);
  EXPECT_NEAR(same.coefficient(PauliWord::from_string("XYZ")), 0.3, 1e-14);
}

TEST(DenseOracle, HeisenbergMatchesPropagation) {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const Hamiltonian h = random_gen::hamiltonian(n, rng);
    const PauliSum o = random_gen::operator_sum(n, 3, rng);
    RunConfig cfg;
    cfg.total_time = 0.9;
    cfg.steps = 5;
    const PauliSum engine = backpropagate(o, h, cfg).evolved;
    const PauliSum dense = dense_heisenberg_coefficients(h, o, 0.9, 5);
    for (std::size_t i = 0; i < dense.size(); ++i) EXPECT_NEAR(engine.coefficient(dense.word(i)), dense.coeff(i), 1e-10);
    for (std::size_t i = 0; i < engine.size(); ++i) EXPECT_NEAR(engine.coeff(i), dense.coefficient(engine.word(i)), 1e-10);
  }
}

TEST(DenseOracle, CapsAreEnforced) {
  const Hamiltonian big = build_xxz_chain(13, 1, 1, 0);
  PauliSum z(13);
  z.accumulate(PauliWord::single(13, 0, 'Z'), 1.0);
  EXPECT_THROW(dense_trotter_expectation(big, ProductState::neel(13), z, 0.1, 1), OracleCapExceeded);
  const Hamiltonian nine = build_xxz_chain(9, 1, 1, 0);
  PauliSum z9(9);
  z9.accumulate(PauliWord::single(9, 0, 'Z'), 1.0);
  EXPECT_THROW(dense_heisenberg_coefficients(nine, z9, 0.1, 1), OracleCapExceeded);
}

TEST(LocalScrambling, IdenticalOperatorsGiveZero) {
  const PauliSum o = PauliSum::from_terms({{"XZ", 0.4}, {"YY", 0.2}});
  const auto r = local_scrambling_mc(o, o, 100, 3);
  EXPECT_EQ(r.mean_sq_error, 0.0);
  EXPECT_EQ(r.std_error, 0.0);
}

TEST(LocalScrambling, HaarSecondMoment) {
  // E[<Z>^2] over Haar single-qubit states is 1/3.
  const auto r = local_scrambling_mc(PauliSum::from_terms({{"Z", 1.0}}), PauliSum(1), 40000, 5);
  EXPECT_NEAR(r.mean_sq_error, 1.0 / 3.0, 4.0 * r.std_error);
  EXPECT_LT(r.std_error, 0.01);
}

TEST(LocalScrambling, ProductMomentsFactorize) {
  // For a weight-w word the second moment is 3^{-w}.
  const auto r = local_scrambling_mc(PauliSum::from_terms({{"XYZ", 1.0}}), PauliSum(3), 40000, 6);
  EXPECT_NEAR(r.mean_sq_error, 1.0 / 27.0, 4.0 * r.std_error);
}

TEST(LocalScrambling, DisjointSeedHalvesAgree) {
  std::mt19937_64 rng(65);
  const PauliSum o = random_gen::operator_sum(4, 12, rng);
  const PauliSum approx = weight_truncate(o, 3).kept;
  const auto a = local_scrambling_mc(o, approx, 4000, 100);
  const auto b = local_scrambling_mc(o, approx, 4000, 200);
  EXPECT_NE(a.mean_sq_error, b.mean_sq_error);
  EXPECT_LE(std::abs(a.mean_sq_error - b.mean_sq_error), 4.0 * std::hypot(a.std_error, b.std_error));
  const auto again = local_scrambling_mc(o, approx, 4000, 100);
  EXPECT_EQ(a.mean_sq_error, again.mean_sq_error);
}

TEST(LocalScrambling, RejectsTooFewSamples) {
  EXPECT_THROW(local_scrambling_mc(PauliSum::from_terms({{"Z", 1.0}}), PauliSum(1), 1, 0), std::invalid_argument);
}
