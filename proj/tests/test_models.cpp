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
#include <set>

#include "pauliprop/hamiltonian.hpp"
#include "pauliprop/product_state.hpp"

using namespace pauliprop;

TEST(Hamiltonian, XxzThreeSiteOrder) {
  const Hamiltonian h = build_xxz_chain(3, 1.0, 1.0, 0.5);
  ASSERT_EQ(h.size(), 6u);
  const char* words[] = {"XXI", "YYI", "ZZI", "IXX", "IYY", "IZZ"};
  const double weights[] = {1.0, 1.0, 0.5, 1.0, 1.0, 0.5};
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(h[i].word.to_string(), words[i]);
    EXPECT_EQ(h[i].weight, weights[i]);
  }
  EXPECT_FALSE(h.order_label().empty());
}

TEST(Hamiltonian, TermCounts) {
  EXPECT_EQ(build_xxz_chain(50, 1.0, 1.0, 0.0).size(), 98u);
  EXPECT_EQ(build_xxz_chain(50, 1.0, 1.0, 0.5).size(), 147u);
  EXPECT_EQ(build_xxz_chain(50, 1.0, 1.0, 0.5, Boundary::Periodic).size(), 150u);
  EXPECT_THROW(build_xxz_chain(1, 1.0, 1.0, 0.0), std::invalid_argument);
}

TEST(Hamiltonian, PeriodicWrapBondComesLast) {
  const Hamiltonian h = build_xxz_chain(4, 1.0, 0.0, 0.0, Boundary::Periodic);
  ASSERT_EQ(h.size(), 4u);
  EXPECT_EQ(h[3].word.to_string(), "XIIX");
}

TEST(Hamiltonian, ParseExamples) {
  const Hamiltonian h = parse_hamiltonian("1.0 XXI\n1.0 IXX\n");
  EXPECT_EQ(h.size(), 2u);
  EXPECT_EQ(h.num_qubits(), 3u);
  EXPECT_THROW(parse_hamiltonian("0.0 ZZI"), ParseError);
  try {
    parse_hamiltonian("1.0 XY\n1.0 XYZ");
    FAIL() << "length mismatch accepted";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_THROW(parse_hamiltonian("1.0 III"), ParseError);
  EXPECT_THROW(parse_hamiltonian("abc XX"), ParseError);
  EXPECT_NO_THROW(parse_hamiltonian("# comment\n\n0.5 ZZ\n"));
}

TEST(Hamiltonian, FileRoundTripIsBitExact) {
  const Hamiltonian h = build_xxz_chain(7, 0.1, 1.0 / 3.0, -2.7182818284590452, Boundary::Periodic);
  const Hamiltonian back = parse_hamiltonian(format_hamiltonian(h));
  ASSERT_EQ(back.size(), h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    EXPECT_EQ(back[i].word, h[i].word);
    EXPECT_EQ(back[i].weight, h[i].weight);
  }
}

TEST(Hamiltonian, MirrorSymmetricTermSet) {
  for (std::size_t length : {2u, 5u, 8u}) {
    const Hamiltonian h = build_xxz_chain(length, 0.7, 0.7, 0.3);
    std::multiset<std::pair<std::string, double>> direct, mirrored;
    for (const auto& term : h.terms()) {
      std::string w = term.word.to_string();
      direct.emplace(w, term.weight);
      std::reverse(w.begin(), w.end());
      mirrored.emplace(w, term.weight);
    }
    EXPECT_EQ(direct, mirrored);
  }
}

TEST(Hamiltonian, RejectsIdentityAndMismatch) {
  Hamiltonian h(2);
  EXPECT_THROW(h.add_term(1.0, PauliWord(2)), std::invalid_argument);
  EXPECT_THROW(h.add_term(1.0, PauliWord::from_string("XXX")), DimensionMismatch);
  h.add_term(0.0, PauliWord::from_string("XX"));
  EXPECT_EQ(h.size(), 0u);
}

TEST(ProductState, NeelAndParse) {
  const ProductState neel = ProductState::neel(4);
  EXPECT_EQ(neel[0].z, 1.0);
  EXPECT_EQ(neel[1].z, -1.0);
  EXPECT_TRUE(neel.is_pure());
  const ProductState custom = ProductState::parse("U+R-", 4);
  EXPECT_EQ(custom[0].z, 1.0);
  EXPECT_EQ(custom[1].x, 1.0);
  EXPECT_EQ(custom[2].y, 1.0);
  EXPECT_EQ(custom[3].x, -1.0);
  EXPECT_THROW(ProductState::parse("UU", 3), std::invalid_argument);
  EXPECT_THROW(ProductState::parse("bogus", 3), std::invalid_argument);
}

TEST(ProductState, RejectsOverlongBlochVector) {
  EXPECT_THROW(ProductState({Bloch{1.0, 1.0, 0.0}}), std::invalid_argument);
  const ProductState mixed({Bloch{0.1, 0.2, 0.3}});
  EXPECT_FALSE(mixed.is_pure());
}
