// Copyright 2026 The octoclif Authors
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


#include "octoclif/number.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace octoclif;

namespace {

OctonionNum e(std::size_t i) { return OctonionNum::unit(i); }

template <Algebra A>
void expect_composition(unsigned seed) {
  oracle::RationalGen gen(seed);
  for (int n = 0; n < 50; ++n) {
    const auto x = gen.number<A>(), y = gen.number<A>();
    EXPECT_EQ(norm_sq(x * y), norm_sq(x) * norm_sq(y));
    EXPECT_EQ(conj(x * y), conj(y) * conj(x));
    EXPECT_EQ(norm_sq(x), (x * conj(x))[0]);
  }
}

}  // namespace

TEST(Number, OctonionUnitProducts) {
  EXPECT_EQ(e(1) * e(2), e(3));
  EXPECT_EQ(e(1) * e(6), -e(7));
  EXPECT_EQ(e(5) * e(5), -e(0));
}

TEST(Number, RealUnitIsIdentity) {
  oracle::RationalGen gen(1);
  const auto g = gen.number<Algebra::O>();
  EXPECT_EQ(e(0) * g, g);
  EXPECT_EQ(g * e(0), g);
}

TEST(Number, BasisTableMatchesDefinition) {
  for (Algebra a : {Algebra::H, Algebra::O}) {
    const int n = static_cast<int>(dimension(a));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto want = oracle::unit_product(a, i, j);
        if (a == Algebra::O) {
          const auto got = e(static_cast<std::size_t>(i)) * e(static_cast<std::size_t>(j));
          for (int k = 0; k < n; ++k) EXPECT_EQ(got[static_cast<std::size_t>(k)], want[static_cast<std::size_t>(k)]);
        } else {
          const auto got =
              QuaternionNum::unit(static_cast<std::size_t>(i)) * QuaternionNum::unit(static_cast<std::size_t>(j));
          for (int k = 0; k < n; ++k) EXPECT_EQ(got[static_cast<std::size_t>(k)], want[static_cast<std::size_t>(k)]);
        }
      }
  }
}

TEST(Number, ComplexUnitSquaresToMinusOne) {
  EXPECT_EQ(ComplexNum::unit(1) * ComplexNum::unit(1), -ComplexNum::unit(0));
}

TEST(Number, QuaternionProductMatchesHamiltonFormula) {
  oracle::RationalGen gen(7);
  for (int n = 0; n < 100; ++n) {
    const auto p = gen.number<Algebra::H>(), q = gen.number<Algebra::H>();
    EXPECT_EQ(p * q, oracle::hamilton(p, q));
  }
}

TEST(Number, Conjugate) {
  const ComplexNum z(std::array<Scalar, 2>{3, 2});
  EXPECT_EQ(conj(z), ComplexNum(std::array<Scalar, 2>{3, -2}));
}

TEST(Number, NormSquared) {
  EXPECT_EQ(norm_sq(e(5)), 1);
  EXPECT_EQ(norm_sq(e(0) + e(1) + e(2)), 3);
  EXPECT_EQ(norm_sq(OctonionNum::real(Scalar(1) / 2)), Scalar(1) / 4);
}

TEST(Number, CompositionAndConjugationProperties) {
  expect_composition<Algebra::C>(11);
  expect_composition<Algebra::H>(12);
  expect_composition<Algebra::O>(13);
}

TEST(Number, Associator) {
  EXPECT_TRUE(associator(QuaternionNum::unit(1), QuaternionNum::unit(2), QuaternionNum::unit(3)).is_zero());
  EXPECT_EQ(associator(e(1), e(2), e(4)), Scalar(2) * e(7));
}

TEST(Number, AssociatorVanishesOnAssociativeAlgebras) {
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b)
      for (std::size_t c = 0; c < 4; ++c)
        EXPECT_TRUE(associator(QuaternionNum::unit(a), QuaternionNum::unit(b), QuaternionNum::unit(c)).is_zero());
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c)
        EXPECT_TRUE(associator(ComplexNum::unit(a), ComplexNum::unit(b), ComplexNum::unit(c)).is_zero());
}

TEST(Number, OctonionsAreAlternativeNotAssociative) {
  int nonzero = 0;
  for (std::size_t a = 0; a < 8; ++a)
    for (std::size_t b = 0; b < 8; ++b) {
      EXPECT_TRUE(associator(e(a), e(a), e(b)).is_zero());
      EXPECT_TRUE(associator(e(b), e(a), e(a)).is_zero());
      for (std::size_t c = 0; c < 8; ++c) nonzero += !associator(e(a), e(b), e(c)).is_zero();
    }
  EXPECT_GT(nonzero, 0);
}

TEST(Number, AlternativeOnRandomElements) {
  oracle::RationalGen gen(5);
  for (int n = 0; n < 30; ++n) {
    const auto a = gen.number<Algebra::O>(), b = gen.number<Algebra::O>();
    EXPECT_TRUE(associator(a, a, b).is_zero());
    EXPECT_TRUE(associator(b, a, a).is_zero());
  }
}

TEST(Number, Commutator) {
  EXPECT_EQ(commutator(e(1), e(2)), Scalar(2) * e(3));
  EXPECT_TRUE(commutator(e(4), e(4)).is_zero());
  EXPECT_EQ(commutator(e(2), e(5)), Scalar(2) * e(7));
}

TEST(Number, CommutatorIsTwiceEpsilon) {
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      OctonionNum want;
      for (int k = 1; k <= 7; ++k) want[static_cast<std::size_t>(k)] = 2 * oracle::octonion_epsilon(i, j, k);
      EXPECT_EQ(commutator(e(static_cast<std::size_t>(i)), e(static_cast<std::size_t>(j))), want);
    }
}

TEST(Number, UnitOutOfRange) { EXPECT_THROW(OctonionNum::unit(8), std::out_of_range); }
