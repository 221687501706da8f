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


#include "octoclif/barred_ops.hpp"

#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace octoclif;

namespace {

OctonionNum e(std::size_t i) { return OctonionNum::unit(i); }
IntMatrix E(std::size_t i) { return left_matrix(Algebra::O, i); }
IntMatrix Rm(std::size_t i) { return right_matrix(Algebra::O, i); }

std::vector<OperatorWord> short_words() {
  std::vector<Factor> singles;
  for (int i = 1; i <= 7; ++i) {
    singles.push_back(L(i));
    singles.push_back(R(i));
  }
  std::vector<OperatorWord> out;
  for (const auto& f : singles) out.push_back({f});
  for (const auto& f : singles)
    for (const auto& g : singles) out.push_back({f, g});
  return out;
}

}  // namespace

TEST(BarredOps, FactorIndexRange) {
  EXPECT_THROW(L(0), std::out_of_range);
  EXPECT_THROW(R(8), std::out_of_range);
  EXPECT_NO_THROW(L(7));
}

TEST(BarredOps, ParseAndPrint) {
  const OperatorWord w = parse_word("L2.L1.R4");
  EXPECT_EQ(w, (OperatorWord{L(2), L(1), R(4)}));
  EXPECT_EQ(to_string(w), "L2.L1.R4");
  EXPECT_EQ(parse_word(""), OperatorWord{});
  EXPECT_EQ(parse_word(to_string(l_op(3, 5))), l_op(3, 5));
  for (const char* bad : {"L8", "L0", "X1", "L", "L1..R2", "L12", "R4.", ".L1"})
    EXPECT_THROW(parse_word(bad), std::invalid_argument) << bad;
}

TEST(BarredOps, SingleFactorTranslation) {
  for (int i = 1; i <= 7; ++i) {
    EXPECT_EQ(translate({L(i)}), E(static_cast<std::size_t>(i)));
    EXPECT_EQ(translate({R(i)}), Rm(static_cast<std::size_t>(i)));
  }
  EXPECT_EQ(translate(OperatorWord{}), IntMatrix::identity(8));
}

TEST(BarredOps, RightAndLeftPriorityOperators) {
  EXPECT_EQ(translate(r_op(1, 4)), E(1) * Rm(4));
  EXPECT_EQ(translate(l_op(1, 4)), Rm(4) * E(1));
  EXPECT_NE(translate(r_op(1, 4)), translate(l_op(1, 4)));
  for (int i = 1; i <= 7; ++i) EXPECT_EQ(translate(r_op(i, i)), translate(l_op(i, i)));
  EXPECT_THROW(r_op(1, 9), std::out_of_range);
}

TEST(BarredOps, RightFactorsAreHoistedInnermost) {
  const IntMatrix lp1 = translate({L(2), L(1), R(4)});
  const IntMatrix lp2 = translate({L(1), R(4), L(2)});
  EXPECT_EQ(lp1, E(2) * E(1) * Rm(4));
  EXPECT_EQ(lp2, E(1) * E(2) * Rm(4));
  EXPECT_NE(lp1, lp2);
}

TEST(BarredOps, ApplyExamples) {
  EXPECT_EQ(evaluate(OperatorWord{L(1), R(2), L(4)}, e(0)), e(7));
  EXPECT_EQ(evaluate(OperatorWord{L(1), R(2), L(4)}, e(0)), e(1) * (e(4) * (e(0) * e(2))));
  EXPECT_EQ(evaluate(OperatorWord{L(3)}, e(3)), -e(0));
  EXPECT_EQ(evaluate(OperatorWord{L(4), L(1), R(2)}, e(5)), e(4) * (e(1) * (e(5) * e(2))));
}

TEST(BarredOps, LeftPriorityMeaning) {
  oracle::RationalGen gen(31);
  for (int n = 0; n < 10; ++n) {
    const auto g = gen.number<Algebra::O>();
    EXPECT_EQ(evaluate(l_op(2, 5), g), (e(2) * g) * e(5));
    EXPECT_EQ(evaluate(r_op(2, 5), g), e(2) * (g * e(5)));
    EXPECT_EQ(evaluate(r_op(1, 1), g), evaluate(l_op(1, 1), g));
  }
}

TEST(BarredOps, MatrixPathEqualsNestedProducts) {
  const auto words = short_words();
  ASSERT_EQ(words.size(), 14u + 196u);
  oracle::RationalGen gen(17);
  std::vector<OctonionNum> samples;
  for (std::size_t j = 0; j < 8; ++j) samples.push_back(e(j));
  for (int n = 0; n < 3; ++n) samples.push_back(gen.number<Algebra::O>());
  for (RightOrder order : {RightOrder::Reading, RightOrder::Reversed})
    for (const auto& w : words)
      for (const auto& g : samples)
        ASSERT_EQ(evaluate(w, g, order), unembed<Algebra::O>(translate(w, Algebra::O, order) * embed(g)))
            << to_string(w);
}

TEST(BarredOps, MultipleRightFactorOrdering) {
  const OperatorWord w{R(1), R(2)};
  EXPECT_EQ(translate(w), Rm(1) * Rm(2));
  EXPECT_EQ(translate(w, Algebra::O, RightOrder::Reversed), Rm(2) * Rm(1));
  // (g e2) e1 versus (g e1) e2
  EXPECT_EQ(evaluate(w, e(0)), (e(0) * e(2)) * e(1));
}

TEST(BarredOps, PriorityAnticommutator) {
  EXPECT_TRUE(anticommutator(r_op(1, 2), {L(4)}).is_zero());
  EXPECT_TRUE(anticommutator({L(2)}, {L(3)}).is_zero());
  EXPECT_EQ(anticommutator({L(2)}, {L(2)}), -2 * IntMatrix::identity(8));
}

TEST(BarredOps, NaiveAnticommutatorFailsWherePriorityHolds) {
  const OperatorWord g0{L(2)}, g8 = r_op(1, 3);
  EXPECT_FALSE(naive_anticommutator(g0, g8).is_zero());
  EXPECT_TRUE(anticommutator(g0, g8).is_zero());
  EXPECT_EQ(anticommutator(Semantics::Naive, g0, g8), naive_anticommutator(g0, g8));
}

TEST(BarredOps, NaiveAndPriorityAgreeOnPureLeftWords) {
  for (int i = 1; i <= 7; ++i)
    for (int j = 1; j <= 7; ++j) {
      const OperatorWord a{L(i)}, b{L(j), L(i % 7 + 1)};
      EXPECT_EQ(naive_anticommutator(a, b), anticommutator(a, b));
    }
}

TEST(BarredOps, ConcatenationIsAssociative) {
  const OperatorWord a{L(1)}, b{R(2), L(3)}, c{R(4)};
  EXPECT_EQ((a + b) + c, a + (b + c));
  EXPECT_EQ((a + b).size(), 3u);
}

TEST(BarredOps, QuaternionWords) {
  EXPECT_EQ(translate({L(1), R(2)}, Algebra::H), mixed_matrix(1, 2));
  EXPECT_THROW(translate({L(5)}, Algebra::H), std::out_of_range);
}

TEST(BarredOps, DegreesOfFreedom) {
  const DofAudit d = dof_audit();
  EXPECT_EQ(d.barred_rank, 63u);
  EXPECT_EQ(d.left_sector, 64u);
  EXPECT_EQ(d.right_sector, 64u);
  EXPECT_EQ(d.total(), 128u);
}
