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


#include "octoclif/rank.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"

using namespace octoclif;

TEST(Rank, EmptyAndDuplicates) {
  EXPECT_EQ(span_rank(std::vector<IntMatrix>{}), 0u);
  EXPECT_EQ(span_rank(std::vector<IntMatrix>{IntMatrix::identity(4), IntMatrix::identity(4)}), 1u);
  EXPECT_EQ(span_rank(std::vector<IntMatrix>{IntMatrix::zero(2)}), 0u);
}

TEST(Rank, MixedOrdersRejected) {
  EXPECT_THROW(span_rank(std::vector<IntMatrix>{IntMatrix::identity(2), IntMatrix::identity(4)}),
               std::invalid_argument);
}

TEST(Rank, RandomRowsAgreeWithModularOracle) {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> entry(-2, 2), dims(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = dims(rng), cols = dims(rng);
    IntRows m(static_cast<std::size_t>(rows), std::vector<std::int64_t>(static_cast<std::size_t>(cols)));
    for (auto& r : m)
      for (auto& x : r) x = entry(rng);
    // Force some dependence.
    if (rows > 2) m[2] = m[0];
    EXPECT_EQ(rank_of_rows(m), oracle::rank_mod_p(m)) << "trial " << trial;
  }
}

TEST(Rank, LargeMinorsFallBackToBigIntegers) {
  // Entries near 2^40 overflow the first 2x2 minor in int64.
  const std::int64_t big = std::int64_t{1} << 40;
  IntRows m{{big, big + 3, 1}, {big + 1, big, 2}, {2 * big + 1, 2 * big + 3, 3}};
  EXPECT_EQ(rank_of_rows(m), 2u);
  m[2][2] = 6;
  EXPECT_EQ(rank_of_rows(m), 3u);
}

TEST(Rank, NullSpace) {
  // x + y + z = 0, x - y = 0
  const IntRows a{{1, 1, 1}, {1, -1, 0}};
  const auto ker = null_space(a, 3);
  ASSERT_EQ(ker.size(), 1u);
  for (const auto& row : a) {
    Scalar s = 0;
    for (std::size_t j = 0; j < 3; ++j) s += Scalar(row[j]) * ker[0][j];
    EXPECT_EQ(s, 0);
  }
  EXPECT_TRUE(null_space(IntRows{{1, 0}, {0, 1}}, 2).empty());
}

TEST(Rank, NullSpaceDimensionIsColumnsMinusRank) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> entry(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    IntRows m(6, std::vector<std::int64_t>(9));
    for (auto& r : m)
      for (auto& x : r) x = entry(rng);
    EXPECT_EQ(null_space(m, 9).size(), 9 - rank_of_rows(m));
  }
}

TEST(Rank, IncrementalSpanMatchesBatchRank) {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> entry(-1, 1);
  IntRows rows;
  IncrementalSpan span(10);
  for (int n = 0; n < 14; ++n) {
    std::vector<std::int64_t> v(10);
    for (auto& x : v) x = entry(rng);
    if (n % 4 == 3) v = rows.front();
    rows.push_back(v);
    span.insert(v);
    EXPECT_EQ(span.rank(), rank_of_rows(rows));
    EXPECT_TRUE(span.contains(v));
  }
}

TEST(Rank, AssociativeClosureOfPauliMatricesIsFull) {
  const IntMatrix s1{{0, 1}, {1, 0}}, s3{{1, 0}, {0, -1}};
  EXPECT_EQ(associative_closure_rank({s1, s3}), 4u);
  EXPECT_EQ(associative_closure_rank({s3}), 2u);
}

TEST(Rank, CommutatorClosure) {
  const IntMatrix s1{{0, 1}, {1, 0}}, s3{{1, 0}, {0, -1}};
  EXPECT_FALSE(closed_under_commutator({s1, s3}));  // [s1,s3] = -i s2 not in span
  EXPECT_TRUE(closed_under_commutator({s1, s3, commutator(s1, s3)}));
}
