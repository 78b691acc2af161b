// Copyright 2026 The robcert Authors
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
#include <numeric>
#include <random>
#include <vector>

#include "support.hpp"

namespace robcert {
namespace {

using testing::Table;

SymMatrix three(long long xy, long long xz, long long yz) {
  return SymMatrix::from_integers({{0, xy, xz}, {xy, 0, yz}, {xz, yz, 0}});
}

TEST(RobinsonTriple, DirectEvaluation) {
  EXPECT_TRUE(is_robinson_triple(three(1, 0, 2), 0, 1, 2));
  EXPECT_FALSE(is_robinson_triple(three(1, 2, 2), 0, 1, 2));
  const auto c = SymMatrix::from_integers(testing::constant_table(4, 5));
  for (Label x = 0; x < 4; ++x) {
    for (Label y = 0; y < 4; ++y) {
      for (Label z = 0; z < 4; ++z) {
        if (x != y && y != z && x != z) {
          EXPECT_TRUE(is_robinson_triple(c, x, y, z));
        }
      }
    }
  }
}

TEST(RobinsonTriple, RejectsBadArguments) {
  const auto a = three(1, 0, 2);
  EXPECT_THROW(is_robinson_triple(a, 0, 0, 2), InvalidArgument);
  EXPECT_THROW(is_robinson_triple(a, 0, 1, 7), InvalidArgument);
}

TEST(SymMatrix, RejectsAsymmetryAndRaggedRows) {
  EXPECT_THROW(SymMatrix::from_integers({{0, 1}, {2, 0}}), InvalidArgument);
  EXPECT_THROW(SymMatrix::from_integers({{0, 1}, {1}}), InvalidArgument);
  EXPECT_THROW(SymMatrix::from_integers({}), InvalidArgument);
}

TEST(SymMatrix, DiagonalIsIgnored) {
  const auto a = SymMatrix::from_integers({{9, 1}, {1, -4}});
  const auto b = SymMatrix::from_integers({{0, 1}, {1, 0}});
  EXPECT_EQ(a, b);
  EXPECT_THROW(a.entry(0, 0), InvalidArgument);
}

TEST(VerifyOrdering, SmallAndConstantMatricesAlwaysPass) {
  const auto one = SymMatrix::from_integers({{0}});
  EXPECT_TRUE(verify_robinson_ordering(one, std::vector<Label>{0}).valid());
  const auto two = SymMatrix::from_integers({{0, 3}, {3, 0}});
  EXPECT_TRUE(verify_robinson_ordering(two, std::vector<Label>{1, 0}).valid());
  const auto c = SymMatrix::from_integers(testing::constant_table(5));
  std::vector<Label> order{3, 1, 4, 0, 2};
  EXPECT_TRUE(verify_robinson_ordering(c, order).valid());
}

TEST(VerifyOrdering, ClawHasNoRobinsonOrdering) {
  const auto a = adjacency_matrix(testing::claw());
  std::vector<Label> order{0, 1, 2, 3};
  int checked = 0;
  do {
    const auto verdict = verify_robinson_ordering(a, order);
    ASSERT_FALSE(verdict.valid());
    const auto [x, y, z] = *verdict.violation;
    EXPECT_FALSE(is_robinson_triple(a, x, y, z));
    EXPECT_LT(testing::index_of(order, x), testing::index_of(order, y));
    EXPECT_LT(testing::index_of(order, y), testing::index_of(order, z));
    ++checked;
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_EQ(checked, 24);
}

TEST(VerifyOrdering, RejectsNonPermutations) {
  const auto a = three(1, 0, 2);
  EXPECT_THROW(verify_robinson_ordering(a, std::vector<Label>{0, 1}), InvalidArgument);
  EXPECT_THROW(verify_robinson_ordering(a, std::vector<Label>{0, 1, 1}), InvalidArgument);
  EXPECT_THROW(verify_robinson_ordering(a, std::vector<Label>{0, 1, 5}), InvalidArgument);
}

TEST(VerifyOrdering, AgreesWithTripleDefinition) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Table t = testing::random_table(6, 2, rng);
    const auto a = SymMatrix::from_integers(t);
    std::vector<Label> order(6);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    const auto verdict = verify_robinson_ordering(a, order);
    EXPECT_EQ(verdict.valid(), testing::raw_is_robinson_order(t, order));
    if (!verdict.valid()) {
      const auto [x, y, z] = *verdict.violation;
      EXPECT_GT(t[x][z], std::min(t[x][y], t[y][z]));
    }
  }
}

TEST(Permute, IdentityAndInverse) {
  std::mt19937_64 rng(8);
  const auto a = SymMatrix::from_integers(testing::random_table(6, 3, rng));
  EXPECT_EQ(permute(a, identity_ordering(a)), a);
  std::vector<Label> sigma{4, 2, 0, 5, 1, 3};
  const auto b = permute(a, sigma);
  EXPECT_EQ(permute(b, a.labels()), a);
  for (Label x = 0; x < 6; ++x) {
    for (Label y = 0; y < 6; ++y) {
      if (x != y) {
        EXPECT_EQ(b.entry(x, y), a.entry(x, y));
      }
    }
  }
}

TEST(Permute, VerifyCommutesWithPermutation) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = SymMatrix::from_integers(testing::random_table(6, 2, rng));
    std::vector<Label> sigma(6);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const auto b = permute(a, sigma);
    EXPECT_EQ(verify_robinson_ordering(a, sigma).valid(), verify_robinson_ordering(b, identity_ordering(b)).valid());
  }
}

TEST(Restrict, FullSetAndSingleton) {
  std::mt19937_64 rng(4);
  const auto a = SymMatrix::from_integers(testing::random_table(5, 3, rng));
  EXPECT_EQ(restrict(a, a.labels()), a);
  const auto s = restrict(a, std::vector<Label>{3});
  EXPECT_EQ(s.size(), 1U);
  EXPECT_EQ(s.label(0), 3U);
  EXPECT_THROW(restrict(a, std::vector<Label>{}), InvalidArgument);
  EXPECT_THROW(restrict(a, std::vector<Label>{9}), InvalidArgument);
  EXPECT_THROW(restrict(a, std::vector<Label>{1, 1}), InvalidArgument);
}

TEST(Restrict, KeepsLabelsAndOrder) {
  std::mt19937_64 rng(9);
  const auto a = SymMatrix::from_integers(testing::random_table(6, 3, rng));
  const auto s = restrict(a, std::vector<Label>{5, 1, 3});
  EXPECT_EQ(s.labels(), (std::vector<Label>{1, 3, 5}));
  EXPECT_EQ(s.entry(1, 5), a.entry(1, 5));
}

TEST(Restrict, WatsOfSubmatrixAreWatsOfMatrix) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = SymMatrix::from_integers(testing::random_table(7, 2, rng));
    std::vector<Label> subset;
    for (Label x = 0; x < 7; ++x) {
      if (rng() % 3 != 0) subset.push_back(x);
    }
    if (subset.size() < 3) continue;
    for (const auto& w : enumerate_wats(restrict(a, subset))) {
      EXPECT_TRUE(verify_wat(a, w).valid());
    }
  }
}

TEST(Invariance, MonotoneMapKeepsVerdicts) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    const Table t = testing::random_table(5, 3, rng);
    Table u = t;
    for (auto& row : u) {
      for (auto& v : row) v = v * v * v - 7;  // strictly increasing on integers
    }
    const auto a = SymMatrix::from_integers(t);
    const auto b = SymMatrix::from_integers(u);
    std::vector<Label> order{0, 1, 2, 3, 4};
    std::shuffle(order.begin(), order.end(), rng);
    EXPECT_EQ(verify_robinson_ordering(a, order).valid(), verify_robinson_ordering(b, order).valid());
    EXPECT_EQ(is_robinson_triple(a, order[0], order[1], order[2]), is_robinson_triple(b, order[0], order[1], order[2]));
  }
}

TEST(Invariance, RelabelingConjugatesRobinsonOrderings) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = gen::perturbed(5, rng(), 1);
    std::vector<Label> sigma{0, 1, 2, 3, 4};
    std::shuffle(sigma.begin(), sigma.end(), rng);
    const auto b = permute(a, sigma);
    std::vector<Label> order{0, 1, 2, 3, 4};
    do {
      // The same ordering of elements is valid for both; b only lists them differently.
      EXPECT_EQ(verify_robinson_ordering(a, order).valid(), verify_robinson_ordering(b, order).valid());
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(SymMatrix, WithLowerRowRanksBelowEverything) {
  const auto a = three(1, 0, 2);
  std::vector<EntryValue> row{EntryValue::transformed(-1, EntryValue::from_rational(5)),
                              EntryValue::transformed(-2, EntryValue::from_rational(0)),
                              EntryValue::transformed(-1, EntryValue::from_rational(5))};
  const auto b = a.with_lower_row(9, row);
  EXPECT_EQ(b.size(), 4U);
  EXPECT_LT(b.entry(9, 1), b.entry(0, 2));
  EXPECT_LT(b.entry(9, 1), b.entry(9, 0));
  EXPECT_EQ(b.entry(9, 0), b.entry(9, 2));
  EXPECT_EQ(b.entry(1, 2), a.entry(1, 2));
  EXPECT_EQ(b.max_generation(), 1U);
  EXPECT_THROW(a.with_lower_row(9, std::vector<EntryValue>(3, EntryValue::from_rational(7))), InvalidArgument);
  EXPECT_THROW(a.with_lower_row(0, row), InvalidArgument);
}

}  // namespace
}  // namespace robcert
