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

#include <random>
#include <vector>

#include "support.hpp"

namespace robcert {
namespace {

TEST(BruteForce, ConstantMatrix) {
  const auto v = brute_force_certify(SymMatrix::from_integers(testing::constant_table(3)));
  EXPECT_TRUE(v.robinsonian);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_TRUE(v.all_wats.empty());
}

TEST(BruteForce, Claw) {
  const auto v = brute_force_certify(adjacency_matrix(testing::claw()));
  EXPECT_FALSE(v.robinsonian);
  EXPECT_FALSE(v.witness.has_value());
  EXPECT_EQ(v.all_wats, (std::vector<Triple>{{1, 2, 3}}));
}

TEST(BruteForce, SizeBound) {
  EXPECT_THROW(brute_force_certify(gen::random_matrix(kOracleMaxSize + 1, 0)), InvalidArgument);
}

TEST(BruteForce, WitnessAndWatsAgreeWithRawDefinitions) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const auto t = testing::random_table(n, 2, rng);
    const auto v = brute_force_certify(SymMatrix::from_integers(t));
    EXPECT_EQ(v.all_wats, testing::raw_wats(t));
    if (v.witness) {
      EXPECT_TRUE(testing::raw_is_robinson_order(t, *v.witness));  // no WAT exactly when some ordering works
    }
    EXPECT_EQ(v.robinsonian, v.all_wats.empty());
  }
}

TEST(BruteForce, AgreesWithCertifyOnSixBySix) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = SymMatrix::from_integers(testing::random_table(6, 2, rng));
    ASSERT_EQ(brute_force_certify(a).robinsonian, is_robinsonian(certify(a)));
  }
}

}  // namespace
}  // namespace robcert
