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

#include <sstream>

#include "support.hpp"

namespace robcert {
namespace {

std::string text(const SymMatrix& a) {
  std::ostringstream out;
  write_matrix(out, a);
  return out.str();
}

TEST(Gen, RobinsonIsRobinsonian) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto a = gen::robinson(1 + seed % 15, seed);
    EXPECT_TRUE(is_robinsonian(certify(a)));
  }
}

TEST(Gen, Deterministic) {
  EXPECT_EQ(text(gen::robinson(8, 5)), text(gen::robinson(8, 5)));
  EXPECT_EQ(text(gen::perturbed(8, 5)), text(gen::perturbed(8, 5)));
  EXPECT_EQ(text(gen::random_matrix(8, 5)), text(gen::random_matrix(8, 5)));
  EXPECT_NE(text(gen::random_matrix(8, 5)), text(gen::random_matrix(8, 6)));
}

TEST(Gen, RandomEntriesInRange) {
  const auto a = gen::random_matrix(10, 3, 2);
  for (std::size_t i = 0; i < 10; ++i) {
    for (std::size_t j = i + 1; j < 10; ++j) {
      EXPECT_GE(a.value(i, j).base(), 0);
      EXPECT_LE(a.value(i, j).base(), 2);
    }
  }
}

TEST(Gen, NamedGraphs) {
  EXPECT_EQ(gen::named_graph("path", 5).edges().size(), 4U);
  EXPECT_EQ(gen::named_graph("cycle", 5).edges().size(), 5U);
  const auto claw = gen::named_graph("claw", 4);
  const auto o = find_graph_obstruction(claw);
  ASSERT_TRUE(o.has_value());
  EXPECT_TRUE(std::holds_alternative<Claw>(*o));
  EXPECT_EQ(gen::named_graph("net", 6).edges().size(), 6U);
  EXPECT_THROW(gen::named_graph("net", 5), InvalidArgument);
  EXPECT_THROW(gen::named_graph("wheel", 5), InvalidArgument);
  EXPECT_THROW(gen::named_graph("cycle", 2), InvalidArgument);
}

}  // namespace
}  // namespace robcert
