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
#include <random>
#include <vector>

#include "support.hpp"

namespace robcert {
namespace {

std::vector<Subset> all_but_one(std::size_t n) {
  std::vector<Subset> out;
  for (Label skip = 0; skip < n; ++skip) {
    Subset s;
    for (Label x = 0; x < n; ++x) {
      if (x != skip) s.push_back(x);
    }
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(IsMaximalRobinsonian, Examples) {
  const auto r = gen::robinson(6, 3);
  EXPECT_TRUE(is_maximal_robinsonian(r, r.labels()));
  EXPECT_FALSE(is_maximal_robinsonian(r, std::vector<Label>{0, 1, 2, 3, 4}));
  const auto claw = adjacency_matrix(testing::claw());
  EXPECT_TRUE(is_maximal_robinsonian(claw, std::vector<Label>{0, 1, 2}));
  EXPECT_TRUE(is_maximal_robinsonian(claw, std::vector<Label>{1, 2, 3}));
  EXPECT_FALSE(is_maximal_robinsonian(claw, claw.labels()));
  EXPECT_THROW(is_maximal_robinsonian(claw, std::vector<Label>{0, 8}), InvalidArgument);
}

TEST(IsMinimalWaCycle, Examples) {
  const auto claw = adjacency_matrix(testing::claw());
  EXPECT_TRUE(is_minimal_wa_cycle(claw, claw.labels()));
  EXPECT_FALSE(is_minimal_wa_cycle(claw, std::vector<Label>{0, 1, 2}));
  const auto c4 = adjacency_matrix(gen::cycle_graph(4));
  EXPECT_TRUE(is_minimal_wa_cycle(c4, c4.labels()));
  const auto r = gen::robinson(6, 4);
  EXPECT_FALSE(is_minimal_wa_cycle(r, r.labels()));
  EXPECT_FALSE(is_minimal_wa_cycle(r, std::vector<Label>{1, 3, 5}));
  EXPECT_THROW(is_minimal_wa_cycle(r, std::vector<Label>{1, 3}), InvalidArgument);
}

TEST(EnumerateFamilies, RobinsonMatrix) {
  const auto r = gen::robinson(5, 8);
  const auto f = enumerate_families(r);
  EXPECT_EQ(f.maximal_robinsonian, (std::vector<Subset>{r.labels()}));
  EXPECT_EQ(f.minimal_deletions, (std::vector<Subset>{Subset{}}));
  EXPECT_TRUE(f.minimal_cycles.empty());
}

TEST(EnumerateFamilies, ClawAndFourCycle) {
  // Every three-element subset of either graph induces a Robinsonian matrix
  // and the whole vertex set does not.
  for (const Graph& g : {testing::claw(), gen::cycle_graph(4)}) {
    const auto a = adjacency_matrix(g);
    const auto f = enumerate_families(a);
    auto maximal = f.maximal_robinsonian;
    std::sort(maximal.begin(), maximal.end());
    EXPECT_EQ(maximal, all_but_one(4));
    EXPECT_EQ(f.minimal_deletions, (std::vector<Subset>{{0}, {1}, {2}, {3}}));
    EXPECT_EQ(f.minimal_cycles, (std::vector<Subset>{{0, 1, 2, 3}}));
    for (const auto& s : f.maximal_robinsonian) {
      EXPECT_TRUE(is_maximal_robinsonian(a, s));
    }
    for (const auto& c : f.minimal_cycles) {
      EXPECT_TRUE(is_minimal_wa_cycle(a, c));
    }
  }
}

TEST(EnumerateFamilies, SizeBound) {
  const auto a = gen::random_matrix(6, 1);
  EXPECT_THROW(enumerate_families(a, 5), InvalidArgument);
  EXPECT_NO_THROW(enumerate_families(a, 6));
}

TEST(EnumerateFamilies, MembershipMatchesOraclesOnAllSubsets) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const std::size_t n = 4 + seed % 3;
    const auto a = (seed % 2) ? gen::random_matrix(n, seed, 2) : gen::perturbed(n, seed, 2);
    const auto f = enumerate_families(a);
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      Subset s;
      for (Label x = 0; x < n; ++x) {
        if (mask >> x & 1U) s.push_back(x);
      }
      const bool in_i = std::find(f.maximal_robinsonian.begin(), f.maximal_robinsonian.end(), s) !=
                        f.maximal_robinsonian.end();
      EXPECT_EQ(in_i, is_maximal_robinsonian(a, s));
      if (s.size() >= 3) {
        const bool in_c = std::find(f.minimal_cycles.begin(), f.minimal_cycles.end(), s) != f.minimal_cycles.end();
        EXPECT_EQ(in_c, is_minimal_wa_cycle(a, s));
      }
    }
  }
}

TEST(GreedyCore, Examples) {
  const auto r = gen::robinson(7, 2);
  EXPECT_EQ(greedy_robinsonian_core(r), r.labels());
  const auto claw = adjacency_matrix(testing::claw());
  const auto core = greedy_robinsonian_core(claw);
  EXPECT_EQ(core.size(), 3U);
  EXPECT_TRUE(is_robinsonian(certify(restrict(claw, core))));
}

TEST(GreedyCore, AlwaysRobinsonian) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto a = gen::random_matrix(5 + seed % 10, seed, 3);
    const auto core = greedy_robinsonian_core(a);
    EXPECT_TRUE(is_robinsonian_subset(a, core));
    if (a.size() <= 9) {
      // no larger Robinsonian subset exists than the largest member of I_A
      const auto f = enumerate_families(a);
      std::size_t best = 0;
      for (const auto& s : f.maximal_robinsonian) best = std::max(best, s.size());
      EXPECT_LE(core.size(), best);
    }
  }
}

}  // namespace
}  // namespace robcert
