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
#include <variant>
#include <vector>

#include "support.hpp"

namespace robcert {
namespace {

Graph graph_from_mask(std::size_t n, unsigned mask) {
  Graph g(n);
  unsigned bit = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++bit) {
      if (mask >> bit & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

TEST(Graph, RejectsLoopsAndDuplicates) {
  Graph g(3);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), InvalidArgument);
  EXPECT_THROW(g.add_edge(2, 2), InvalidArgument);
  EXPECT_THROW(g.add_edge(0, 3), InvalidArgument);
  EXPECT_EQ(g.edges(), (std::vector<std::pair<Vertex, Vertex>>{{0, 1}}));
}

TEST(AdjacencyMatrix, Entries) {
  const auto empty = adjacency_matrix(Graph(3));
  const auto zero = EntryValue::from_rational(0);
  const auto one = EntryValue::from_rational(1);
  EXPECT_EQ(empty.entry(0, 2), zero);
  Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(adjacency_matrix(k3).entry(0, 2), one);
  const auto p3 = adjacency_matrix(gen::path_graph(3));
  EXPECT_EQ(p3.entry(0, 1), one);
  EXPECT_EQ(p3.entry(1, 2), one);
  EXPECT_EQ(p3.entry(0, 2), zero);
}

TEST(FindGraphObstruction, NamedGraphs) {
  const auto c4 = find_graph_obstruction(gen::cycle_graph(4));
  ASSERT_TRUE(c4 && std::holds_alternative<ChordlessCycle>(*c4));
  EXPECT_EQ(std::get<ChordlessCycle>(*c4).cycle.size(), 4U);

  const auto claw = find_graph_obstruction(testing::claw());
  ASSERT_TRUE(claw && std::holds_alternative<Claw>(*claw));
  EXPECT_EQ(std::get<Claw>(*claw), (Claw{0, {1, 2, 3}}));

  const auto c6 = find_graph_obstruction(gen::cycle_graph(6));
  ASSERT_TRUE(c6 && std::holds_alternative<ChordlessCycle>(*c6));
  EXPECT_EQ(std::get<ChordlessCycle>(*c6).cycle.size(), 6U);

  const auto net = find_graph_obstruction(gen::net_graph());
  ASSERT_TRUE(net && std::holds_alternative<AsteroidalTriple>(*net));
  const auto& at = std::get<AsteroidalTriple>(*net);
  EXPECT_EQ((Triple{at.x, at.y, at.z}), (Triple{3, 4, 5}));
  EXPECT_TRUE(verify_obstruction(gen::net_graph(), *net));

  for (std::size_t n = 1; n <= 7; ++n) {

    EXPECT_FALSE(find_graph_obstruction(gen::path_graph(n)).has_value());

  }
}

TEST(VerifyObstruction, RejectsBrokenWitnesses) {
  const auto c5 = gen::cycle_graph(5);
  EXPECT_TRUE(verify_obstruction(c5, ChordlessCycle{{0, 1, 2, 3, 4}}));
  EXPECT_FALSE(verify_obstruction(c5, ChordlessCycle{{0, 1, 2, 3}}));
  EXPECT_FALSE(verify_obstruction(c5, ChordlessCycle{{0, 1, 2}}));
  EXPECT_FALSE(verify_obstruction(testing::claw(), Claw{1, {0, 2, 3}}));
  EXPECT_FALSE(verify_obstruction(gen::net_graph(), AsteroidalTriple{3, 4, 5, {3, 0, 1, 4}, {3, 0, 2, 5}, {4, 1, 5}}));
  EXPECT_FALSE(verify_obstruction(gen::path_graph(5), AsteroidalTriple{0, 2, 4, {0, 1, 2}, {0, 1, 2, 3, 4}, {2, 3, 4}}));
}

TEST(ObstructionToWat, NamedGraphs) {
  const auto c4 = gen::cycle_graph(4);
  const auto w = obstruction_to_wat(c4, ChordlessCycle{{0, 1, 2, 3}});
  EXPECT_EQ(w.triple(), (Triple{0, 1, 3}));
  EXPECT_EQ(w.yz.nodes, (std::vector<Label>{1, 2, 3}));
  EXPECT_TRUE(verify_wat(adjacency_matrix(c4), w).valid());

  const auto claw = obstruction_to_wat(testing::claw(), Claw{0, {1, 2, 3}});
  EXPECT_EQ(claw.triple(), (Triple{1, 2, 3}));
  EXPECT_EQ(claw.xz.nodes, (std::vector<Label>{1, 0, 3}));

  const auto net = gen::net_graph();
  const AsteroidalTriple at{3, 4, 5, {3, 0, 1, 4}, {3, 0, 2, 5}, {4, 1, 2, 5}};
  ASSERT_TRUE(verify_obstruction(net, at));
  EXPECT_TRUE(verify_wat(adjacency_matrix(net), obstruction_to_wat(net, at)).valid());

  EXPECT_THROW(obstruction_to_wat(c4, Claw{0, {1, 2, 3}}), InvalidArgument);
}

TEST(WatToObstruction, NamedGraphs) {
  const auto claw = testing::claw();
  const auto o = wat_to_obstruction(claw, *make_wat(adjacency_matrix(claw), 1, 2, 3));
  ASSERT_TRUE(std::holds_alternative<Claw>(o));
  EXPECT_TRUE(verify_obstruction(claw, o));

  const auto c5 = gen::cycle_graph(5);
  const auto wc = find_one_wat(adjacency_matrix(c5));
  ASSERT_TRUE(wc.has_value());
  const auto oc = wat_to_obstruction(c5, *wc);
  ASSERT_TRUE(std::holds_alternative<ChordlessCycle>(oc));
  EXPECT_EQ(std::get<ChordlessCycle>(oc).cycle.size(), 5U);
  EXPECT_TRUE(verify_obstruction(c5, oc));

  const auto net = gen::net_graph();
  const auto on = wat_to_obstruction(net, *make_wat(adjacency_matrix(net), 3, 4, 5));
  ASSERT_TRUE(std::holds_alternative<AsteroidalTriple>(on));
  EXPECT_TRUE(verify_obstruction(net, on));

  EXPECT_THROW(wat_to_obstruction(gen::path_graph(4), *make_wat(adjacency_matrix(claw), 1, 2, 3)), InvalidArgument);
}

TEST(IsUnitInterval, NamedGraphs) {
  const auto p4 = gen::path_graph(4);
  const auto v = is_unit_interval(p4);
  ASSERT_TRUE(std::holds_alternative<RobinsonOrdering>(v));
  auto order = std::get<RobinsonOrdering>(v).order;
  if (order.front() != 0) std::reverse(order.begin(), order.end());
  EXPECT_EQ(order, (Ordering{0, 1, 2, 3}));

  const auto k13 = is_unit_interval(testing::claw());
  ASSERT_TRUE(std::holds_alternative<GraphObstruction>(k13));
  EXPECT_TRUE(std::holds_alternative<Claw>(std::get<GraphObstruction>(k13)));

  const auto c6 = is_unit_interval(gen::cycle_graph(6));
  ASSERT_TRUE(std::holds_alternative<GraphObstruction>(c6));
  EXPECT_TRUE(std::holds_alternative<ChordlessCycle>(std::get<GraphObstruction>(c6)));
}

TEST(IsUnitInterval, ExhaustiveUpToFiveVertices) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const unsigned pairs = static_cast<unsigned>(n * (n - 1) / 2);
    for (unsigned mask = 0; mask < (1U << pairs); ++mask) {
      const Graph g = graph_from_mask(n, mask);
      const auto direct = find_graph_obstruction(g);
      const auto verdict = is_unit_interval(g);
      const bool unit = std::holds_alternative<RobinsonOrdering>(verdict);
      ASSERT_EQ(unit, !direct.has_value()) << "n=" << n << " mask=" << mask;
      if (unit) {
        EXPECT_TRUE(satisfies_three_vertex_condition(g, std::get<RobinsonOrdering>(verdict).order));
        continue;
      }
      EXPECT_TRUE(verify_obstruction(g, std::get<GraphObstruction>(verdict)));
      EXPECT_TRUE(verify_obstruction(g, *direct));
      const auto w = obstruction_to_wat(g, *direct);
      EXPECT_TRUE(verify_obstruction(g, wat_to_obstruction(g, w)));
    }
  }
}

TEST(ThreeVertexCondition, Examples) {
  const auto p3 = gen::path_graph(3);
  EXPECT_TRUE(satisfies_three_vertex_condition(p3, {0, 1, 2}));
  EXPECT_FALSE(satisfies_three_vertex_condition(p3, {0, 2, 1}));
  EXPECT_TRUE(satisfies_three_vertex_condition(Graph(3), {2, 0, 1}));
}

}  // namespace
}  // namespace robcert
