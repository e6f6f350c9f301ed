// Copyright 2026 The clusterdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "clusterdist/graph.h"

#include <algorithm>
#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace clusterdist {
namespace {

using ::testing::ElementsAre;
using ::testing::IsEmpty;

std::vector<VertexId> as_vector(std::span<const VertexId> s) { return {s.begin(), s.end()}; }

TEST(GraphBuildTest, PathGraph) {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}};
  const Graph g = Graph::build(3, edges);
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degree(0), 1u);
  EXPECT_EQ(g.degree(1), 2u);
  EXPECT_EQ(g.degree(2), 1u);
  EXPECT_THAT(as_vector(g.neighbors(1)), ElementsAre(0, 2));
}

TEST(GraphBuildTest, TwoTriangles) {
  const Graph g = testing::two_triangle_graph();
  EXPECT_EQ(g.edge_count(), 7u);
  EXPECT_THAT(as_vector(g.neighbors(2)), ElementsAre(0, 1, 3));
  EXPECT_THAT(as_vector(g.neighbors(3)), ElementsAre(2, 4, 5));
}

TEST(GraphBuildTest, SelfLoopRejectedWithPair) {
  const std::vector<Edge> edges = {{0, 0}};
  try {
    Graph::build(2, edges);
    FAIL() << "expected InvalidEdgeError";
  } catch (const InvalidEdgeError& e) {
    EXPECT_EQ(e.u(), 0u);
    EXPECT_EQ(e.v(), 0u);
  }
}

TEST(GraphBuildTest, OutOfRangeEndpointRejected) {
  const std::vector<Edge> edges = {{0, 1}, {1, 3}};
  try {
    Graph::build(3, edges);
    FAIL() << "expected InvalidEdgeError";
  } catch (const InvalidEdgeError& e) {
    EXPECT_EQ(e.u(), 1u);
    EXPECT_EQ(e.v(), 3u);
  }
}

TEST(GraphBuildTest, DuplicatesCollapse) {
  const std::vector<Edge> edges = {{0, 1}, {1, 0}, {0, 1}, {2, 1}};
  const Graph g = Graph::build(3, edges);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_THAT(as_vector(g.neighbors(0)), ElementsAre(1));
  EXPECT_THAT(g.edges(), ElementsAre(Edge{0, 1}, Edge{1, 2}));
}

TEST(GraphNeighborsTest, IsolatedVertexIsEmpty) {
  const std::vector<Edge> edges = {{0, 1}};
  const Graph g = Graph::build(3, edges);
  EXPECT_THAT(as_vector(g.neighbors(2)), IsEmpty());
}

TEST(GraphNeighborsTest, OutOfRangeThrows) {
  const Graph g = testing::two_triangle_graph();
  EXPECT_THROW(g.neighbors(6), std::out_of_range);
  EXPECT_THROW(common_neighbor_count(g, 0, 6), std::out_of_range);
}

TEST(CommonNeighborTest, TwoTriangles) {
  const Graph g = testing::two_triangle_graph();
  EXPECT_EQ(common_neighbor_count(g, 0, 2), 1u);
  EXPECT_EQ(common_neighbor_count(g, 2, 3), 0u);
}

TEST(CommonNeighborTest, Clique45) {
  const Graph g = testing::complete_graph(45);
  for (VertexId u : {0u, 7u, 44u}) {
    for (VertexId v : {1u, 13u, 43u}) {
      if (u != v) EXPECT_EQ(common_neighbor_count(g, u, v), 43u);
    }
  }
}

TEST(GraphPropertyTest, InvariantsOnRandomGraphs) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const double p = std::uniform_real_distribution<>(0.0, 1.0)(rng);
    const auto rg = testing::random_graph(n, p, rng);
    const Graph& g = rg.graph;
    std::size_t degree_sum = 0;
    for (VertexId v = 0; v < n; ++v) {
      const auto nv = g.neighbors(v);
      degree_sum += nv.size();
      EXPECT_TRUE(std::adjacent_find(nv.begin(), nv.end(), std::greater_equal<>()) == nv.end())
          << "neighbor list not strictly increasing";
      EXPECT_FALSE(std::binary_search(nv.begin(), nv.end(), v)) << "self-loop";
      for (VertexId w : nv) {
        const auto nw = g.neighbors(w);
        EXPECT_TRUE(std::binary_search(nw.begin(), nw.end(), v)) << "asymmetric";
      }
    }
    EXPECT_EQ(degree_sum, 2 * g.edge_count());
  }
}

TEST(GraphPropertyTest, CommonNeighborsMatchDenseOracle) {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 31;
    const double p = std::uniform_real_distribution<>(0.0, 1.0)(rng);
    const auto rg = testing::random_graph(n, p, rng);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = 0; v < n; ++v) {
        const std::size_t c = common_neighbor_count(rg.graph, u, v);
        ASSERT_EQ(c, testing::dense_common(rg.dense, u, v));
        ASSERT_EQ(c, common_neighbor_count(rg.graph, v, u));
        ASSERT_LE(c, std::min(rg.graph.degree(u), rg.graph.degree(v)));
      }
    }
  }
}

}  // namespace
}  // namespace clusterdist
