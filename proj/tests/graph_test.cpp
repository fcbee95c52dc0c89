// Copyright 2026 The gmwis Authors
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


#include "gmwis/graph.hpp"

#include <gtest/gtest.h>

#include <limits>

#include "fixtures.hpp"

namespace gmwis {
namespace {

using testing::cycle;
using testing::make_graph;

TEST(GraphTest, BuildCollapsesDuplicateEdges) {
  const WeightedGraph g = make_graph(4, {{0, 1}, {1, 0}, {2, 3}, {1, 2}}, {3, 1, 4, 1});
  EXPECT_EQ(g.order(), 4);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(g.degree(1), 2);
  EXPECT_EQ(g.total_weight(g.vertices()), 9);
}

TEST(GraphTest, BuildRejectsBadInput) {
  EXPECT_THROW(make_graph(3, {{0, 0}}), GraphError);
  EXPECT_THROW(make_graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(make_graph(2, {}, {1, -1}), GraphError);
  EXPECT_THROW(make_graph(2, {}, {1, 2, 3}), GraphError);
}

TEST(GraphTest, InducedSubgraphKeepsOrderAndLifts) {
  const WeightedGraph g = cycle(5, {10, 20, 30, 40, 50});
  const InducedSubgraph sub = induced_subgraph(g, VertexSet(5, {1, 2, 4}));
  EXPECT_EQ(sub.to_parent, (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(sub.from_parent, (std::vector<int>{-1, 0, 1, -1, 2}));
  EXPECT_EQ(sub.graph.edges(), (std::vector<Edge>{{0, 1}}));
  EXPECT_EQ(sub.graph.weight(2), 50);
  EXPECT_EQ(sub.lift(VertexSet(3, {0, 2})), VertexSet(5, {1, 4}));
}

TEST(GraphTest, ComplementAndNeighborhoods) {
  const WeightedGraph g = cycle(5);
  EXPECT_EQ(complement(g).edge_count(), 5);
  EXPECT_TRUE(complement(g).adjacent(0, 2));
  EXPECT_EQ(open_neighborhood(g, 0), VertexSet(5, {1, 4}));
  EXPECT_EQ(closed_neighborhood(g, 0), VertexSet(5, {0, 1, 4}));
  EXPECT_EQ(anti_neighborhood(g, 0), VertexSet(5, {2, 3}));
  EXPECT_EQ(neighborhood_of(g, VertexSet(5, {0, 1})), VertexSet(5, {2, 4}));
}

TEST(GraphTest, ComponentsOrderedBySmallestMember) {
  const WeightedGraph g = make_graph(6, {{4, 5}, {0, 3}, {1, 2}});
  const auto parts = connected_components(g);
  ASSERT_EQ(parts.size(), 3U);
  EXPECT_EQ(parts[0], VertexSet(6, {0, 3}));
  EXPECT_EQ(parts[1], VertexSet(6, {1, 2}));
  EXPECT_EQ(parts[2], VertexSet(6, {4, 5}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(is_connected(cycle(4)));
  EXPECT_EQ(connected_components(g, VertexSet(6, {0, 1, 3})).size(), 2U);
}

TEST(GraphTest, CliqueIndependentDescribe) {
  const WeightedGraph g = cycle(5);
  EXPECT_TRUE(is_clique(g, VertexSet(5, {0, 1})));
  EXPECT_FALSE(is_clique(g, VertexSet(5, {0, 2})));
  EXPECT_TRUE(is_independent(g, VertexSet(5, {0, 2})));
  EXPECT_TRUE(is_independent(g, VertexSet(5)));
  EXPECT_EQ(describe(VertexSet(6, {0, 3, 4})), "{1,4,5}");
}

TEST(GraphTest, CheckedAddDetectsOverflow) {
  EXPECT_EQ(checked_add(2, 3), 5);
  EXPECT_THROW(checked_add(std::numeric_limits<Weight>::max(), 1), OverflowError);
}

TEST(GraphTest, VertexChecks) {
  const WeightedGraph g = cycle(4);
  EXPECT_THROW(g.check_vertex(4), GraphError);
  EXPECT_THROW(g.check_subset(VertexSet(5)), GraphError);
  EXPECT_NO_THROW(g.check_subset(VertexSet(4, {1})));
}

}  // namespace
}  // namespace gmwis
