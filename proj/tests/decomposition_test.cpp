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


#include "gmwis/decomposition.hpp"

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "gmwis/patterns.hpp"
#include "oracles.hpp"

namespace gmwis {
namespace {

using testing::cycle;
using testing::make_graph;
using testing::path;

TEST(ModulesTest, ModuleChecksAndClosure) {
  const WeightedGraph c4 = cycle(4);
  EXPECT_TRUE(is_module(c4, VertexSet(4, {0, 2})));
  EXPECT_FALSE(is_module(c4, VertexSet(4, {0, 1})));
  EXPECT_EQ(module_closure(path(4), VertexSet(4, {0, 1})), VertexSet::full(4));
  EXPECT_EQ(module_closure(c4, VertexSet(4, {1, 3})), VertexSet(4, {1, 3}));
}

TEST(ModulesTest, Primality) {
  EXPECT_TRUE(is_prime(path(4)));
  EXPECT_TRUE(is_prime(cycle(5)));
  EXPECT_FALSE(is_prime(cycle(4)));
  EXPECT_FALSE(is_prime(testing::clique(3)));
  EXPECT_FALSE(is_prime(path(2)));
  EXPECT_FALSE(find_nontrivial_module(path(4)));
  auto m = find_nontrivial_module(cycle(4));
  ASSERT_TRUE(m);
  EXPECT_TRUE(is_module(cycle(4), *m));
}

TEST(ModulesTest, PrimalityMatchesBruteForce) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const WeightedGraph g = testing::random_weighted_graph(3 + trial % 8, 0.5, rng, 1, 1);
    EXPECT_EQ(is_prime(g), testing::brute_is_prime(g)) << "trial " << trial;
  }
}

TEST(ModularDecompositionTest, FourCycleIsSeriesOfTwoParallelPairs) {
  const MDTree t = modular_decomposition(cycle(4));
  EXPECT_EQ(t.root.kind, NodeKind::series);
  ASSERT_EQ(t.root.children.size(), 2U);
  EXPECT_EQ(t.root.children[0].kind, NodeKind::parallel);
  EXPECT_EQ(t.root.children[0].vertices, VertexSet(4, {0, 2}));
  EXPECT_EQ(t.root.children[1].vertices, VertexSet(4, {1, 3}));
  EXPECT_EQ(render(t), "series 1 2 3 4\n  parallel 1 3\n    leaf 1\n    leaf 3\n  parallel 2 4\n    leaf 2\n    leaf 4\n");
}

TEST(ModularDecompositionTest, PathIsPrimeWithQuotient) {
  const MDTree t = modular_decomposition(path(4));
  EXPECT_EQ(t.root.kind, NodeKind::prime);
  EXPECT_EQ(t.root.children.size(), 4U);
  EXPECT_EQ(t.root.quotient.edge_count(), 3);
  EXPECT_EQ(t.root.representatives, (std::vector<int>{0, 1, 2, 3}));
}

TEST(ModularDecompositionTest, PrimeNodeWithNontrivialChildren) {
  // P4 with vertex 1 blown up into an independent pair {1, 4}.
  const WeightedGraph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 2}});
  const MDTree t = modular_decomposition(g);
  EXPECT_EQ(t.root.kind, NodeKind::prime);
  ASSERT_EQ(t.root.children.size(), 4U);
  EXPECT_EQ(t.root.children[1].vertices, VertexSet(5, {1, 4}));
  EXPECT_EQ(t.root.children[1].kind, NodeKind::parallel);
  EXPECT_EQ(testing::validate_md_tree(g, t), "");
}

TEST(ModularDecompositionTest, RandomTreesAreValid) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const WeightedGraph g = testing::random_weighted_graph(1 + trial % 11, 0.15 + 0.1 * (trial % 7), rng, 1, 1);
    EXPECT_EQ(testing::validate_md_tree(g, modular_decomposition(g)), "") << "trial " << trial;
  }
}

TEST(ModularDecompositionTest, EmptyGraphIsRejected) {
  EXPECT_THROW(modular_decomposition(WeightedGraph{}), DecompositionError);
}

TEST(CliqueCutsetTest, DiamondSplitsOnItsMiddleEdge) {
  const WeightedGraph diamond = catalog("diamond").graph();
  auto cut = find_clique_cutset(diamond);
  ASSERT_TRUE(cut);
  EXPECT_EQ(cut->clique, VertexSet(4, {0, 2}));
  EXPECT_EQ(cut->side.size(), 1);
  EXPECT_FALSE(find_clique_cutset(cycle(5)));
  EXPECT_FALSE(find_clique_cutset(path(2)));
  EXPECT_THROW(find_clique_cutset(testing::edgeless(3)), DecompositionError);
}

TEST(CliqueCutsetTest, SearchModesAgreeWithBruteForce) {
  std::mt19937_64 rng(9);
  int with_cutset = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const WeightedGraph g = testing::random_weighted_graph(3 + trial % 9, 0.3 + 0.05 * (trial % 8), rng, 1, 1);
    if (!is_connected(g)) continue;
    const bool expected = testing::brute_has_clique_cutset(g);
    with_cutset += expected ? 1 : 0;
    for (auto mode : {CutsetSearch::minimal_ordering, CutsetSearch::exhaustive}) {
      auto cut = find_clique_cutset(g, mode);
      ASSERT_EQ(cut.has_value(), expected) << "trial " << trial;
      if (!cut) continue;
      EXPECT_TRUE(is_clique(g, cut->clique));
      const VertexSet rest = g.vertices() - cut->clique;
      EXPECT_GT(connected_components(g, rest).size(), 1U);
      EXPECT_TRUE(cut->side.is_subset_of(rest));
      EXPECT_FALSE(neighborhood_of(g, cut->side).intersects(rest - cut->side));
    }
  }
  EXPECT_GT(with_cutset, 20);
}

TEST(AtomTreeTest, PathSplitsIntoEdges) {
  const AtomTree t = clique_cutset_decompose(path(4));
  const auto atoms = t.atoms();
  ASSERT_EQ(atoms.size(), 3U);
  EXPECT_EQ(t.internal_count(), 2);
  for (const auto& a : atoms) EXPECT_EQ(a.size(), 2);
  EXPECT_EQ(testing::validate_atom_tree(path(4), t), "");
}

TEST(AtomTreeTest, RandomTreesAreValid) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const WeightedGraph g = testing::random_weighted_graph(2 + trial % 10, 0.25 + 0.05 * (trial % 6), rng, 1, 1);
    if (!is_connected(g)) continue;
    EXPECT_EQ(testing::validate_atom_tree(g, clique_cutset_decompose(g)), "") << "trial " << trial;
  }
}

TEST(AtomTreeTest, RenderFormat) {
  const std::string text = render(clique_cutset_decompose(catalog("diamond").graph()));
  EXPECT_NE(text.find("sep 1 3"), std::string::npos);
  EXPECT_NE(text.find("atom "), std::string::npos);
}

}  // namespace
}  // namespace gmwis
