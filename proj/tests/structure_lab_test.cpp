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


#include "gmwis/structure_lab.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>

#include "fixtures.hpp"
#include "gmwis/generate.hpp"
#include "gmwis/graph_io.hpp"

namespace gmwis {
namespace {

using testing::make_graph;

TEST(PartitionTest, IsolatedVertex) {
  // H = P3 on {0, 1, 2}, v = 3 isolated.
  const WeightedGraph g = make_graph(4, {{0, 1}, {1, 2}});
  const auto p = partition_neighborhood(g, 3, VertexSet(4, {0, 1, 2}));
  EXPECT_EQ(p.q, VertexSet(4, {3}));
  EXPECT_EQ(p.t(), 3);
  for (const auto& block : p.a_plus) EXPECT_TRUE(block.empty());
  EXPECT_TRUE(p.all_plus.empty());
}

TEST(PartitionTest, PathIntoH) {
  // H = {0, 1, 2}; path v=3 - z=4 - x=5 with x adjacent to vertex 0 only.
  const WeightedGraph g = make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 0}});
  const auto p = partition_neighborhood(g, 3, Embedding{{0, 1, 2}});
  EXPECT_EQ(p.q, VertexSet(6, {3, 4}));
  EXPECT_EQ(p.a_plus[1], VertexSet(6, {5}));
  EXPECT_EQ(p.all_plus, VertexSet(6, {5}));
  EXPECT_TRUE(p.all_minus.empty());
}

TEST(PartitionTest, RejectsVertexTouchingH) {
  const WeightedGraph g = testing::path(4);
  EXPECT_THROW(partition_neighborhood(g, 2, VertexSet(4, {0, 1})), StructureError);
  EXPECT_THROW(partition_neighborhood(g, 1, VertexSet(4, {0, 1})), StructureError);
}

TEST(PartitionTest, BlocksMatchDefinitionsOnRandomInstances) {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    GenSpec spec;
    spec.level = 0;
    spec.n = 12;
    spec.seed = seed;
    spec.density = 0.25;
    const WeightedGraph g = generate(spec);
    auto h = find_induced(catalog("P3"), g);
    if (!h) continue;
    const VertexSet hs = h->image_set(g.order());
    const VertexSet outside = g.vertices() - hs - neighborhood_of(g, hs);
    if (outside.empty()) continue;
    const int v = outside.first();
    const auto p = partition_neighborhood(g, v, hs);
    ++checked;
    for (int x = 0; x < g.order(); ++x) {
      if (hs.contains(x)) continue;
      const int i = g.neighbors(x).intersection_size(hs);
      if (i == 0) {
        EXPECT_FALSE(p.all_plus.contains(x) || p.all_minus.contains(x));
        continue;
      }
      EXPECT_TRUE(p.a[static_cast<std::size_t>(i)].contains(x));
      EXPECT_EQ(p.all_plus.contains(x), g.neighbors(x).intersects(p.q));
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(SuiteTest, NamesRoundTrip) {
  for (SuiteId id : all_suites()) EXPECT_EQ(parse_suite(to_string(id)), id);
  EXPECT_THROW(parse_suite("lemma9"), StructureError);
  EXPECT_EQ(all_suites().size(), 9U);
}

TEST(SuiteTest, ConditionalSuiteSkipsUnavailablePatterns) {
  SuiteOptions options;
  options.samples = 20;
  const SuiteReport report = run_suite(SuiteId::lemma1, options);
  EXPECT_EQ(report.samples, 0);
  EXPECT_EQ(report.skipped.size(), 8U);
  EXPECT_NE(report.render().find("skipped H1: pattern unavailable"), std::string::npos);
}

TEST(SuiteTest, ConditionalSuiteRunsSuppliedPatterns) {
  SuiteOptions options;
  options.samples = 30;
  options.n = 8;
  // Supplying a diamond as H1 makes the check meaningful but not vacuous.
  options.catalog.add(PatternDef{"H1", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, Provenance::user_supplied});
  const SuiteReport report = run_suite(SuiteId::lemma1, options);
  EXPECT_EQ(report.samples, 30);
  EXPECT_EQ(report.skipped.size(), 7U);
  for (const auto& v : report.violations) {
    EXPECT_EQ(v.provenance, Provenance::user_supplied);
    EXPECT_TRUE(reverify(v, options.catalog));
  }
}

TEST(SuiteTest, GemFreeDiamondSuiteExhaustiveIsClean) {
  SuiteOptions options;
  options.n = 7;
  options.exhaustive = true;
  const SuiteReport report = run_suite(SuiteId::lemma3, options);
  EXPECT_GT(report.samples, 0);
  EXPECT_TRUE(report.clean()) << report.render();
}

TEST(SuiteTest, ConsecutivePairOnSevenHoleWithNeighbor) {
  std::vector<Edge> edges;
  for (int v = 0; v < 7; ++v) edges.emplace_back(v, (v + 1) % 7);
  edges.insert(edges.end(), {{7, 0}, {7, 1}});
  const WeightedGraph g = make_graph(8, edges);
  ASSERT_TRUE(satisfies_hypothesis(SuiteId::thm3_claim1, g));
  EXPECT_FALSE(check_instance(SuiteId::thm3_claim1, g));
  EXPECT_FALSE(check_instance(SuiteId::thm3, g));
}

TEST(SuiteTest, CheckInstanceRequiresHypothesis) {
  EXPECT_THROW(check_instance(SuiteId::lemma3, catalog("gem").graph()), StructureError);
  EXPECT_FALSE(satisfies_hypothesis(SuiteId::thm11, testing::cycle(4)));
}

TEST(SuiteTest, NearlyStatementFailsOnDisconnectedGraphs) {
  // C5* plus an isolated vertex: in the class, but its anti-neighborhood is C5*.
  const PatternDef c5star = catalog("C5*");
  std::vector<Edge> edges = c5star.edges;
  const WeightedGraph g = make_graph(7, edges);
  EXPECT_FALSE(satisfies_hypothesis(SuiteId::thm5, g));
  Violation v;
  v.suite = SuiteId::thm5;
  v.graph = g;
  v.pattern = "C5*";
  v.embedding = Embedding{{0, 1, 2, 3, 4, 5}};
  v.vertex = 6;
  EXPECT_FALSE(reverify(v));
}

TEST(SuiteTest, ViolationsReverifyFromEvidence) {
  // Replacing the conclusion pattern with P3 turns lemma3 into a false
  // statement, so every sample yields a violation.
  SuiteOptions options;
  options.samples = 25;
  options.n = 8;
  options.catalog.add(PatternDef{"diamond", 3, {{0, 1}, {1, 2}}, Provenance::user_supplied});
  const SuiteReport report = run_suite(SuiteId::lemma3, options);
  ASSERT_FALSE(report.violations.empty());
  for (const auto& v : report.violations) {
    EXPECT_EQ(v.pattern, "diamond");
    EXPECT_EQ(v.provenance, Provenance::user_supplied);
    EXPECT_TRUE(reverify(v, options.catalog));
    Violation tampered = v;
    tampered.embedding.image[0] = tampered.embedding.image[1];
    EXPECT_FALSE(reverify(tampered, options.catalog));
  }
  EXPECT_FALSE(report.clean());
  EXPECT_NE(report.render().find("file lemma3-1-"), std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / "gmwis_structure_lab_test";
  std::filesystem::remove_all(dir);
  const auto paths = write_counterexamples(report, dir);
  ASSERT_EQ(paths.size(), report.violations.size());
  EXPECT_EQ(paths[0].filename().string(), counterexample_name(report, report.violations[0]));
  EXPECT_EQ(read_graph(paths[0]), report.violations[0].graph);
  std::filesystem::remove_all(dir);
}

TEST(SuiteTest, ReportsAreReproducibleAcrossThreadCounts) {
  SuiteOptions options;
  options.samples = 40;
  options.n = 10;
  options.seed = 17;
  options.threads = 1;
  const std::string one = run_suite(SuiteId::thm11, options).render();
  options.threads = 3;
  EXPECT_EQ(run_suite(SuiteId::thm11, options).render(), one);
  options.seed = 18;
  EXPECT_EQ(run_suite(SuiteId::thm11, options).render().find("seed 17"), std::string::npos);
}

TEST(SuiteTest, ExhaustiveModeIsBounded) {
  SuiteOptions options;
  options.exhaustive = true;
  options.n = kMaxExhaustiveOrder + 1;
  EXPECT_THROW(run_suite(SuiteId::lemma2, options), StructureError);
}

TEST(SuiteTest, SamplerGivesUpExplicitly) {
  SuiteOptions options;
  options.samples = 3;
  options.n = 3;  // no prime graph has three vertices
  options.repair_budget = 5;
  const SuiteReport report = run_suite(SuiteId::lemma3, options);
  EXPECT_TRUE(report.gave_up);
  EXPECT_FALSE(report.clean());
  EXPECT_NE(report.render().find("gave-up"), std::string::npos);
}

}  // namespace
}  // namespace gmwis
