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


#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmwis/graph.hpp"
#include "gmwis/patterns.hpp"

namespace gmwis {

class StructureError : public Error {
 public:
  using Error::Error;
};

/// Blocks around an induced subgraph H and a vertex v with no neighbor in H.
/// Q is the component of G - (V(H) + N(V(H))) containing v; a[i] holds the
/// vertices outside H with exactly i neighbors in H (a[0] is unused), split by
/// whether they have a neighbor in Q.
struct NeighborhoodPartition {
  int vertex = -1;
  VertexSet h;
  VertexSet q;
  std::vector<VertexSet> a;
  std::vector<VertexSet> a_plus;
  std::vector<VertexSet> a_minus;
  VertexSet all_plus;
  VertexSet all_minus;

  int t() const { return h.size(); }
};

NeighborhoodPartition partition_neighborhood(const WeightedGraph& g, int v, const VertexSet& h);
NeighborhoodPartition partition_neighborhood(const WeightedGraph& g, int v, const Embedding& h);

/// Throws StructureError naming the first identity that fails: disjoint
/// blocks, N(H) = A+ + A-, A+ = N(Q), and A+ separating Q from H.
void check_partition(const WeightedGraph& g, const NeighborhoodPartition& p);

enum class SuiteId { lemma1, lemma2, lemma3, thm3, thm3_claim1, thm5, thm7, thm9, thm11 };

std::string_view to_string(SuiteId id);
SuiteId parse_suite(std::string_view name);
std::vector<SuiteId> all_suites();

/// Human-readable statement checked by a suite.
std::string_view suite_statement(SuiteId id);

/// Evidence for a failed statement, enough to re-check it without the
/// sampler.
struct Violation {
  SuiteId suite = SuiteId::lemma1;
  std::uint64_t sample = 0;
  WeightedGraph graph;
  std::string pattern;
  Provenance provenance = Provenance::user_supplied;
  /// The forbidden pattern found (empty for thm3_claim1).
  Embedding embedding;
  /// The vertex whose anti-neighborhood holds the pattern (nearly statements)
  /// or the external hole neighbor (thm3_claim1); -1 otherwise.
  int vertex = -1;
  /// Atom holding the pattern (atom statements); empty otherwise.
  VertexSet atom;
  /// Shortest odd hole in cyclic order (thm3 and thm3_claim1).
  std::vector<int> cycle;

  std::string describe() const;
};

/// Whether g meets the suite's hypothesis (class, connectivity, primality).
bool satisfies_hypothesis(SuiteId id, const WeightedGraph& g, const PatternCatalog& catalog = {});

/// Checks the suite's statement on one graph that meets the hypothesis.
/// Throws StructureError when it does not.
std::optional<Violation> check_instance(SuiteId id, const WeightedGraph& g, const PatternCatalog& catalog = {});

/// Re-checks the suite hypothesis and the failure from the stored evidence.
bool reverify(const Violation& v, const PatternCatalog& catalog = {});

struct SuiteOptions {
  int n = 10;
  int samples = 300;
  std::uint64_t seed = 1;
  /// All hypothesis graphs with 1..n vertices up to isomorphism (n <= 8).
  bool exhaustive = false;
  /// 0 picks GMWIS_THREADS from the environment, else 1.
  int threads = 0;
  /// Whole-graph retries per sample before the sampler gives up.
  int repair_budget = 200;
  PatternCatalog catalog;
};

inline constexpr int kMaxExhaustiveOrder = 8;

struct SuiteReport {
  SuiteId suite = SuiteId::lemma1;
  std::uint64_t seed = 0;
  int n = 0;
  bool exhaustive = false;
  /// Hypothesis instances examined.
  int samples = 0;
  /// Instances where the statement had something to check (an odd hole for
  /// thm3, an available pattern for lemma1).
  int nonvacuous = 0;
  std::vector<Violation> violations;
  std::vector<std::string> skipped;
  std::optional<std::string> gave_up;
  double runtime_seconds = 0.0;

  bool clean() const { return violations.empty() && !gave_up; }
  /// Deterministic text; runtime is left out.
  std::string render() const;
};

SuiteReport run_suite(SuiteId id, const SuiteOptions& options);

/// Name of the counterexample file for a violation: <suite>-<seed>-<sample>.g
std::string counterexample_name(const SuiteReport& report, const Violation& v);

/// Writes one graph file per violation into dir; returns the paths.
std::vector<std::filesystem::path> write_counterexamples(const SuiteReport& report,
                                                         const std::filesystem::path& dir);

/// Thread budget from GMWIS_THREADS (at least 1).
int default_thread_budget();

}  // namespace gmwis
