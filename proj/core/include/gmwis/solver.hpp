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

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "gmwis/graph.hpp"
#include "gmwis/patterns.hpp"

namespace gmwis {

class SolverError : public Error {
 public:
  using Error::Error;
};

/// Input outside (S1,2,2, S1,1,3, co-chair)-free graphs under require_class.
class ClassRejection : public SolverError {
 public:
  explicit ClassRejection(Witness witness);
  const Witness& witness() const { return witness_; }

 private:
  Witness witness_;
};

/// One decomposition step that contributed to the returned solution.
struct TraceStep {
  int depth = 0;
  int layer = -1;  // -1 outside the layered chain
  std::string rule;
  int size = 0;  // vertices of the sub-instance the rule was applied to

  bool operator==(const TraceStep&) const = default;
};

/// A class guarantee that failed to hold on some sub-instance (strict mode).
struct StructureViolation {
  int layer = 0;
  std::string check;
  WeightedGraph instance;
  Witness witness;

  std::string describe() const;
};

struct SolveResult {
  Weight weight = 0;
  VertexSet set;
  std::vector<TraceStep> trace;
  std::vector<StructureViolation> diagnostics;
};

using BaseSolver = std::function<SolveResult(const WeightedGraph&)>;

/// Solvers for the terminal classes of the chain. Both plug-in slots default
/// to the exact solver.
struct BaseSolverRegistry {
  BaseSolver exact;
  BaseSolver claw_free;
  BaseSolver odd_hole_diamond_free;

  static BaseSolverRegistry defaults();
  /// Every slot resolved to the named solver ("exact" or "enumerate").
  static BaseSolverRegistry uniform(std::string_view name);
};

inline constexpr int kEnumerateLimit = 24;

/// Exhaustive enumeration of independent sets; the lexicographically
/// smallest optimal set is returned. Refuses graphs above kEnumerateLimit.
SolveResult mwis_enumerate(const WeightedGraph& g);

/// Branch and bound: split components, take isolated vertices, branch on a
/// maximum-degree vertex, memoize on the remaining vertex set.
SolveResult mwis_exact(const WeightedGraph& g);

/// max over v of w(v) + base(G - N[v]); the empty graph has weight 0.
SolveResult solve_nearly(const WeightedGraph& g, const BaseSolver& base);

/// Bottom-up over the modular decomposition: leaves take their weight,
/// parallel nodes sum, series nodes take the best child, prime nodes solve
/// the quotient weighted by the children's optima.
SolveResult solve_by_modular(const WeightedGraph& g, const BaseSolver& prime_solver);

/// Recursion over clique cutsets Q with side A and remainder B:
///   max(a(A) + a(B), max over c in Q of w(c) + a(A - N(c)) + a(B - N[c])).
/// Sub-instances without a clique cutset go to atom_solver. Disconnected
/// inputs are solved per component.
SolveResult solve_by_atoms(const WeightedGraph& g, const BaseSolver& atom_solver);

struct SolveConfig {
  bool require_class = false;
  /// Re-check each level's class after every reduction and record
  /// StructureViolation diagnostics (costly).
  bool strict = false;
  BaseSolverRegistry registry = BaseSolverRegistry::defaults();
  /// Memo entries kept per solve before the cache is flushed.
  std::size_t memo_limit = 1 << 18;
};

/// The layered chain for class levels 0..5 (see level_patterns). Exact on
/// every input; the class only matters for the guarantees checked in strict
/// mode.
SolveResult solve_layer(const WeightedGraph& g, int level, const SolveConfig& config = {});

/// Entry point: optional class check, the level-0 chain, and a final
/// independence and weight check of the answer.
SolveResult solve(const WeightedGraph& g, const SolveConfig& config = {});

/// Throws SolverError unless the set is independent in g and sums to weight.
void verify_solution(const WeightedGraph& g, const SolveResult& result);

}  // namespace gmwis
