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

#include "gmwis/solver.hpp"

#include <array>
#include <cstring>
#include <unordered_map>
#include <utility>

#include "gmwis/decomposition.hpp"

namespace gmwis {

namespace {

/// Appends child steps one level deeper.
void append_nested(std::vector<TraceStep>& trace, const std::vector<TraceStep>& child, int shift = 1) {
  for (TraceStep step : child) {
    step.depth += shift;
    trace.push_back(std::move(step));
  }
}

SolveResult empty_result(const WeightedGraph& g) { return SolveResult{0, g.empty_set(), {}, {}}; }

/// Re-expresses a result computed on an induced subgraph in parent indices.
SolveResult lift(const InducedSubgraph& sub, SolveResult r) {
  r.set = sub.lift(r.set);
  return r;
}

// ---------------------------------------------------------------------------

class Enumerator {
 public:
  explicit Enumerator(const WeightedGraph& g) : g_(g), best_set_(g.empty_set()), current_(g.empty_set()) {}

  SolveResult run() {
    visit(g_.vertices(), 0);
    return SolveResult{best_, best_set_, {}, {}};
  }

 private:
  // Preorder over sets in lexicographic order; only strict improvements
  // replace the incumbent, so the first optimum seen is the smallest.
  void visit(const VertexSet& allowed, Weight current_weight) {
    if (current_weight > best_) {
      best_ = current_weight;
      best_set_ = current_;
    }
    if (checked_add(current_weight, g_.total_weight(allowed)) <= best_) return;
    VertexSet remaining = allowed;
    for (int v : allowed) {
      remaining.erase(v);
      current_.insert(v);
      visit(remaining - g_.neighbors(v), checked_add(current_weight, g_.weight(v)));
      current_.erase(v);
    }
  }

  const WeightedGraph& g_;
  Weight best_ = -1;
  VertexSet best_set_;
  VertexSet current_;
};

// ---------------------------------------------------------------------------

class BranchAndBound {
 public:
  explicit BranchAndBound(const WeightedGraph& g) : g_(g) {}

  SolveResult run() {
    auto [weight, set] = solve(g_.vertices());
    return SolveResult{weight, std::move(set), {}, {}};
  }

 private:
  using Entry = std::pair<Weight, VertexSet>;
  static constexpr std::size_t kMemoLimit = 1 << 20;

  Entry solve(const VertexSet& s) {
    if (s.empty()) return {0, s};
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    Entry out = compute(s);
    if (memo_.size() >= kMemoLimit) memo_.clear();
    memo_.emplace(s, out);
    return out;
  }

  Entry compute(const VertexSet& s) {
    auto components = connected_components(g_, s);
    if (components.size() > 1) {
      Entry total{0, g_.empty_set()};
      for (const auto& c : components) {
        auto [w, set] = solve(c);
        total.first = checked_add(total.first, w);
        total.second |= set;
      }
      return total;
    }
    if (s.size() == 1) return {g_.weight(s.first()), s};

    int pivot = -1;
    int pivot_degree = -1;
    for (int v : s) {
      const int d = g_.neighbors(v).intersection_size(s);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    VertexSet rest = s;
    rest.erase(pivot);

    auto [with_weight, with_set] = solve(rest - g_.neighbors(pivot));
    with_weight = checked_add(with_weight, g_.weight(pivot));
    with_set.insert(pivot);
    // The exclude branch cannot beat the total weight of what remains.
    if (with_weight >= g_.total_weight(rest)) return {with_weight, std::move(with_set)};
    auto without = solve(rest);
    if (without.first > with_weight) return without;
    return {with_weight, std::move(with_set)};
  }

  const WeightedGraph& g_;
  std::unordered_map<VertexSet, Entry, VertexSetHash> memo_;
};

// ---------------------------------------------------------------------------

class AtomRecursion {
 public:
  AtomRecursion(const WeightedGraph& g, const BaseSolver& atom_solver) : g_(g), atom_solver_(atom_solver) {}

  SolveResult solve(const VertexSet& s) {
    if (s.empty()) return empty_result(g_);
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    SolveResult out = compute(s);
    memo_.emplace(s, out);
    return out;
  }

 private:
  SolveResult compute(const VertexSet& s) {
    auto components = connected_components(g_, s);
    if (components.size() > 1) {
      SolveResult total = empty_result(g_);
      for (const auto& c : components) {
        SolveResult part = solve(c);
        total.weight = checked_add(total.weight, part.weight);
        total.set |= part.set;
        total.trace.insert(total.trace.end(), part.trace.begin(), part.trace.end());
      }
      return total;
    }

    InducedSubgraph sub = induced_subgraph(g_, s);
    auto cut = find_clique_cutset(sub.graph);
    if (!cut) {
      SolveResult r = lift(sub, atom_solver_(sub.graph));
      std::vector<TraceStep> trace{TraceStep{0, -1, "atom", s.size()}};
      append_nested(trace, r.trace);
      r.trace = std::move(trace);
      return r;
    }

    const VertexSet clique = sub.lift(cut->clique);
    const VertexSet side = sub.lift(cut->side);
    const VertexSet rest = s - side - clique;

    auto combine = [&](Weight base, const VertexSet& extra, const VertexSet& a, const VertexSet& b) {
      SolveResult left = solve(a);
      SolveResult right = solve(b);
      SolveResult out;
      out.weight = checked_add(checked_add(base, left.weight), right.weight);
      out.set = left.set | right.set | extra;
      out.trace = std::move(left.trace);
      out.trace.insert(out.trace.end(), right.trace.begin(), right.trace.end());
      return out;
    };

    SolveResult best = combine(0, g_.empty_set(), side, rest);
    for (int c : clique) {
      VertexSet chosen(g_.order(), {c});
      SolveResult candidate =
          combine(g_.weight(c), chosen, side - g_.neighbors(c), rest - g_.neighbors(c));
      if (candidate.weight > best.weight) best = std::move(candidate);
    }
    std::vector<TraceStep> trace{TraceStep{0, -1, "cutset", s.size()}};
    append_nested(trace, best.trace);
    best.trace = std::move(trace);
    return best;
  }

  const WeightedGraph& g_;
  const BaseSolver& atom_solver_;
  std::unordered_map<VertexSet, SolveResult, VertexSetHash> memo_;
};

// ---------------------------------------------------------------------------

SolveResult evaluate_md(const WeightedGraph& g, const MDNode& node, const BaseSolver& prime_solver) {
  switch (node.kind) {
    case NodeKind::leaf: {
      const int v = node.vertex();
      return SolveResult{g.weight(v), VertexSet(g.order(), {v}), {}, {}};
    }
    case NodeKind::parallel: {
      SolveResult total = empty_result(g);
      for (const auto& child : node.children) {
        SolveResult r = evaluate_md(g, child, prime_solver);
        total.weight = checked_add(total.weight, r.weight);
        total.set |= r.set;
        total.trace.insert(total.trace.end(), r.trace.begin(), r.trace.end());
      }
      return total;
    }
    case NodeKind::series: {
      SolveResult best;
      bool have = false;
      for (const auto& child : node.children) {
        SolveResult r = evaluate_md(g, child, prime_solver);
        if (!have || r.weight > best.weight) {
          best = std::move(r);
          have = true;
        }
      }
      return best;
    }
    case NodeKind::prime: {
      std::vector<SolveResult> parts;
      std::vector<Weight> weights;
      for (const auto& child : node.children) {
        parts.push_back(evaluate_md(g, child, prime_solver));
        weights.push_back(parts.back().weight);
      }
      const WeightedGraph quotient = with_weights(node.quotient, weights);
      SolveResult q = prime_solver(quotient);
      verify_solution(quotient, q);
      SolveResult out = empty_result(g);
      out.weight = q.weight;
      out.trace.push_back(TraceStep{0, -1, "prime", quotient.order()});
      append_nested(out.trace, q.trace);
      for (int i : q.set) {
        out.set |= parts[static_cast<std::size_t>(i)].set;
        out.trace.insert(out.trace.end(), parts[static_cast<std::size_t>(i)].trace.begin(),
                         parts[static_cast<std::size_t>(i)].trace.end());
      }
      return out;
    }
  }
  throw SolverError("unknown decomposition node kind");
}

/// Solves each component separately and sums the results.
SolveResult by_components(const WeightedGraph& g, const BaseSolver& solver) {
  auto components = connected_components(g);
  if (components.size() <= 1) return solver(g);
  SolveResult total = empty_result(g);
  for (const auto& c : components) {
    InducedSubgraph sub = induced_subgraph(g, c);
    SolveResult r = lift(sub, solver(sub.graph));
    total.weight = checked_add(total.weight, r.weight);
    total.set |= r.set;
    total.trace.insert(total.trace.end(), r.trace.begin(), r.trace.end());
  }
  return total;
}

// ---------------------------------------------------------------------------

std::string memo_key(const WeightedGraph& g) {
  std::string key;
  const int n = g.order();
  key.append(reinterpret_cast<const char*>(&n), sizeof n);
  for (int v = 0; v < n; ++v) {
    const auto words = g.neighbors(v).words();
    key.append(reinterpret_cast<const char*>(words.data()), words.size_bytes());
  }
  const auto weights = g.weights();
  key.append(reinterpret_cast<const char*>(weights.data()), weights.size_bytes());
  return key;
}

class LayeredSolver {
 public:
  explicit LayeredSolver(const SolveConfig& config) : config_(config) {}

  SolveResult layer(const WeightedGraph& g, int level) {
    if (g.empty()) return empty_result(g);
    auto& memo = memo_[static_cast<std::size_t>(level)];
    std::string key = memo_key(g);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    SolveResult r = compute(g, level);
    for (auto& step : r.trace) {
      if (step.layer == -1) step.layer = level;
    }
    if (memo.size() >= config_.memo_limit) memo.clear();
    memo.emplace(std::move(key), r);
    return r;
  }

  void check_class(const WeightedGraph& g, int level, int from_layer, std::string_view after) {
    if (!config_.strict) return;
    auto verdict = is_free(g, patterns_[static_cast<std::size_t>(level)]);
    if (verdict.free) return;
    diagnostics_.push_back(StructureViolation{from_layer,
                                              "level " + std::to_string(level) + " class after " + std::string(after),
                                              g, std::move(*verdict.witness)});
  }

  std::vector<StructureViolation> take_diagnostics() { return std::move(diagnostics_); }

 private:
  SolveResult compute(const WeightedGraph& g, int level) {
    switch (level) {
      case 0:
      case 1:
        // Prime parts split into atoms; each atom is nearly in the next class.
        return solve_by_modular(g, [this, level](const WeightedGraph& prime) {
          return solve_by_atoms(prime, [this, level](const WeightedGraph& atom) { return nearly(atom, level); });
        });
      case 2:
        // Prime parts are diamond-free.
        return solve_by_modular(g, [this](const WeightedGraph& prime) {
          check_class(prime, 3, 2, "modular decomposition (prime part)");
          return layer(prime, 3);
        });
      case 3:
        return solve_by_atoms(g, [this](const WeightedGraph& atom) { return nearly(atom, 3); });
      case 4:
        // The nearly property only holds per connected component.
        return by_components(g, [this](const WeightedGraph& part) { return nearly(part, 4); });
      case 5:
        return solve_by_modular(g, [this](const WeightedGraph& prime) { return dispatch_base(prime); });
      default:
        throw SolverError("class level must be in 0..5, got " + std::to_string(level));
    }
  }

  SolveResult nearly(const WeightedGraph& g, int level) {
    return solve_nearly(g, [this, level](const WeightedGraph& rest) {
      check_class(rest, level + 1, level, "nearly step");
      return layer(rest, level + 1);
    });
  }

  SolveResult dispatch_base(const WeightedGraph& prime) {
    const bool claw_free = !InducedMatcher(claw_).find(prime).has_value();
    if (!claw_free && config_.strict) {
      // A prime graph of this class with a claw has no odd hole.
      if (auto hole = find_shortest_odd_hole(prime)) {
        diagnostics_.push_back(StructureViolation{5, "odd-hole-free prime part with a claw", prime,
                                                  Witness{"C" + std::to_string(hole->size()),
                                                          Provenance::paper_exact, Embedding{*hole}}});
      }
    }
    const BaseSolver& solver = claw_free ? config_.registry.claw_free : config_.registry.odd_hole_diamond_free;
    SolveResult r = solver(prime);
    std::vector<TraceStep> trace{
        TraceStep{0, -1, claw_free ? "claw_free" : "odd_hole_diamond_free", prime.order()}};
    append_nested(trace, r.trace);
    r.trace = std::move(trace);
    return r;
  }

  const SolveConfig& config_;
  std::array<std::unordered_map<std::string, SolveResult>, kLevelCount> memo_;
  std::array<std::vector<PatternDef>, kLevelCount> patterns_{level_patterns(0), level_patterns(1),
                                                             level_patterns(2), level_patterns(3),
                                                             level_patterns(4), level_patterns(5)};
  WeightedGraph claw_ = catalog("claw").graph();
  std::vector<StructureViolation> diagnostics_;
};

}  // namespace

ClassRejection::ClassRejection(Witness witness)
    : SolverError("input contains an induced " + witness.pattern + " on vertices " + witness.embedding.to_string()),
      witness_(std::move(witness)) {}

std::string StructureViolation::describe() const {
  return "layer " + std::to_string(layer) + ": " + check + " violated on a " + std::to_string(instance.order()) +
         "-vertex instance (induced " + witness.pattern + " [" + std::string(to_string(witness.provenance)) +
         "] at local vertices " + witness.embedding.to_string() + ")";
}

BaseSolverRegistry BaseSolverRegistry::defaults() { return uniform("exact"); }

BaseSolverRegistry BaseSolverRegistry::uniform(std::string_view name) {
  BaseSolver solver;
  if (name == "exact") {
    solver = mwis_exact;
  } else if (name == "enumerate") {
    solver = mwis_enumerate;
  } else {
    throw SolverError("unknown base solver '" + std::string(name) + "' (expected exact or enumerate)");
  }
  return BaseSolverRegistry{solver, solver, solver};
}

SolveResult mwis_enumerate(const WeightedGraph& g) {
  if (g.order() > kEnumerateLimit) {
    throw SolverError("enumeration oracle refuses graphs with more than " + std::to_string(kEnumerateLimit) +
                      " vertices (got " + std::to_string(g.order()) + ")");
  }
  return Enumerator(g).run();
}

SolveResult mwis_exact(const WeightedGraph& g) { return BranchAndBound(g).run(); }

SolveResult solve_nearly(const WeightedGraph& g, const BaseSolver& base) {
  if (g.empty()) return empty_result(g);
  SolveResult best;
  bool have = false;
  for (int v = 0; v < g.order(); ++v) {
    InducedSubgraph rest = induced_subgraph(g, anti_neighborhood(g, v));
    SolveResult r = lift(rest, base(rest.graph));
    const Weight total = checked_add(r.weight, g.weight(v));
    if (have && total <= best.weight) continue;
    best.weight = total;
    best.set = std::move(r.set);
    best.set.insert(v);
    best.trace = {TraceStep{0, -1, "nearly", rest.graph.order()}};
    append_nested(best.trace, r.trace);
    best.diagnostics = std::move(r.diagnostics);
    have = true;
  }
  return best;
}

SolveResult solve_by_modular(const WeightedGraph& g, const BaseSolver& prime_solver) {
  if (g.empty()) return empty_result(g);
  MDTree tree = modular_decomposition(g);
  SolveResult r = evaluate_md(g, tree.root, prime_solver);
  std::vector<TraceStep> trace{TraceStep{0, -1, "modular", g.order()}};
  append_nested(trace, r.trace);
  r.trace = std::move(trace);
  return r;
}

SolveResult solve_by_atoms(const WeightedGraph& g, const BaseSolver& atom_solver) {
  if (g.empty()) return empty_result(g);
  return AtomRecursion(g, atom_solver).solve(g.vertices());
}

SolveResult solve_layer(const WeightedGraph& g, int level, const SolveConfig& config) {
  if (level < 0 || level >= kLevelCount) {
    throw SolverError("class level must be in 0..5, got " + std::to_string(level));
  }
  LayeredSolver solver(config);
  solver.check_class(g, level, level, "input");
  SolveResult r = solver.layer(g, level);
  r.diagnostics = solver.take_diagnostics();
  return r;
}

SolveResult solve(const WeightedGraph& g, const SolveConfig& config) {
  if (config.require_class) {
    auto verdict = recognize_input_class(g);
    if (!verdict.free) throw ClassRejection(std::move(*verdict.witness));
  }
  SolveResult r = solve_layer(g, 0, config);
  verify_solution(g, r);
  return r;
}

void verify_solution(const WeightedGraph& g, const SolveResult& result) {
  if (result.set.universe() != g.order()) {
    throw SolverError("solution set universe " + std::to_string(result.set.universe()) +
                      " does not match graph order " + std::to_string(g.order()));
  }
  if (!is_independent(g, result.set)) throw SolverError("solution set " + describe(result.set) + " is not independent");
  const Weight total = g.total_weight(result.set);
  if (total != result.weight) {
    throw SolverError("solution set " + describe(result.set) + " weighs " + std::to_string(total) +
                      ", reported weight is " + std::to_string(result.weight));
  }
}

}  // namespace gmwis
