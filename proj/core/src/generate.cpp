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


#include "gmwis/generate.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "gmwis/decomposition.hpp"

namespace gmwis {

namespace {

VertexSet ball(const WeightedGraph& g, int center, int radius) {
  VertexSet reached(g.order(), {center});
  VertexSet frontier = reached;
  for (int r = 0; r < radius && !frontier.empty(); ++r) {
    VertexSet next = neighborhood_of(g, frontier) - reached;
    reached |= next;
    frontier = std::move(next);
  }
  return reached;
}

bool all_connected(std::span<const PatternDef> patterns) {
  return std::all_of(patterns.begin(), patterns.end(), [](const PatternDef& p) { return is_connected(p.graph()); });
}

std::vector<Weight> random_weights(int n, std::mt19937_64& rng, Weight lo, Weight hi) {
  std::uniform_int_distribution<Weight> dist(lo, hi);
  std::vector<Weight> w(static_cast<std::size_t>(n));
  for (auto& x : w) x = dist(rng);
  return w;
}

void find_prime_nodes(const MDNode& node, const MDNode*& best) {
  if (node.kind == NodeKind::prime && (!best || node.children.size() > best->children.size())) best = &node;
  for (const auto& child : node.children) find_prime_nodes(child, best);
}

}  // namespace

WeightedGraph random_graph(int n, double density, std::mt19937_64& rng, Weight min_weight, Weight max_weight) {
  if (n < 0) throw GenerationError("vertex count must be nonnegative");
  std::bernoulli_distribution edge(std::clamp(density, 0.0, 1.0));
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (edge(rng)) edges.emplace_back(u, v);
    }
  }
  return build_graph(n, edges, random_weights(n, rng, min_weight, max_weight));
}

std::optional<WeightedGraph> grow_free_graph(const GrowthOptions& options, std::mt19937_64& rng,
                                             const WeightedGraph* start) {
  const bool isolated_ok = !options.connected && all_connected(options.forbidden);
  // An embedding of a connected pattern through the new vertex stays within
  // (pattern order - 1) steps of it.
  const bool local_check = all_connected(options.forbidden);
  int radius = 0;
  for (const auto& p : options.forbidden) radius = std::max(radius, p.order - 1);
  std::bernoulli_distribution edge(std::clamp(options.density, 0.0, 1.0));

  std::vector<Edge> edges;
  int k = 0;
  if (start) {
    if (start->order() > options.n) throw GenerationError("start graph is larger than the requested order");
    if (auto verdict = is_free(*start, options.forbidden); !verdict.free) {
      throw GenerationError("start graph contains an induced " + verdict.witness->pattern);
    }
    edges = start->edges();
    k = start->order();
  }

  auto accepts = [&](const std::vector<int>& neighbors) -> bool {
    std::vector<Edge> trial = edges;
    for (int u : neighbors) trial.emplace_back(u, k);
    WeightedGraph g = build_graph(k + 1, trial);
    const VertexSet scope = local_check ? ball(g, k, radius) : g.vertices();
    return is_free(g, options.forbidden, scope).free;
  };
  auto commit = [&](const std::vector<int>& neighbors) {
    for (int u : neighbors) edges.emplace_back(u, k);
    ++k;
  };

  while (k < options.n) {
    bool placed = false;
    for (int attempt = 0; attempt < options.attempts_per_vertex && !placed; ++attempt) {
      std::vector<int> neighbors;
      for (int u = 0; u < k; ++u) {
        if (edge(rng)) neighbors.push_back(u);
      }
      if (neighbors.empty() && (options.connected && k > 0)) continue;
      if (accepts(neighbors)) {
        commit(neighbors);
        placed = true;
      }
    }
    if (placed) continue;
    if (k == 0 || isolated_ok) {
      commit({});
      continue;
    }
    std::vector<int> order(static_cast<std::size_t>(k));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int u : order) {
      if (accepts({u})) {
        commit({u});
        placed = true;
        break;
      }
    }
    if (!placed) return std::nullopt;
  }
  WeightedGraph shape = build_graph(k, edges);
  return with_weights(shape, random_weights(k, rng, options.min_weight, options.max_weight));
}

std::optional<WeightedGraph> largest_prime_part(const WeightedGraph& g) {
  if (g.empty()) return std::nullopt;
  MDTree tree = modular_decomposition(g);
  const MDNode* best = nullptr;
  find_prime_nodes(tree.root, best);
  if (!best) return std::nullopt;
  return induced_subgraph(g, VertexSet(g.order(), best->representatives)).graph;
}

WeightedGraph generate(const GenSpec& spec) {
  if (spec.n < 0) throw GenerationError("vertex count must be nonnegative, got " + std::to_string(spec.n));
  if (spec.density < 0.0 || spec.density > 1.0) throw GenerationError("density must lie in [0, 1]");
  if (spec.min_weight < 0 || spec.min_weight > spec.max_weight) {
    throw GenerationError("weight range must satisfy 0 <= min <= max");
  }
  if (spec.level && (*spec.level < 0 || *spec.level >= kLevelCount)) {
    throw GenerationError("class level must be in 0..5, got " + std::to_string(*spec.level));
  }
  if (spec.prime && spec.n > 0 && spec.n < 4) {
    throw GenerationError("prime graphs with " + std::to_string(spec.n) + " vertices do not exist");
  }

  std::mt19937_64 rng(spec.seed);
  const std::vector<PatternDef> forbidden = spec.level ? level_patterns(*spec.level) : std::vector<PatternDef>{};
  GrowthOptions growth;
  growth.n = spec.n;
  growth.density = spec.density;
  growth.forbidden = forbidden;
  growth.connected = spec.connected || spec.prime;
  growth.min_weight = spec.min_weight;
  growth.max_weight = spec.max_weight;

  for (int attempt = 0; attempt <= spec.repair_budget; ++attempt) {
    std::optional<WeightedGraph> g;
    if (spec.level) {
      g = grow_free_graph(growth, rng);
    } else {
      g = random_graph(spec.n, spec.density, rng, spec.min_weight, spec.max_weight);
    }
    if (!g) continue;
    if (spec.connected && g->order() > 0 && !is_connected(*g)) continue;
    if (spec.prime && g->order() > 0 && !is_prime(*g)) continue;
    if (spec.level) {
      if (auto verdict = is_free(*g, forbidden); !verdict.free) {
        throw GenerationError("generated graph contains an induced " + verdict.witness->pattern);
      }
    }
    return *std::move(g);
  }
  throw GenerationError("no graph met the prime/connected requirements within " +
                        std::to_string(spec.repair_budget) + " retries");
}

WeightedGraph named_graph(std::string_view name) { return catalog(name).graph(); }

WeightedGraph named_graph(std::string_view name, const PatternCatalog& catalog) { return catalog.get(name).graph(); }

}  // namespace gmwis
