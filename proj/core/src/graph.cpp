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

#include <algorithm>

namespace gmwis {

Weight checked_add(Weight a, Weight b) {
  Weight out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("weight sum overflows: " + std::to_string(a) + " + " + std::to_string(b));
  }
  return out;
}

std::vector<Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < order(); ++u) {
    for (int v = neighbors(u).next(u); v != -1; v = neighbors(u).next(v)) out.emplace_back(u, v);
  }
  return out;
}

Weight WeightedGraph::total_weight(const VertexSet& s) const {
  check_subset(s);
  Weight total = 0;
  for (int v : s) total = checked_add(total, weight(v));
  return total;
}

void WeightedGraph::check_vertex(int v) const {
  if (v < 0 || v >= order()) {
    throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                     std::to_string(order()));
  }
}

void WeightedGraph::check_subset(const VertexSet& s) const {
  if (s.universe() != order()) {
    throw GraphError("vertex set over universe " + std::to_string(s.universe()) +
                     " does not match graph of order " + std::to_string(order()));
  }
}

WeightedGraph build_graph(int n, std::span<const Edge> edges, std::span<const Weight> weights) {
  if (n < 0) throw GraphError("negative vertex count " + std::to_string(n));
  if (weights.size() != static_cast<std::size_t>(n)) {
    throw GraphError("expected " + std::to_string(n) + " weights, got " + std::to_string(weights.size()));
  }
  WeightedGraph g;
  g.weights_.assign(weights.begin(), weights.end());
  for (int v = 0; v < n; ++v) {
    if (g.weights_[static_cast<std::size_t>(v)] < 0) {
      throw GraphError("negative weight " + std::to_string(g.weights_[static_cast<std::size_t>(v)]) +
                       " on vertex " + std::to_string(v));
    }
  }
  g.adjacency_.assign(static_cast<std::size_t>(n), VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint out of range 0.." + std::to_string(n - 1));
    }
    if (u == v) throw GraphError("self-loop on vertex " + std::to_string(u));
    if (!g.adjacency_[static_cast<std::size_t>(u)].contains(v)) {
      g.adjacency_[static_cast<std::size_t>(u)].insert(v);
      g.adjacency_[static_cast<std::size_t>(v)].insert(u);
      ++g.edge_count_;
    }
  }
  return g;
}

WeightedGraph build_graph(int n, std::span<const Edge> edges) {
  std::vector<Weight> unit(static_cast<std::size_t>(std::max(n, 0)), 1);
  return build_graph(n, edges, unit);
}

WeightedGraph with_weights(const WeightedGraph& g, std::span<const Weight> weights) {
  if (weights.size() != static_cast<std::size_t>(g.order())) {
    throw GraphError("expected " + std::to_string(g.order()) + " weights, got " +
                     std::to_string(weights.size()));
  }
  WeightedGraph out = g;
  out.weights_.assign(weights.begin(), weights.end());
  for (int v = 0; v < out.order(); ++v) {
    if (out.weight(v) < 0) {
      throw GraphError("negative weight " + std::to_string(out.weight(v)) + " on vertex " + std::to_string(v));
    }
  }
  return out;
}

VertexSet InducedSubgraph::lift(const VertexSet& local) const {
  VertexSet out(static_cast<int>(from_parent.size()));
  for (int v : local) out.insert(to_parent[static_cast<std::size_t>(v)]);
  return out;
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, const VertexSet& s) {
  g.check_subset(s);
  InducedSubgraph out;
  out.to_parent = s.to_vector();
  out.from_parent.assign(static_cast<std::size_t>(g.order()), -1);
  const int k = static_cast<int>(out.to_parent.size());
  for (int i = 0; i < k; ++i) out.from_parent[static_cast<std::size_t>(out.to_parent[static_cast<std::size_t>(i)])] = i;

  WeightedGraph& h = out.graph;
  h.weights_.reserve(static_cast<std::size_t>(k));
  h.adjacency_.assign(static_cast<std::size_t>(k), VertexSet(k));
  for (int i = 0; i < k; ++i) {
    const int parent = out.to_parent[static_cast<std::size_t>(i)];
    h.weights_.push_back(g.weight(parent));
    for (int u : g.neighbors(parent) & s) {
      const int j = out.from_parent[static_cast<std::size_t>(u)];
      h.adjacency_[static_cast<std::size_t>(i)].insert(j);
      if (j > i) ++h.edge_count_;
    }
  }
  return out;
}

WeightedGraph complement(const WeightedGraph& g) {
  WeightedGraph out = g;
  out.edge_count_ = 0;
  for (int v = 0; v < g.order(); ++v) {
    VertexSet row = g.neighbors(v).complement();
    row.erase(v);
    out.edge_count_ += row.size();
    out.adjacency_[static_cast<std::size_t>(v)] = std::move(row);
  }
  out.edge_count_ /= 2;
  return out;
}

VertexSet open_neighborhood(const WeightedGraph& g, int v) {
  g.check_vertex(v);
  return g.neighbors(v);
}

VertexSet closed_neighborhood(const WeightedGraph& g, int v) {
  VertexSet out = open_neighborhood(g, v);
  out.insert(v);
  return out;
}

VertexSet anti_neighborhood(const WeightedGraph& g, int v) {
  return closed_neighborhood(g, v).complement();
}

VertexSet neighborhood_of(const WeightedGraph& g, const VertexSet& s) {
  g.check_subset(s);
  VertexSet out(g.order());
  for (int v : s) out |= g.neighbors(v);
  return out - s;
}

std::vector<VertexSet> connected_components(const WeightedGraph& g, const VertexSet& within) {
  g.check_subset(within);
  std::vector<VertexSet> out;
  VertexSet unvisited = within;
  while (!unvisited.empty()) {
    VertexSet component(g.order());
    VertexSet frontier(g.order());
    frontier.insert(unvisited.first());
    while (!frontier.empty()) {
      component |= frontier;
      unvisited -= frontier;
      VertexSet grown(g.order());
      for (int v : frontier) grown |= g.neighbors(v);
      frontier = grown & unvisited;
    }
    out.push_back(std::move(component));
  }
  return out;
}

std::vector<VertexSet> connected_components(const WeightedGraph& g) {
  return connected_components(g, g.vertices());
}

bool is_connected(const WeightedGraph& g) { return connected_components(g).size() <= 1; }

bool is_clique(const WeightedGraph& g, const VertexSet& s) {
  g.check_subset(s);
  for (int v : s) {
    VertexSet others = s;
    others.erase(v);
    if (!others.is_subset_of(g.neighbors(v))) return false;
  }
  return true;
}

bool is_independent(const WeightedGraph& g, const VertexSet& s) {
  g.check_subset(s);
  for (int v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

std::string describe(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  }
  return out + "}";
}

}  // namespace gmwis
