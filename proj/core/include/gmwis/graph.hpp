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
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gmwis/vertex_set.hpp"

namespace gmwis {

using Weight = std::int64_t;
using Edge = std::pair<int, int>;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid graph construction or an out-of-range vertex argument.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Weight sum that does not fit in Weight.
class OverflowError : public Error {
 public:
  using Error::Error;
};

Weight checked_add(Weight a, Weight b);

struct InducedSubgraph;

/// Simple undirected graph on vertices 0..n-1 with nonnegative integer
/// vertex weights. Immutable once built; "deleting" vertices goes through
/// induced_subgraph, which yields a new graph plus an index map.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  int order() const { return static_cast<int>(weights_.size()); }
  int edge_count() const { return edge_count_; }
  bool empty() const { return weights_.empty(); }

  bool adjacent(int u, int v) const { return adjacency_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(int v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return adjacency_[static_cast<std::size_t>(v)].size(); }

  Weight weight(int v) const { return weights_[static_cast<std::size_t>(v)]; }
  std::span<const Weight> weights() const { return weights_; }

  VertexSet vertices() const { return VertexSet::full(order()); }
  VertexSet empty_set() const { return VertexSet(order()); }

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// Sum of weights over s, with overflow checking.
  Weight total_weight(const VertexSet& s) const;

  void check_vertex(int v) const;
  void check_subset(const VertexSet& s) const;

  bool operator==(const WeightedGraph& other) const = default;

 private:
  friend WeightedGraph build_graph(int n, std::span<const Edge> edges, std::span<const Weight> weights);
  friend WeightedGraph with_weights(const WeightedGraph& g, std::span<const Weight> weights);
  friend InducedSubgraph induced_subgraph(const WeightedGraph& g, const VertexSet& s);
  friend WeightedGraph complement(const WeightedGraph& g);

  std::vector<VertexSet> adjacency_;
  std::vector<Weight> weights_;
  int edge_count_ = 0;
};

/// Builds a graph; duplicate pairs collapse to one edge. Throws GraphError
/// naming the offending endpoint, self-loop or weight.
WeightedGraph build_graph(int n, std::span<const Edge> edges, std::span<const Weight> weights);

/// Unit weights.
WeightedGraph build_graph(int n, std::span<const Edge> edges);

/// Same adjacency, new weights.
WeightedGraph with_weights(const WeightedGraph& g, std::span<const Weight> weights);

struct InducedSubgraph {
  WeightedGraph graph;
  /// new index -> index in the parent graph (ascending).
  std::vector<int> to_parent;
  /// parent index -> new index, or -1 when not kept.
  std::vector<int> from_parent;

  /// Maps a set over the subgraph back into the parent's index space.
  VertexSet lift(const VertexSet& local) const;
};

/// Restriction to s, re-indexed densely in ascending parent order.
InducedSubgraph induced_subgraph(const WeightedGraph& g, const VertexSet& s);

WeightedGraph complement(const WeightedGraph& g);

VertexSet open_neighborhood(const WeightedGraph& g, int v);
VertexSet closed_neighborhood(const WeightedGraph& g, int v);
/// V(G) minus N[v].
VertexSet anti_neighborhood(const WeightedGraph& g, int v);

/// Vertices outside s adjacent to some vertex of s.
VertexSet neighborhood_of(const WeightedGraph& g, const VertexSet& s);

/// Components of G[within], each as a set; ordered by smallest member.
std::vector<VertexSet> connected_components(const WeightedGraph& g, const VertexSet& within);
std::vector<VertexSet> connected_components(const WeightedGraph& g);
bool is_connected(const WeightedGraph& g);

bool is_clique(const WeightedGraph& g, const VertexSet& s);
bool is_independent(const WeightedGraph& g, const VertexSet& s);

/// Human readable form of a vertex list for diagnostics ("{1,4,5}"), 1-based.
std::string describe(const VertexSet& s);

}  // namespace gmwis
