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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gmwis/graph.hpp"

namespace gmwis {

class DecompositionError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Modular decomposition
// ---------------------------------------------------------------------------

/// No vertex outside m distinguishes two vertices of m.
bool is_module(const WeightedGraph& g, const VertexSet& m);

/// Smallest module of g containing x.
VertexSet module_closure(const WeightedGraph& g, const VertexSet& x);

/// A module m with 1 < |m| < n, or nothing when g is prime or n <= 2. Pairs
/// are tried in lexicographic order and the closure of the first pair whose
/// closure is proper is returned.
std::optional<VertexSet> find_nontrivial_module(const WeightedGraph& g);

/// Only trivial modules and at least three vertices.
bool is_prime(const WeightedGraph& g);

enum class NodeKind { leaf, parallel, series, prime };
std::string_view to_string(NodeKind kind);

struct MDNode {
  NodeKind kind = NodeKind::leaf;
  VertexSet vertices;
  /// Ordered by smallest member.
  std::vector<MDNode> children;
  /// Prime nodes only: vertex i stands for children[i] (unit weights).
  WeightedGraph quotient;
  /// Prime nodes only: smallest vertex of each child, which spans the quotient.
  std::vector<int> representatives;

  /// The vertex of a leaf.
  int vertex() const { return vertices.first(); }
};

struct MDTree {
  MDNode root;
};

/// Recursive decomposition into parallel (disconnected), series
/// (co-disconnected) and prime nodes; the children of a prime node are its
/// maximal strong modules. Requires at least one vertex.
MDTree modular_decomposition(const WeightedGraph& g);

/// Indented text, one node per line: "<kind> <1-based vertex ids>".
std::string render(const MDTree& tree);

// ---------------------------------------------------------------------------
// Clique cutset decomposition
// ---------------------------------------------------------------------------

struct CliqueCutset {
  VertexSet clique;
  /// One component of G - clique.
  VertexSet side;
};

enum class CutsetSearch {
  /// Candidate separators are the higher fill-neighborhoods of a minimal
  /// elimination ordering (MCS-M); polynomial.
  minimal_ordering,
  /// Every clique is tried; exponential, meant to cross-check small graphs.
  exhaustive,
};

/// A clique whose removal disconnects g, with the smallest component side
/// among the candidates examined. Nothing when g is an atom. Throws
/// DecompositionError on disconnected input.
std::optional<CliqueCutset> find_clique_cutset(const WeightedGraph& g,
                                               CutsetSearch search = CutsetSearch::minimal_ordering);

struct AtomNode {
  VertexSet vertices;
  /// Empty for leaves.
  VertexSet separator;
  /// Either empty (an atom) or two children: side + separator, and the rest.
  std::vector<AtomNode> children;

  bool is_leaf() const { return children.empty(); }
};

struct AtomTree {
  AtomNode root;

  std::vector<VertexSet> atoms() const;
  int internal_count() const;
};

/// Splits along clique cutsets until every leaf is an atom. Requires a
/// connected graph.
AtomTree clique_cutset_decompose(const WeightedGraph& g, CutsetSearch search = CutsetSearch::minimal_ordering);

/// Indented text: "cutset <ids> | sep <ids>" for internal nodes and
/// "atom <ids>" for leaves (1-based ids).
std::string render(const AtomTree& tree);

}  // namespace gmwis
