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

#include <algorithm>
#include <limits>
#include <sstream>

namespace gmwis {

namespace {

/// Smallest module of G[within] containing x (x is a subset of within).
VertexSet closure_within(const WeightedGraph& g, const VertexSet& within, VertexSet x) {
  bool grown = true;
  while (grown) {
    grown = false;
    const int size = x.size();
    for (int z : within - x) {
      const int seen = g.neighbors(z).intersection_size(x);
      if (seen != 0 && seen != size) {
        x.insert(z);
        grown = true;
        break;
      }
    }
  }
  return x;
}

/// Components of the complement of G[within].
std::vector<VertexSet> co_components(const WeightedGraph& g, const VertexSet& within) {
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
      for (int v : frontier) grown |= unvisited - g.neighbors(v);
      frontier = grown & unvisited;
    }
    out.push_back(std::move(component));
  }
  return out;
}

MDNode decompose(const WeightedGraph& g, const VertexSet& s);

MDNode make_node(const WeightedGraph& g, NodeKind kind, const VertexSet& s, const std::vector<VertexSet>& parts) {
  MDNode node;
  node.kind = kind;
  node.vertices = s;
  for (const auto& part : parts) node.children.push_back(decompose(g, part));
  return node;
}

MDNode decompose(const WeightedGraph& g, const VertexSet& s) {
  if (s.size() == 1) {
    MDNode leaf;
    leaf.vertices = s;
    return leaf;
  }
  auto components = connected_components(g, s);
  if (components.size() > 1) return make_node(g, NodeKind::parallel, s, components);
  auto co = co_components(g, s);
  if (co.size() > 1) return make_node(g, NodeKind::series, s, co);

  // G[s] and its complement are connected: the maximal proper modules
  // partition s, and u, v share one exactly when closure({u, v}) != s.
  std::vector<VertexSet> parts;
  VertexSet unassigned = s;
  while (!unassigned.empty()) {
    const int v = unassigned.first();
    VertexSet part(g.order());
    part.insert(v);
    for (int u : unassigned) {
      if (u == v || part.contains(u)) continue;
      VertexSet pair(g.order(), {u, v});
      VertexSet closed = closure_within(g, s, pair);
      if (closed != s) part |= closed;
    }
    unassigned -= part;
    parts.push_back(std::move(part));
  }
  std::sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  MDNode node = make_node(g, NodeKind::prime, s, parts);
  VertexSet reps(g.order());
  for (const auto& child : node.children) {
    node.representatives.push_back(child.vertices.first());
    reps.insert(child.vertices.first());
  }
  InducedSubgraph q = induced_subgraph(g, reps);
  std::vector<Weight> unit(static_cast<std::size_t>(q.graph.order()), 1);
  node.quotient = with_weights(q.graph, unit);
  return node;
}

void render_md(const MDNode& node, int depth, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << to_string(node.kind) << ' '
      << node.vertices.to_string(1) << '\n';
  for (const auto& child : node.children) render_md(child, depth + 1, out);
}

/// Minimal elimination ordering by MCS-M, with the higher fill-neighborhood
/// of every vertex.
struct EliminationOrder {
  std::vector<int> order;           // elimination position -> vertex
  std::vector<VertexSet> higher;    // vertex -> later-eliminated fill neighbors
};

EliminationOrder mcs_m(const WeightedGraph& g) {
  const int n = g.order();
  constexpr int kUnreached = std::numeric_limits<int>::max();
  EliminationOrder out;
  out.order.assign(static_cast<std::size_t>(n), -1);
  out.higher.assign(static_cast<std::size_t>(n), VertexSet(n));
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  VertexSet unnumbered = g.vertices();
  for (int position = n - 1; position >= 0; --position) {
    int v = -1;
    for (int u : unnumbered) {
      if (v == -1 || label[static_cast<std::size_t>(u)] > label[static_cast<std::size_t>(v)]) v = u;
    }
    unnumbered.erase(v);
    out.order[static_cast<std::size_t>(position)] = v;

    // bottleneck[u]: least possible maximum label over the interior of a
    // path v..u through unnumbered vertices (-1 for direct neighbors).
    std::vector<int> bottleneck(static_cast<std::size_t>(n), kUnreached);
    VertexSet open(n);
    for (int u : g.neighbors(v) & unnumbered) {
      bottleneck[static_cast<std::size_t>(u)] = -1;
      open.insert(u);
    }
    VertexSet done(n);
    while (!open.empty()) {
      int x = -1;
      for (int u : open) {
        if (x == -1 || bottleneck[static_cast<std::size_t>(u)] < bottleneck[static_cast<std::size_t>(x)]) x = u;
      }
      open.erase(x);
      done.insert(x);
      const int through = std::max(bottleneck[static_cast<std::size_t>(x)], label[static_cast<std::size_t>(x)]);
      for (int y : (g.neighbors(x) & unnumbered) - done) {
        if (through < bottleneck[static_cast<std::size_t>(y)]) {
          bottleneck[static_cast<std::size_t>(y)] = through;
          open.insert(y);
        }
      }
    }
    for (int u : unnumbered) {
      if (bottleneck[static_cast<std::size_t>(u)] < label[static_cast<std::size_t>(u)]) {
        out.higher[static_cast<std::size_t>(u)].insert(v);
      }
    }
    for (int u : unnumbered) {
      if (out.higher[static_cast<std::size_t>(u)].contains(v)) ++label[static_cast<std::size_t>(u)];
    }
  }
  return out;
}

/// Component of G - clique containing v.
VertexSet component_of(const WeightedGraph& g, const VertexSet& outside, int v) {
  for (auto& c : connected_components(g, outside)) {
    if (c.contains(v)) return c;
  }
  return VertexSet(g.order());
}

std::optional<CliqueCutset> cutset_by_ordering(const WeightedGraph& g) {
  EliminationOrder elimination = mcs_m(g);
  std::optional<CliqueCutset> best;
  for (int v : elimination.order) {
    const VertexSet& c = elimination.higher[static_cast<std::size_t>(v)];
    if (c.empty() || !is_clique(g, c)) continue;
    VertexSet side = component_of(g, g.vertices() - c, v);
    if (side.size() + c.size() == g.order()) continue;
    if (!best || side.size() < best->side.size()) best = CliqueCutset{c, side};
  }
  return best;
}

void extend_cliques(const WeightedGraph& g, VertexSet& clique, VertexSet candidates,
                    std::optional<CliqueCutset>& best) {
  if (!clique.empty()) {
    auto parts = connected_components(g, g.vertices() - clique);
    if (parts.size() > 1) {
      const auto smallest = std::min_element(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) {
        return a.size() < b.size();
      });
      if (!best || smallest->size() < best->side.size()) best = CliqueCutset{clique, *smallest};
    }
  }
  for (int v : candidates) {
    candidates.erase(v);
    clique.insert(v);
    extend_cliques(g, clique, candidates & g.neighbors(v), best);
    clique.erase(v);
  }
}

std::optional<CliqueCutset> cutset_exhaustive(const WeightedGraph& g) {
  std::optional<CliqueCutset> best;
  VertexSet clique(g.order());
  extend_cliques(g, clique, g.vertices(), best);
  return best;
}

AtomNode decompose_atoms(const WeightedGraph& g, const VertexSet& s, CutsetSearch search) {
  AtomNode node;
  node.vertices = s;
  node.separator = VertexSet(g.order());
  InducedSubgraph sub = induced_subgraph(g, s);
  auto cut = find_clique_cutset(sub.graph, search);
  if (!cut) return node;
  node.separator = sub.lift(cut->clique);
  const VertexSet side = sub.lift(cut->side);
  node.children.push_back(decompose_atoms(g, side | node.separator, search));
  node.children.push_back(decompose_atoms(g, s - side, search));
  return node;
}

void collect_atoms(const AtomNode& node, std::vector<VertexSet>& out) {
  if (node.is_leaf()) {
    out.push_back(node.vertices);
    return;
  }
  for (const auto& child : node.children) collect_atoms(child, out);
}

int count_internal(const AtomNode& node) {
  int count = node.is_leaf() ? 0 : 1;
  for (const auto& child : node.children) count += count_internal(child);
  return count;
}

void render_atoms(const AtomNode& node, int depth, std::ostringstream& out) {
  out << std::string(static_cast<std::size_t>(depth) * 2, ' ');
  if (node.is_leaf()) {
    out << "atom " << node.vertices.to_string(1) << '\n';
    return;
  }
  out << "cutset " << node.vertices.to_string(1) << " | sep " << node.separator.to_string(1) << '\n';
  for (const auto& child : node.children) render_atoms(child, depth + 1, out);
}

}  // namespace

bool is_module(const WeightedGraph& g, const VertexSet& m) {
  g.check_subset(m);
  const int size = m.size();
  for (int z : m.complement()) {
    const int seen = g.neighbors(z).intersection_size(m);
    if (seen != 0 && seen != size) return false;
  }
  return true;
}

VertexSet module_closure(const WeightedGraph& g, const VertexSet& x) {
  g.check_subset(x);
  return closure_within(g, g.vertices(), x);
}

std::optional<VertexSet> find_nontrivial_module(const WeightedGraph& g) {
  const int n = g.order();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      VertexSet m = module_closure(g, VertexSet(n, {u, v}));
      if (m.size() < n) return m;
    }
  }
  return std::nullopt;
}

bool is_prime(const WeightedGraph& g) { return g.order() >= 3 && !find_nontrivial_module(g); }

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::leaf:
      return "leaf";
    case NodeKind::parallel:
      return "parallel";
    case NodeKind::series:
      return "series";
    case NodeKind::prime:
      return "prime";
  }
  return "leaf";
}

MDTree modular_decomposition(const WeightedGraph& g) {
  if (g.empty()) throw DecompositionError("modular decomposition needs at least one vertex");
  return MDTree{decompose(g, g.vertices())};
}

std::string render(const MDTree& tree) {
  std::ostringstream out;
  render_md(tree.root, 0, out);
  return out.str();
}

std::optional<CliqueCutset> find_clique_cutset(const WeightedGraph& g, CutsetSearch search) {
  if (!is_connected(g)) {
    throw DecompositionError("clique cutset search needs a connected graph; split components first");
  }
  if (g.order() <= 2) return std::nullopt;
  return search == CutsetSearch::exhaustive ? cutset_exhaustive(g) : cutset_by_ordering(g);
}

std::vector<VertexSet> AtomTree::atoms() const {
  std::vector<VertexSet> out;
  collect_atoms(root, out);
  return out;
}

int AtomTree::internal_count() const { return count_internal(root); }

AtomTree clique_cutset_decompose(const WeightedGraph& g, CutsetSearch search) {
  if (!is_connected(g)) {
    throw DecompositionError("clique cutset decomposition needs a connected graph; split components first");
  }
  return AtomTree{decompose_atoms(g, g.vertices(), search)};
}

std::string render(const AtomTree& tree) {
  std::ostringstream out;
  render_atoms(tree.root, 0, out);
  return out.str();
}

}  // namespace gmwis
