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


#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace gmwis::testing {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const WeightedGraph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < g.order(); ++v) {
      if (u != v && g.adjacent(u, v)) adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    }
  }
  return adj;
}

bool connected_within(const std::vector<Mask>& adj, Mask within) {
  if (within == 0) return true;
  Mask seen = within & (~within + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == within;
}

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (int v : s) m |= Mask{1} << v;
  return m;
}

bool is_module_mask(const std::vector<Mask>& adj, int n, Mask m) {
  for (int x = 0; x < n; ++x) {
    if (m >> x & 1U) continue;
    const Mask seen = adj[static_cast<std::size_t>(x)] & m;
    if (seen != 0 && seen != m) return false;
  }
  return true;
}

}  // namespace

Weight brute_mwis(const WeightedGraph& g) {
  const int n = g.order();
  const auto adj = adjacency_masks(g);
  Weight best = 0;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool independent = true;
    Weight w = 0;
    for (Mask r = s; r && independent; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (adj[static_cast<std::size_t>(v)] & s) independent = false;
      w += g.weight(v);
    }
    if (independent) best = std::max(best, w);
  }
  return best;
}

bool brute_has_induced(const WeightedGraph& pattern, const WeightedGraph& host) {
  const int k = pattern.order();
  const int n = host.order();
  if (k > n) return false;
  std::vector<int> pattern_degrees;
  for (int v = 0; v < k; ++v) pattern_degrees.push_back(pattern.degree(v));
  std::sort(pattern_degrees.begin(), pattern_degrees.end());

  std::vector<bool> pick(static_cast<std::size_t>(n), false);
  std::fill(pick.begin(), pick.begin() + k, true);
  do {
    std::vector<int> subset;
    for (int v = 0; v < n; ++v) {
      if (pick[static_cast<std::size_t>(v)]) subset.push_back(v);
    }
    std::vector<int> degrees;
    for (int a : subset) {
      int d = 0;
      for (int b : subset) d += (a != b && host.adjacent(a, b)) ? 1 : 0;
      degrees.push_back(d);
    }
    std::sort(degrees.begin(), degrees.end());
    if (degrees != pattern_degrees) continue;
    std::vector<int> order = subset;
    do {
      bool ok = true;
      for (int i = 0; i < k && ok; ++i) {
        for (int j = i + 1; j < k && ok; ++j) {
          ok = pattern.adjacent(i, j) == host.adjacent(order[static_cast<std::size_t>(i)],
                                                       order[static_cast<std::size_t>(j)]);
        }
      }
      if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

std::vector<Mask> brute_nontrivial_modules(const WeightedGraph& g) {
  const int n = g.order();
  const auto adj = adjacency_masks(g);
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> out;
  for (Mask m = 1; m < full; ++m) {
    if (std::popcount(m) >= 2 && is_module_mask(adj, n, m)) out.push_back(m);
  }
  return out;
}

bool brute_is_prime(const WeightedGraph& g) { return g.order() >= 3 && brute_nontrivial_modules(g).empty(); }

bool brute_has_clique_cutset(const WeightedGraph& g) {
  const int n = g.order();
  const auto adj = adjacency_masks(g);
  const Mask full = (Mask{1} << n) - 1;
  for (Mask s = 0; s < full; ++s) {
    bool clique = true;
    for (Mask r = s; r && clique; r &= r - 1) {
      const int v = std::countr_zero(r);
      clique = (adj[static_cast<std::size_t>(v)] & s) == (s & ~(Mask{1} << v));
    }
    if (!clique) continue;
    if (!connected_within(adj, full & ~s)) return true;
  }
  return false;
}

namespace {

std::string check_md_node(const WeightedGraph& g, const std::vector<Mask>& adj, const MDNode& node, int& leaves) {
  const int n = g.order();
  const Mask vertices = to_mask(node.vertices);
  if (!is_module_mask(adj, n, vertices)) return "node " + describe(node.vertices) + " is not a module";
  if (node.kind == NodeKind::leaf) {
    ++leaves;
    if (std::popcount(vertices) != 1 || !node.children.empty()) return "leaf is not a single vertex";
    return {};
  }
  if (node.children.size() < 2) return "internal node with fewer than two children";
  Mask covered = 0;
  std::vector<Mask> parts;
  for (const auto& child : node.children) {
    const Mask c = to_mask(child.vertices);
    if (c & covered) return "children overlap";
    covered |= c;
    parts.push_back(c);
  }
  if (covered != vertices) return "children do not cover the node";

  std::vector<Mask> co_adj(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) co_adj[v] = ~adj[v] & ~(Mask{1} << v) & ((Mask{1} << n) - 1);
  const bool connected = connected_within(adj, vertices);
  const bool co_connected = connected_within(co_adj, vertices);
  switch (node.kind) {
    case NodeKind::parallel:
      if (connected) return "parallel node is connected";
      for (Mask c : parts) {
        if (!connected_within(adj, c)) return "parallel child is not a component";
        for (int v = 0; v < n; ++v) {
          if ((c >> v & 1U) && (adj[static_cast<std::size_t>(v)] & vertices & ~c)) {
            return "parallel children are adjacent";
          }
        }
      }
      break;
    case NodeKind::series:
      if (co_connected) return "series node is co-connected";
      for (Mask c : parts) {
        if (!connected_within(co_adj, c)) return "series child is not a co-component";
        for (int v = 0; v < n; ++v) {
          if ((c >> v & 1U) && ((adj[static_cast<std::size_t>(v)] & vertices & ~c) != (vertices & ~c))) {
            return "series children are not fully joined";
          }
        }
      }
      break;
    case NodeKind::prime: {
      if (!connected || !co_connected) return "prime node is not connected and co-connected";
      for (Mask c : parts) {
        if (!is_module_mask(adj, n, c)) return "prime child is not a module";
      }
      if (node.quotient.order() != static_cast<int>(parts.size())) return "quotient order mismatch";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        const int ri = node.representatives[i];
        if (!(parts[i] >> ri & 1U)) return "representative outside its child";
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
          if (node.quotient.adjacent(static_cast<int>(i), static_cast<int>(j)) !=
              g.adjacent(ri, node.representatives[j])) {
            return "quotient adjacency mismatch";
          }
        }
      }
      if (!brute_is_prime(node.quotient)) return "quotient is not prime";
      break;
    }
    case NodeKind::leaf:
      break;
  }
  for (const auto& child : node.children) {
    if (auto problem = check_md_node(g, adj, child, leaves); !problem.empty()) return problem;
  }
  return {};
}

std::string check_atom_node(const WeightedGraph& g, const std::vector<Mask>& adj, const AtomNode& node,
                            int& internal) {
  const Mask vertices = to_mask(node.vertices);
  if (node.is_leaf()) {
    if (!node.separator.empty()) return "leaf with a separator";
    InducedSubgraph sub = induced_subgraph(g, node.vertices);
    if (brute_has_clique_cutset(sub.graph)) return "leaf " + describe(node.vertices) + " has a clique cutset";
    return {};
  }
  ++internal;
  if (node.children.size() != 2) return "internal node without two children";
  const Mask sep = to_mask(node.separator);
  const Mask a = to_mask(node.children[0].vertices);
  const Mask b = to_mask(node.children[1].vertices);
  if ((a | b) != vertices) return "children do not cover the node";
  if ((a & b) != sep) return "children do not overlap exactly in the separator";
  if ((a & ~sep) == 0 || (b & ~sep) == 0) return "separator leaves an empty side";
  for (Mask r = sep; r; r &= r - 1) {
    const int v = std::countr_zero(r);
    if ((adj[static_cast<std::size_t>(v)] & sep) != (sep & ~(Mask{1} << v))) return "separator is not a clique";
  }
  for (Mask r = a & ~sep; r; r &= r - 1) {
    if (adj[static_cast<std::size_t>(std::countr_zero(r))] & b & ~sep) return "separator does not separate";
  }
  for (const auto& child : node.children) {
    if (auto problem = check_atom_node(g, adj, child, internal); !problem.empty()) return problem;
  }
  return {};
}

}  // namespace

std::string validate_md_tree(const WeightedGraph& g, const MDTree& tree) {
  const auto adj = adjacency_masks(g);
  if (tree.root.vertices != g.vertices()) return "root does not hold every vertex";
  int leaves = 0;
  if (auto problem = check_md_node(g, adj, tree.root, leaves); !problem.empty()) return problem;
  if (leaves != g.order()) return "leaf count differs from vertex count";
  return {};
}

std::string validate_atom_tree(const WeightedGraph& g, const AtomTree& tree) {
  const auto adj = adjacency_masks(g);
  if (tree.root.vertices != g.vertices()) return "root does not hold every vertex";
  int internal = 0;
  if (auto problem = check_atom_node(g, adj, tree.root, internal); !problem.empty()) return problem;
  if (internal != tree.internal_count()) return "internal_count disagrees with the tree";
  if (internal > g.order()) return "more separators than vertices";
  return {};
}

WeightedGraph random_weighted_graph(int n, double p, std::mt19937_64& rng, Weight lo, Weight hi) {
  std::bernoulli_distribution edge(p);
  std::uniform_int_distribution<Weight> weight(lo, hi);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.emplace_back(u, v);
    }
  }
  std::vector<Weight> w(static_cast<std::size_t>(n));
  for (auto& x : w) x = weight(rng);
  return build_graph(n, edges, w);
}

std::vector<std::string> catalog_names() {
  return {"claw",   "chair", "co-chair", "diamond", "gem", "S1,2,2", "S1,1,3", "4-apple", "5-apple", "twin-C5",
          "C5*",    "H*",    "P4",       "P5",      "C4",  "C5",     "C6",     "K3",      "K4"};
}

}  // namespace gmwis::testing
