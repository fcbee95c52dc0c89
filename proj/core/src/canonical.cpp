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

#include "gmwis/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

namespace gmwis {

namespace {

int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

/// Iterated degree refinement; returns a color per vertex such that color
/// classes are isomorphism invariant and ordered.
std::vector<int> refine_colors(const WeightedGraph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = g.degree(v);
  int classes = -1;
  while (true) {
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& s = signature[static_cast<std::size_t>(v)];
      s.push_back(color[static_cast<std::size_t>(v)]);
      std::vector<int> around;
      for (int u : g.neighbors(v)) around.push_back(color[static_cast<std::size_t>(u)]);
      std::sort(around.begin(), around.end());
      s.insert(s.end(), around.begin(), around.end());
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& s : signature) ids.emplace(s, 0);
    int next = 0;
    for (auto& [_, id] : ids) id = next++;
    for (int v = 0; v < n; ++v) color[static_cast<std::size_t>(v)] = ids[signature[static_cast<std::size_t>(v)]];
    if (next == classes) break;
    classes = next;
  }
  return color;
}

struct Search {
  const WeightedGraph& g;
  int n;
  int total_bits;
  std::vector<std::vector<int>> cell_of_position;  // candidate vertices per position
  std::vector<int> perm;
  std::vector<bool> used;
  std::optional<std::uint64_t> best;

  std::uint64_t prefix(std::uint64_t bits, int length) const {
    if (length == 0) return 0;
    return bits >> (total_bits - length);
  }

  void run(int position, std::uint64_t bits) {
    if (position == n) {
      if (!best || bits > *best) best = bits;
      return;
    }
    const int length = position * (position + 1) / 2;
    for (int u : cell_of_position[static_cast<std::size_t>(position)]) {
      if (used[static_cast<std::size_t>(u)]) continue;
      std::uint64_t next = bits;
      for (int i = 0; i < position; ++i) {
        if (g.adjacent(perm[static_cast<std::size_t>(i)], u)) {
          next |= std::uint64_t{1} << (total_bits - 1 - pair_index(i, position));
        }
      }
      if (best && prefix(next, length) < prefix(*best, length)) continue;
      perm[static_cast<std::size_t>(position)] = u;
      used[static_cast<std::size_t>(u)] = true;
      run(position + 1, next);
      used[static_cast<std::size_t>(u)] = false;
    }
  }
};

}  // namespace

CanonicalCode canonical_code(const WeightedGraph& g) {
  const int n = g.order();
  if (n > kMaxCanonicalOrder) {
    throw GraphError("canonical form supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices, got " +
                     std::to_string(n));
  }
  if (n <= 1) return CanonicalCode{n, 0};
  std::vector<int> color = refine_colors(g);
  std::vector<int> by_color(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) by_color[static_cast<std::size_t>(v)] = v;
  std::stable_sort(by_color.begin(), by_color.end(), [&](int a, int b) {
    return color[static_cast<std::size_t>(a)] < color[static_cast<std::size_t>(b)];
  });

  Search search{g, n, n * (n - 1) / 2, {}, std::vector<int>(static_cast<std::size_t>(n), -1),
                std::vector<bool>(static_cast<std::size_t>(n), false), std::nullopt};
  search.cell_of_position.resize(static_cast<std::size_t>(n));
  for (int position = 0; position < n; ++position) {
    const int c = color[static_cast<std::size_t>(by_color[static_cast<std::size_t>(position)])];
    for (int v : by_color) {
      if (color[static_cast<std::size_t>(v)] == c) search.cell_of_position[static_cast<std::size_t>(position)].push_back(v);
    }
  }
  search.run(0, 0);
  return CanonicalCode{n, *search.best};
}

WeightedGraph from_canonical_code(const CanonicalCode& code) {
  const int n = code.order;
  const int total = n * (n - 1) / 2;
  std::vector<Edge> edges;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if ((code.bits >> (total - 1 - pair_index(i, j))) & 1U) edges.emplace_back(i, j);
    }
  }
  return build_graph(n, edges);
}

bool isomorphic(const WeightedGraph& a, const WeightedGraph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_code(a) == canonical_code(b);
}

}  // namespace gmwis
