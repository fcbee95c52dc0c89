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

#include <vector>

#include "gmwis/graph.hpp"

namespace gmwis::testing {

inline WeightedGraph make_graph(int n, std::vector<Edge> edges, std::vector<Weight> weights = {}) {
  if (weights.empty()) weights.assign(static_cast<std::size_t>(n), 1);
  return build_graph(n, edges, weights);
}

inline WeightedGraph path(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return make_graph(n, edges);
}

inline WeightedGraph cycle(int n, std::vector<Weight> weights = {}) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return make_graph(n, edges, std::move(weights));
}

inline WeightedGraph clique(int n, std::vector<Weight> weights = {}) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return make_graph(n, edges, std::move(weights));
}

inline WeightedGraph edgeless(int n, Weight w = 1) {
  return make_graph(n, {}, std::vector<Weight>(static_cast<std::size_t>(n), w));
}

}  // namespace gmwis::testing
