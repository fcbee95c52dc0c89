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
#include <random>
#include <string>
#include <vector>

#include "gmwis/decomposition.hpp"
#include "gmwis/graph.hpp"

// Brute-force references. They only read adjacency and weights from the
// graph and share no algorithm with the library.
namespace gmwis::testing {

/// Heaviest independent set over all 2^n subsets (n <= 22).
Weight brute_mwis(const WeightedGraph& g);

/// Whether some k-subset of the host, in some order, reproduces the pattern
/// exactly (edges and non-edges).
bool brute_has_induced(const WeightedGraph& pattern, const WeightedGraph& host);

/// Every module of g with 2 <= |M| < n, by direct definition check.
std::vector<std::uint32_t> brute_nontrivial_modules(const WeightedGraph& g);
bool brute_is_prime(const WeightedGraph& g);

/// Whether some clique S leaves g - S disconnected (g connected, n <= 16).
bool brute_has_clique_cutset(const WeightedGraph& g);

/// Checks an MD tree against the definitions; returns an empty string when
/// valid, else the first problem found.
std::string validate_md_tree(const WeightedGraph& g, const MDTree& tree);

/// Checks an atom tree of a connected graph: separators are cliques that
/// separate, children overlap exactly in the separator, leaves are atoms.
std::string validate_atom_tree(const WeightedGraph& g, const AtomTree& tree);

/// G(n, p) with weights in [lo, hi], built through the public constructor.
WeightedGraph random_weighted_graph(int n, double p, std::mt19937_64& rng, Weight lo = 0, Weight hi = 100);

/// Shipped pattern names exercised by the detector checks.
std::vector<std::string> catalog_names();

}  // namespace gmwis::testing
