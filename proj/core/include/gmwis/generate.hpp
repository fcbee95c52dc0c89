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
#include <optional>
#include <random>
#include <span>
#include <string_view>

#include "gmwis/graph.hpp"
#include "gmwis/patterns.hpp"

namespace gmwis {

class GenerationError : public Error {
 public:
  using Error::Error;
};

struct GenSpec {
  /// Class level 0..5, or nothing for unrestricted G(n, p) graphs.
  std::optional<int> level;
  int n = 0;
  double density = 0.5;
  std::uint64_t seed = 0;
  bool prime = false;
  bool connected = false;
  /// Whole-graph retries before giving up on the prime/connected filters.
  int repair_budget = 2000;
  Weight min_weight = 0;
  Weight max_weight = 100;
};

/// Deterministic per spec. The result is checked against the class before
/// it is returned.
WeightedGraph generate(const GenSpec& spec);

/// G(n, p) with weights uniform in [min_weight, max_weight].
WeightedGraph random_graph(int n, double density, std::mt19937_64& rng, Weight min_weight = 1,
                           Weight max_weight = 1);

struct GrowthOptions {
  int n = 0;
  double density = 0.5;
  std::span<const PatternDef> forbidden;
  /// Every added vertex gets at least one neighbor.
  bool connected = false;
  int attempts_per_vertex = 48;
  Weight min_weight = 0;
  Weight max_weight = 100;
};

/// Adds vertices one at a time with random neighborhoods, rejecting any
/// neighborhood that creates a forbidden induced subgraph. Starts from
/// `start` (which must be free) when given. Nothing when some vertex cannot
/// be placed; without the connected option an isolated vertex is always
/// accepted as long as every forbidden pattern is connected.
std::optional<WeightedGraph> grow_free_graph(const GrowthOptions& options, std::mt19937_64& rng,
                                             const WeightedGraph* start = nullptr);

/// The induced subgraph on the representatives of the largest prime node of
/// the modular decomposition, keeping g's weights. Nothing for cographs.
std::optional<WeightedGraph> largest_prime_part(const WeightedGraph& g);

/// Unit-weight copy of a catalog pattern.
WeightedGraph named_graph(std::string_view name);
WeightedGraph named_graph(std::string_view name, const PatternCatalog& catalog);

}  // namespace gmwis
