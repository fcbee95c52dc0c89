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

#include <compare>
#include <cstdint>
#include <functional>

#include "gmwis/graph.hpp"

namespace gmwis {

inline constexpr int kMaxCanonicalOrder = 11;

/// Isomorphism-invariant code of an unweighted graph on at most
/// kMaxCanonicalOrder vertices: the maximum upper-triangle adjacency word
/// over all labelings that respect the color-refined vertex partition.
struct CanonicalCode {
  int order = 0;
  std::uint64_t bits = 0;

  auto operator<=>(const CanonicalCode&) const = default;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const {
    return std::hash<std::uint64_t>{}(c.bits * 31 + static_cast<std::uint64_t>(c.order));
  }
};

/// Ignores weights. Throws GraphError above kMaxCanonicalOrder vertices.
CanonicalCode canonical_code(const WeightedGraph& g);

/// The graph whose labeling realizes the code (unit weights).
WeightedGraph from_canonical_code(const CanonicalCode& code);

bool isomorphic(const WeightedGraph& a, const WeightedGraph& b);

}  // namespace gmwis
