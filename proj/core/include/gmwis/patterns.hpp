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

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gmwis/graph.hpp"

namespace gmwis {

class PatternError : public Error {
 public:
  using Error::Error;
};

/// A known name whose edge list has not been supplied (the H1..H8 slots).
class PatternUnavailable : public PatternError {
 public:
  using PatternError::PatternError;
};

/// Where a pattern's edge list comes from. figure_reconstructed entries are
/// hypotheses: the graph was rebuilt from how the proofs use it.
enum class Provenance { paper_exact, figure_reconstructed, user_supplied };

std::string_view to_string(Provenance p);
Provenance parse_provenance(std::string_view text);

struct PatternDef {
  std::string name;
  int order = 0;
  std::vector<Edge> edges;
  Provenance provenance = Provenance::user_supplied;

  /// Unit-weight graph of the pattern.
  WeightedGraph graph() const;
};

/// Spider S_{i,j,k}: center 0 with paths of i, j and k further vertices.
PatternDef build_sijk(int i, int j, int k);

/// Shipped catalog plus user registrations (which shadow shipped names).
///
/// Parametric names: P<k>, C<k> (k >= 3), K<k>, <k>-apple (k >= 4),
/// S<i>,<j>,<k>. Fixed names: claw, chair (alias fork), co-chair, diamond,
/// gem, twin-C5, C5*, H*. H1..H8 are empty slots until registered.
class PatternCatalog {
 public:
  PatternCatalog() = default;

  PatternDef get(std::string_view name) const;
  bool available(std::string_view name) const;
  void add(PatternDef pattern);

  std::vector<std::string> registered_names() const;
  /// Help text listing what get() accepts.
  std::string available_names() const;

 private:
  std::map<std::string, PatternDef, std::less<>> user_;
};

/// Lookup in a catalog with no user registrations.
PatternDef catalog(std::string_view name);

/// Injective map pattern vertex -> host vertex whose image induces exactly
/// the pattern.
struct Embedding {
  std::vector<int> image;

  VertexSet image_set(int universe) const { return VertexSet(universe, image); }
  /// 1-based host ids in pattern-vertex order.
  std::string to_string() const;
  bool operator==(const Embedding&) const = default;
};

/// Precompiled backtracking search for one pattern. Pattern vertices are
/// visited in a connected order; host candidates are tried in ascending
/// order, so the first embedding found is deterministic.
class InducedMatcher {
 public:
  explicit InducedMatcher(const WeightedGraph& pattern);

  std::optional<Embedding> find(const WeightedGraph& host) const;
  std::optional<Embedding> find(const WeightedGraph& host, const VertexSet& within) const;

  int pattern_order() const { return static_cast<int>(order_.size()); }

 private:
  struct Step {
    int vertex = 0;
    int degree = 0;
    std::vector<int> earlier_adjacent;
    std::vector<int> earlier_nonadjacent;
  };

  bool extend(const WeightedGraph& host, const VertexSet& within, const std::vector<int>& host_degree,
              std::size_t position, std::vector<int>& image, VertexSet& used) const;

  std::vector<int> order_;
  std::vector<Step> steps_;
};

std::optional<Embedding> find_induced(const PatternDef& pattern, const WeightedGraph& host);
std::optional<Embedding> find_induced(const WeightedGraph& pattern, const WeightedGraph& host);
std::optional<Embedding> find_induced(const WeightedGraph& pattern, const WeightedGraph& host,
                                      const VertexSet& within);

/// True when embedding maps the pattern injectively onto an induced copy.
bool is_induced_embedding(const WeightedGraph& pattern, const WeightedGraph& host, const Embedding& embedding);

struct Witness {
  std::string pattern;
  Provenance provenance = Provenance::user_supplied;
  Embedding embedding;
};

struct FreenessResult {
  bool free = true;
  std::optional<Witness> witness;

  explicit operator bool() const { return free; }
};

/// Checks the patterns in the given order and reports the first witness.
FreenessResult is_free(const WeightedGraph& g, std::span<const PatternDef> patterns);
FreenessResult is_free(const WeightedGraph& g, std::span<const PatternDef> patterns, const VertexSet& within);

/// Forbidden patterns of the six nested classes handled by the solver:
///   0: (S1,2,2, S1,1,3, co-chair)-free      1: level 0 + H*-free
///   2: level 1 + gem-free                   3: (S1,2,2, S1,1,3, diamond)-free
///   4: level 3 + 5-apple-free               5: level 4 + C5*-free
std::vector<PatternDef> level_patterns(int level);
inline constexpr int kLevelCount = 6;

/// Membership in the solver's input class (level 0), with a witness.
FreenessResult recognize_input_class(const WeightedGraph& g);

/// Shortest induced odd cycle of length >= 5, in cycle order. Exhaustive
/// search; exponential worst case, intended for small graphs.
std::optional<std::vector<int>> find_shortest_odd_hole(const WeightedGraph& g);
bool has_odd_hole(const WeightedGraph& g);

}  // namespace gmwis
