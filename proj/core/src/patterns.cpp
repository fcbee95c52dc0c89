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

#include "gmwis/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace gmwis {

namespace {

constexpr int kMaxParametricOrder = 64;

std::optional<int> parse_int(std::string_view text) {
  if (text.empty()) return std::nullopt;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

PatternDef make(std::string name, int order, std::vector<Edge> edges, Provenance provenance) {
  return PatternDef{std::move(name), order, std::move(edges), provenance};
}

PatternDef path(int k) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
  return make("P" + std::to_string(k), k, std::move(edges), Provenance::paper_exact);
}

std::vector<Edge> cycle_edges(int k) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, k - 1);
  return edges;
}

PatternDef cycle(int k) { return make("C" + std::to_string(k), k, cycle_edges(k), Provenance::paper_exact); }

PatternDef complete(int k) {
  std::vector<Edge> edges;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return make("K" + std::to_string(k), k, std::move(edges), Provenance::paper_exact);
}

PatternDef apple(int k) {
  auto edges = cycle_edges(k);
  edges.emplace_back(0, k);
  return make(std::to_string(k) + "-apple", k + 1, std::move(edges), Provenance::paper_exact);
}

std::optional<PatternDef> shipped(std::string_view name) {
  if (name == "claw") {
    auto p = build_sijk(1, 1, 1);
    p.name = "claw";
    return p;
  }
  if (name == "chair" || name == "fork") {
    auto p = build_sijk(1, 1, 2);
    p.name = "chair";
    return p;
  }
  if (name == "co-chair") {
    return make("co-chair", 5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {3, 4}}, Provenance::paper_exact);
  }
  if (name == "diamond") {
    return make("diamond", 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}, Provenance::paper_exact);
  }
  if (name == "gem") {
    return make("gem", 5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}}, Provenance::paper_exact);
  }
  if (name == "twin-C5") {
    // C5 v1..v5 plus a false twin of v2.
    auto edges = cycle_edges(5);
    edges.insert(edges.end(), {{0, 5}, {2, 5}});
    return make("twin-C5", 6, std::move(edges), Provenance::figure_reconstructed);
  }
  if (name == "C5*") {
    // C5 v1..v5 plus v6 adjacent to v1, v3, v4.
    auto edges = cycle_edges(5);
    edges.insert(edges.end(), {{0, 5}, {2, 5}, {3, 5}});
    return make("C5*", 6, std::move(edges), Provenance::figure_reconstructed);
  }
  if (name == "H*") {
    // Diamond u1..u4 without u2u4, u5 adjacent to u2 and u4, u6 pendant on u5.
    return make("H*", 6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}, {1, 4}, {3, 4}, {4, 5}},
                Provenance::figure_reconstructed);
  }

  if (name.size() >= 2 && (name[0] == 'P' || name[0] == 'C' || name[0] == 'K')) {
    auto k = parse_int(name.substr(1));
    if (k && *k >= 1 && *k <= kMaxParametricOrder) {
      if (name[0] == 'P') return path(*k);
      if (name[0] == 'K') return complete(*k);
      if (*k >= 3) return cycle(*k);
    }
  }
  if (name.ends_with("-apple")) {
    auto k = parse_int(name.substr(0, name.size() - 6));
    if (k && *k >= 4 && *k <= kMaxParametricOrder) return apple(*k);
  }
  if (name.size() >= 2 && name[0] == 'S') {
    std::string_view rest = name.substr(1);
    std::vector<int> parts;
    if (rest.find(',') != std::string_view::npos) {
      while (true) {
        auto comma = rest.find(',');
        auto value = parse_int(rest.substr(0, comma));
        if (!value) return std::nullopt;
        parts.push_back(*value);
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
      }
    } else if (rest.size() == 3 && std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      for (char c : rest) parts.push_back(c - '0');
    }
    if (parts.size() == 3 && parts[0] >= 0 && parts[1] >= 0 && parts[2] >= 0 &&
        parts[0] + parts[1] + parts[2] < kMaxParametricOrder) {
      return build_sijk(parts[0], parts[1], parts[2]);
    }
  }
  return std::nullopt;
}

bool is_user_slot(std::string_view name) {
  return name.size() == 2 && name[0] == 'H' && name[1] >= '1' && name[1] <= '8';
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::paper_exact:
      return "paper-exact";
    case Provenance::figure_reconstructed:
      return "figure-reconstructed";
    case Provenance::user_supplied:
      return "user-supplied";
  }
  return "user-supplied";
}

Provenance parse_provenance(std::string_view text) {
  if (text == "paper-exact") return Provenance::paper_exact;
  if (text == "figure-reconstructed") return Provenance::figure_reconstructed;
  if (text == "user-supplied") return Provenance::user_supplied;
  throw PatternError("unknown provenance tag '" + std::string(text) +
                     "' (expected paper-exact, figure-reconstructed or user-supplied)");
}

WeightedGraph PatternDef::graph() const { return build_graph(order, edges); }

PatternDef build_sijk(int i, int j, int k) {
  if (i < 0 || j < 0 || k < 0) throw PatternError("S_{i,j,k} branch lengths must be nonnegative");
  if (i + j + k == 0) throw PatternError("S_{0,0,0} is a single vertex, not a valid pattern");
  std::vector<Edge> edges;
  int next = 1;
  for (int length : {i, j, k}) {
    int previous = 0;
    for (int step = 0; step < length; ++step) {
      edges.emplace_back(previous, next);
      previous = next++;
    }
  }
  return make("S" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k), next,
              std::move(edges), Provenance::paper_exact);
}

PatternDef PatternCatalog::get(std::string_view name) const {
  if (auto it = user_.find(name); it != user_.end()) return it->second;
  if (auto p = shipped(name)) return *p;
  if (is_user_slot(name)) {
    throw PatternUnavailable("pattern " + std::string(name) +
                             " is an empty user-supplied slot; register its edge list with a pattern file");
  }
  throw PatternError("unknown pattern '" + std::string(name) + "'; available: " + available_names());
}

bool PatternCatalog::available(std::string_view name) const {
  return user_.contains(name) || shipped(name).has_value();
}

void PatternCatalog::add(PatternDef pattern) {
  if (pattern.name.empty()) throw PatternError("pattern name must not be empty");
  if (pattern.order < 1) throw PatternError("pattern " + pattern.name + " must have at least one vertex");
  // Validates range and self-loops.
  try {
    (void)build_graph(pattern.order, pattern.edges);
  } catch (const GraphError& e) {
    throw PatternError("pattern " + pattern.name + ": " + e.what());
  }
  std::string key = pattern.name;
  user_.insert_or_assign(std::move(key), std::move(pattern));
}

std::vector<std::string> PatternCatalog::registered_names() const {
  std::vector<std::string> out;
  for (const auto& [name, _] : user_) out.push_back(name);
  return out;
}

std::string PatternCatalog::available_names() const {
  std::string out =
      "P<k>, C<k>, K<k>, <k>-apple, S<i>,<j>,<k>, claw, chair, fork, co-chair, diamond, gem, twin-C5, C5*, H*";
  for (const auto& [name, _] : user_) out += ", " + name;
  return out;
}

PatternDef catalog(std::string_view name) {
  static const PatternCatalog shipped_only;
  return shipped_only.get(name);
}

std::string Embedding::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (i != 0) out << ' ';
    out << image[i] + 1;
  }
  return out.str();
}

InducedMatcher::InducedMatcher(const WeightedGraph& pattern) {
  const int k = pattern.order();
  if (k == 0) throw PatternError("cannot match an empty pattern");
  std::vector<bool> placed(static_cast<std::size_t>(k), false);
  std::vector<int> placed_neighbors(static_cast<std::size_t>(k), 0);
  for (int step = 0; step < k; ++step) {
    int best = -1;
    for (int p = 0; p < k; ++p) {
      if (placed[static_cast<std::size_t>(p)]) continue;
      if (best == -1) {
        best = p;
        continue;
      }
      auto key = [&](int q) { return std::pair{placed_neighbors[static_cast<std::size_t>(q)], pattern.degree(q)}; };
      if (key(p) > key(best)) best = p;
    }
    placed[static_cast<std::size_t>(best)] = true;
    for (int q : pattern.neighbors(best)) ++placed_neighbors[static_cast<std::size_t>(q)];
    order_.push_back(best);
  }
  for (std::size_t i = 0; i < order_.size(); ++i) {
    Step s;
    s.vertex = order_[i];
    s.degree = pattern.degree(s.vertex);
    for (std::size_t j = 0; j < i; ++j) {
      if (pattern.adjacent(s.vertex, order_[j])) {
        s.earlier_adjacent.push_back(static_cast<int>(j));
      } else {
        s.earlier_nonadjacent.push_back(static_cast<int>(j));
      }
    }
    steps_.push_back(std::move(s));
  }
}

std::optional<Embedding> InducedMatcher::find(const WeightedGraph& host) const {
  return find(host, host.vertices());
}

std::optional<Embedding> InducedMatcher::find(const WeightedGraph& host, const VertexSet& within) const {
  host.check_subset(within);
  if (within.size() < pattern_order()) return std::nullopt;
  std::vector<int> host_degree(static_cast<std::size_t>(host.order()), 0);
  for (int v : within) host_degree[static_cast<std::size_t>(v)] = host.neighbors(v).intersection_size(within);
  std::vector<int> image(order_.size(), -1);
  VertexSet used(host.order());
  if (!extend(host, within, host_degree, 0, image, used)) return std::nullopt;
  Embedding e;
  e.image.assign(order_.size(), -1);
  for (std::size_t i = 0; i < order_.size(); ++i) e.image[static_cast<std::size_t>(order_[i])] = image[i];
  return e;
}

bool InducedMatcher::extend(const WeightedGraph& host, const VertexSet& within, const std::vector<int>& host_degree,
                            std::size_t position, std::vector<int>& image, VertexSet& used) const {
  if (position == steps_.size()) return true;
  const Step& step = steps_[position];
  VertexSet candidates = within - used;
  for (int j : step.earlier_adjacent) candidates &= host.neighbors(image[static_cast<std::size_t>(j)]);
  for (int j : step.earlier_nonadjacent) candidates -= host.neighbors(image[static_cast<std::size_t>(j)]);
  for (int c : candidates) {
    if (host_degree[static_cast<std::size_t>(c)] < step.degree) continue;
    image[position] = c;
    used.insert(c);
    if (extend(host, within, host_degree, position + 1, image, used)) return true;
    used.erase(c);
  }
  image[position] = -1;
  return false;
}

std::optional<Embedding> find_induced(const PatternDef& pattern, const WeightedGraph& host) {
  return InducedMatcher(pattern.graph()).find(host);
}

std::optional<Embedding> find_induced(const WeightedGraph& pattern, const WeightedGraph& host) {
  return InducedMatcher(pattern).find(host);
}

std::optional<Embedding> find_induced(const WeightedGraph& pattern, const WeightedGraph& host,
                                      const VertexSet& within) {
  return InducedMatcher(pattern).find(host, within);
}

bool is_induced_embedding(const WeightedGraph& pattern, const WeightedGraph& host, const Embedding& embedding) {
  const int k = pattern.order();
  if (static_cast<int>(embedding.image.size()) != k) return false;
  VertexSet seen(host.order());
  for (int h : embedding.image) {
    if (h < 0 || h >= host.order() || seen.contains(h)) return false;
    seen.insert(h);
  }
  for (int a = 0; a < k; ++a) {
    for (int b = a + 1; b < k; ++b) {
      if (pattern.adjacent(a, b) != host.adjacent(embedding.image[static_cast<std::size_t>(a)],
                                                  embedding.image[static_cast<std::size_t>(b)])) {
        return false;
      }
    }
  }
  return true;
}

FreenessResult is_free(const WeightedGraph& g, std::span<const PatternDef> patterns) {
  return is_free(g, patterns, g.vertices());
}

FreenessResult is_free(const WeightedGraph& g, std::span<const PatternDef> patterns, const VertexSet& within) {
  for (const auto& p : patterns) {
    if (auto e = InducedMatcher(p.graph()).find(g, within)) {
      return FreenessResult{false, Witness{p.name, p.provenance, std::move(*e)}};
    }
  }
  return FreenessResult{};
}

std::vector<PatternDef> level_patterns(int level) {
  if (level < 0 || level >= kLevelCount) {
    throw PatternError("class level must be in 0..5, got " + std::to_string(level));
  }
  std::vector<PatternDef> out{build_sijk(1, 2, 2), build_sijk(1, 1, 3)};
  if (level <= 2) {
    out.push_back(catalog("co-chair"));
    if (level >= 1) out.push_back(catalog("H*"));
    if (level >= 2) out.push_back(catalog("gem"));
  } else {
    out.push_back(catalog("diamond"));
    if (level >= 4) out.push_back(catalog("5-apple"));
    if (level >= 5) out.push_back(catalog("C5*"));
  }
  return out;
}

FreenessResult recognize_input_class(const WeightedGraph& g) {
  static const std::vector<PatternDef> patterns = level_patterns(0);
  return is_free(g, patterns);
}

std::optional<std::vector<int>> find_shortest_odd_hole(const WeightedGraph& g) {
  for (int length = 5; length <= g.order(); length += 2) {
    if (auto e = find_induced(cycle(length).graph(), g)) return e->image;
  }
  return std::nullopt;
}

bool has_odd_hole(const WeightedGraph& g) { return find_shortest_odd_hole(g).has_value(); }

}  // namespace gmwis
