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


#include "gmwis/structure_lab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <set>
#include <thread>

#include "gmwis/canonical.hpp"
#include "gmwis/decomposition.hpp"
#include "gmwis/generate.hpp"
#include "gmwis/graph_io.hpp"

namespace gmwis {

// ---------------------------------------------------------------------------
// Neighborhood partition
// ---------------------------------------------------------------------------

NeighborhoodPartition partition_neighborhood(const WeightedGraph& g, int v, const VertexSet& h) {
  g.check_vertex(v);
  g.check_subset(h);
  if (h.contains(v)) throw StructureError("vertex " + std::to_string(v + 1) + " lies in H");
  if (g.neighbors(v).intersects(h)) {
    throw StructureError("vertex " + std::to_string(v + 1) + " has a neighbor in H");
  }
  NeighborhoodPartition p;
  p.vertex = v;
  p.h = h;
  const VertexSet around = neighborhood_of(g, h) - h;
  const VertexSet rest = g.vertices() - h - around;
  for (const auto& c : connected_components(g, rest)) {
    if (c.contains(v)) p.q = c;
  }
  const std::size_t t = static_cast<std::size_t>(h.size());
  p.a.assign(t + 1, g.empty_set());
  p.a_plus.assign(t + 1, g.empty_set());
  p.a_minus.assign(t + 1, g.empty_set());
  p.all_plus = g.empty_set();
  p.all_minus = g.empty_set();
  for (int x : around) {
    const auto i = static_cast<std::size_t>(g.neighbors(x).intersection_size(h));
    p.a[i].insert(x);
    if (g.neighbors(x).intersects(p.q)) {
      p.a_plus[i].insert(x);
      p.all_plus.insert(x);
    } else {
      p.a_minus[i].insert(x);
      p.all_minus.insert(x);
    }
  }
  check_partition(g, p);
  return p;
}

NeighborhoodPartition partition_neighborhood(const WeightedGraph& g, int v, const Embedding& h) {
  return partition_neighborhood(g, v, h.image_set(g.order()));
}

void check_partition(const WeightedGraph& g, const NeighborhoodPartition& p) {
  auto fail = [](const std::string& what) { throw StructureError("neighborhood partition: " + what); };
  if (!p.q.contains(p.vertex)) fail("Q does not contain v");
  if (p.q.intersects(p.h)) fail("Q meets H");
  const VertexSet around = neighborhood_of(g, p.h) - p.h;
  if (p.q.intersects(around)) fail("Q meets N(H)");
  VertexSet seen = g.empty_set();
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    if (p.a[i].intersects(seen)) fail("A_i blocks overlap");
    seen |= p.a[i];
    if ((p.a_plus[i] | p.a_minus[i]) != p.a[i] || p.a_plus[i].intersects(p.a_minus[i])) {
      fail("A_" + std::to_string(i) + " is not split into A+ and A-");
    }
    for (int x : p.a[i]) {
      if (g.neighbors(x).intersection_size(p.h) != static_cast<int>(i)) fail("vertex in the wrong A_i");
    }
  }
  if (seen != around) fail("the A_i do not cover N(H)");
  if ((p.all_plus | p.all_minus) != around || p.all_plus.intersects(p.all_minus)) fail("N(H) != A+ + A-");
  if (p.all_plus != neighborhood_of(g, p.q) - p.q) fail("A+ != N(Q)");
  const VertexSet open = g.vertices() - p.all_plus;
  for (const auto& c : connected_components(g, open)) {
    if (c.intersects(p.q) && c.intersects(p.h)) fail("a path from Q to H avoids A+");
  }
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace {

struct SuiteShape {
  SuiteId id;
  std::string_view name;
  std::vector<std::string_view> hypothesis;
  bool prime;
  bool connected;
  bool odd_hole;
  std::string_view conclusion;
  std::string_view statement;
};

const std::vector<SuiteShape>& suite_shapes() {
  static const std::vector<SuiteShape> shapes = {
      {SuiteId::lemma1, "lemma1", {"co-chair"}, true, true, false, "",
       "prime co-chair-free graphs are (H1, H2, H3)-free; with S1,2,2 also (H4, H5)-free; with S1,1,3 also "
       "(H4, H6, H7, H8)-free"},
      {SuiteId::lemma2, "lemma2", {"5-apple", "C5*", "diamond"}, true, true, false, "twin-C5",
       "prime (5-apple, C5*, diamond)-free graphs are twin-C5-free"},
      {SuiteId::lemma3, "lemma3", {"co-chair", "gem"}, true, true, false, "diamond",
       "prime (co-chair, gem)-free graphs are diamond-free"},
      {SuiteId::thm3, "thm3", {"S1,2,2", "S1,1,3", "diamond", "5-apple", "C5*"}, true, true, true, "claw",
       "prime (S1,2,2, S1,1,3, diamond, 5-apple, C5*)-free graphs with an odd hole are claw-free"},
      {SuiteId::thm3_claim1, "thm3_claim1", {"S1,2,2", "S1,1,3", "diamond", "5-apple", "C5*"}, true, true, true, "",
       "in those graphs every vertex with a neighbor on a shortest odd hole sees exactly two consecutive hole "
       "vertices"},
      {SuiteId::thm5, "thm5", {"S1,2,2", "S1,1,3", "diamond", "5-apple"}, false, true, false, "C5*",
       "connected (S1,2,2, S1,1,3, diamond, 5-apple)-free graphs are nearly C5*-free"},
      {SuiteId::thm7, "thm7", {"S1,2,2", "S1,1,3", "diamond"}, false, false, false, "5-apple",
       "atoms of (S1,2,2, S1,1,3, diamond)-free graphs are nearly 5-apple-free"},
      {SuiteId::thm9, "thm9", {"S1,2,2", "S1,1,3", "co-chair", "H*"}, true, true, false, "gem",
       "atoms of prime (S1,2,2, S1,1,3, co-chair, H*)-free graphs are nearly gem-free"},
      {SuiteId::thm11, "thm11", {"S1,2,2", "S1,1,3", "co-chair"}, true, true, false, "H*",
       "atoms of prime (S1,2,2, S1,1,3, co-chair)-free graphs are nearly H*-free"},
  };
  return shapes;
}

const SuiteShape& shape_of(SuiteId id) {
  for (const auto& s : suite_shapes()) {
    if (s.id == id) return s;
  }
  throw StructureError("unknown suite");
}

std::vector<PatternDef> resolve(const PatternCatalog& catalog, const std::vector<std::string_view>& names) {
  std::vector<PatternDef> out;
  for (auto name : names) out.push_back(catalog.get(name));
  return out;
}

bool is_odd_hole(const WeightedGraph& g, const std::vector<int>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 5 || k % 2 == 0) return false;
  const VertexSet members(g.order(), cycle);
  if (members.size() != static_cast<int>(k)) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (g.neighbors(cycle[i]).intersection_size(members) != 2) return false;
    if (!g.adjacent(cycle[i], cycle[(i + 1) % k])) return false;
  }
  return true;
}

/// Neighbors of x on the hole form one pair of consecutive hole vertices.
bool sees_consecutive_pair(const WeightedGraph& g, int x, const std::vector<int>& cycle) {
  const std::size_t k = cycle.size();
  std::vector<std::size_t> hits;
  for (std::size_t i = 0; i < k; ++i) {
    if (g.adjacent(x, cycle[i])) hits.push_back(i);
  }
  if (hits.size() != 2) return false;
  return hits[1] - hits[0] == 1 || (hits[0] == 0 && hits[1] == k - 1);
}

std::vector<VertexSet> atoms_of(const WeightedGraph& g) {
  std::vector<VertexSet> atoms;
  for (const auto& c : connected_components(g)) {
    InducedSubgraph sub = induced_subgraph(g, c);
    for (const auto& a : clique_cutset_decompose(sub.graph).atoms()) atoms.push_back(sub.lift(a));
  }
  return atoms;
}

bool hypothesis_holds(const SuiteShape& shape, const std::vector<PatternDef>& hypothesis, const WeightedGraph& g) {
  if (!is_free(g, hypothesis).free) return false;
  if (shape.connected && !is_connected(g)) return false;
  return !shape.prime || is_prime(g);
}

struct Checker {
  const SuiteShape& shape;
  const PatternCatalog& catalog;
  std::vector<PatternDef> hypothesis;
  std::optional<PatternDef> conclusion;
  // lemma1: (pattern, condition) pairs that are available in the catalog.
  std::vector<std::pair<PatternDef, std::string>> lemma1_checks;
  std::vector<std::string> skipped;

  Checker(const SuiteShape& s, const PatternCatalog& c) : shape(s), catalog(c) {
    hypothesis = resolve(catalog, shape.hypothesis);
    if (!shape.conclusion.empty()) conclusion = catalog.get(shape.conclusion);
    if (shape.id == SuiteId::lemma1) {
      const std::vector<std::pair<std::string, std::string>> wanted = {
          {"H1", ""},       {"H2", ""},       {"H3", ""},       {"H4", "S1,2,2"}, {"H5", "S1,2,2"},
          {"H4", "S1,1,3"}, {"H6", "S1,1,3"}, {"H7", "S1,1,3"}, {"H8", "S1,1,3"},
      };
      std::set<std::string> reported;
      for (const auto& [name, condition] : wanted) {
        if (catalog.available(name)) {
          lemma1_checks.emplace_back(catalog.get(name), condition);
        } else if (reported.insert(name).second) {
          skipped.push_back(name + ": pattern unavailable");
        }
      }
    }
  }

  bool runnable() const { return shape.id != SuiteId::lemma1 || !lemma1_checks.empty(); }

  struct Outcome {
    bool nonvacuous = true;
    std::optional<Violation> violation;
  };

  Violation make(const WeightedGraph& g, const PatternDef& p, Embedding e) const {
    Violation v;
    v.suite = shape.id;
    v.graph = g;
    v.pattern = p.name;
    v.provenance = p.provenance;
    v.embedding = std::move(e);
    return v;
  }

  Outcome check(const WeightedGraph& g) const {
    Outcome out;
    switch (shape.id) {
      case SuiteId::lemma1: {
        for (const auto& [p, condition] : lemma1_checks) {
          if (!condition.empty() && !is_free(g, std::vector<PatternDef>{catalog.get(condition)}).free) continue;
          if (auto e = find_induced(p, g)) {
            out.violation = make(g, p, *e);
            return out;
          }
        }
        return out;
      }
      case SuiteId::lemma2:
      case SuiteId::lemma3: {
        if (auto e = find_induced(*conclusion, g)) out.violation = make(g, *conclusion, *e);
        return out;
      }
      case SuiteId::thm3: {
        auto hole = find_shortest_odd_hole(g);
        if (!hole) {
          out.nonvacuous = false;
          return out;
        }
        if (auto e = find_induced(*conclusion, g)) {
          out.violation = make(g, *conclusion, *e);
          out.violation->cycle = *hole;
        }
        return out;
      }
      case SuiteId::thm3_claim1: {
        auto hole = find_shortest_odd_hole(g);
        if (!hole) {
          out.nonvacuous = false;
          return out;
        }
        const VertexSet members(g.order(), *hole);
        for (int x : g.vertices() - members) {
          if (!g.neighbors(x).intersects(members) || sees_consecutive_pair(g, x, *hole)) continue;
          Violation v;
          v.suite = shape.id;
          v.graph = g;
          v.provenance = Provenance::paper_exact;
          v.vertex = x;
          v.cycle = *hole;
          out.violation = std::move(v);
          return out;
        }
        return out;
      }
      case SuiteId::thm5: {
        const WeightedGraph pattern = conclusion->graph();
        for (int v = 0; v < g.order(); ++v) {
          if (auto e = find_induced(pattern, g, anti_neighborhood(g, v))) {
            out.violation = make(g, *conclusion, *e);
            out.violation->vertex = v;
            return out;
          }
        }
        return out;
      }
      case SuiteId::thm7:
      case SuiteId::thm9:
      case SuiteId::thm11: {
        const WeightedGraph pattern = conclusion->graph();
        for (const auto& atom : atoms_of(g)) {
          for (int v : atom) {
            if (auto e = find_induced(pattern, g, atom - closed_neighborhood(g, v))) {
              out.violation = make(g, *conclusion, *e);
              out.violation->vertex = v;
              out.violation->atom = atom;
              return out;
            }
          }
        }
        return out;
      }
    }
    return out;
  }
};

struct Sample {
  std::optional<WeightedGraph> graph;
  std::string failure;
};

Sample draw_sample(const SuiteShape& shape, const std::vector<PatternDef>& hypothesis, const SuiteOptions& options,
                   std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  static constexpr double kDensities[] = {0.2, 0.35, 0.5, 0.65};
  const int low = std::min(options.n, shape.odd_hole ? 5 : 4);
  std::uniform_int_distribution<int> size(low, options.n);
  std::uniform_int_distribution<std::size_t> density(0, std::size(kDensities) - 1);

  for (int attempt = 0; attempt <= options.repair_budget; ++attempt) {
    GrowthOptions growth;
    growth.n = size(rng);
    growth.density = kDensities[density(rng)];
    growth.forbidden = hypothesis;
    growth.connected = shape.connected;
    std::optional<WeightedGraph> start;
    if (shape.odd_hole) {
      const int length = growth.n >= 7 && std::bernoulli_distribution(0.3)(rng) ? 7 : 5;
      start = catalog("C" + std::to_string(length)).graph();
    }
    auto g = grow_free_graph(growth, rng, start ? &*start : nullptr);
    if (!g) continue;
    if (shape.prime) {
      if (is_prime(*g)) {
        // Already prime.
      } else if (auto part = largest_prime_part(*g)) {
        g = std::move(part);
      } else {
        continue;
      }
    }
    if (shape.odd_hole && !has_odd_hole(*g)) continue;
    return Sample{std::move(g), {}};
  }
  return Sample{std::nullopt, "sample " + std::to_string(index) + ": no hypothesis graph within " +
                                  std::to_string(options.repair_budget) + " retries"};
}

std::vector<WeightedGraph> enumerate_class(int n, std::span<const PatternDef> forbidden) {
  std::vector<WeightedGraph> all;
  if (n < 1) return all;
  std::vector<WeightedGraph> level{build_graph(1, std::vector<Edge>{})};
  if (!is_free(level[0], forbidden).free) return all;
  all = level;
  for (int k = 1; k < n; ++k) {
    std::set<CanonicalCode> codes;
    for (const auto& g : level) {
      const auto base = g.edges();
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        std::vector<Edge> edges = base;
        for (int u = 0; u < k; ++u) {
          if (mask >> u & 1U) edges.emplace_back(u, k);
        }
        WeightedGraph h = build_graph(k + 1, edges);
        const CanonicalCode code = canonical_code(h);
        if (codes.contains(code)) continue;
        if (is_free(h, forbidden).free) codes.insert(code);
      }
    }
    level.clear();
    for (const auto& code : codes) level.push_back(from_canonical_code(code));
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(count)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::string_view to_string(SuiteId id) { return shape_of(id).name; }

SuiteId parse_suite(std::string_view name) {
  for (const auto& s : suite_shapes()) {
    if (s.name == name) return s.id;
  }
  std::string known;
  for (const auto& s : suite_shapes()) known += (known.empty() ? "" : ", ") + std::string(s.name);
  throw StructureError("unknown suite '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<SuiteId> all_suites() {
  std::vector<SuiteId> ids;
  for (const auto& s : suite_shapes()) ids.push_back(s.id);
  return ids;
}

std::string_view suite_statement(SuiteId id) { return shape_of(id).statement; }

bool satisfies_hypothesis(SuiteId id, const WeightedGraph& g, const PatternCatalog& catalog) {
  const SuiteShape& shape = shape_of(id);
  return hypothesis_holds(shape, resolve(catalog, shape.hypothesis), g);
}

std::optional<Violation> check_instance(SuiteId id, const WeightedGraph& g, const PatternCatalog& catalog) {
  const Checker checker(shape_of(id), catalog);
  if (!hypothesis_holds(checker.shape, checker.hypothesis, g)) {
    throw StructureError("graph does not meet the " + std::string(to_string(id)) + " hypothesis");
  }
  return checker.check(g).violation;
}

std::string Violation::describe() const {
  std::string out = std::string(to_string(suite)) + " sample " + std::to_string(sample) + ": ";
  if (suite == SuiteId::thm3_claim1) {
    out += "vertex " + std::to_string(vertex + 1) + " has a non-consecutive neighborhood on the odd hole " +
           Embedding{cycle}.to_string();
    return out;
  }
  out += "induced " + pattern + " [" + std::string(to_string(provenance)) + "] at " + embedding.to_string();
  if (!atom.empty()) out += " in atom " + gmwis::describe(atom);
  if (vertex >= 0) out += " avoiding N[" + std::to_string(vertex + 1) + "]";
  if (!cycle.empty()) out += " with odd hole " + Embedding{cycle}.to_string();
  return out;
}

bool reverify(const Violation& v, const PatternCatalog& catalog) {
  const SuiteShape& shape = shape_of(v.suite);
  const WeightedGraph& g = v.graph;
  try {
    if (!hypothesis_holds(shape, resolve(catalog, shape.hypothesis), g)) return false;
    if (v.suite == SuiteId::thm3 || v.suite == SuiteId::thm3_claim1) {
      if (!is_odd_hole(g, v.cycle)) return false;
    }
    if (v.suite == SuiteId::thm3_claim1) {
      auto shortest = find_shortest_odd_hole(g);
      if (!shortest || shortest->size() != v.cycle.size()) return false;
      if (v.vertex < 0 || v.vertex >= g.order()) return false;
      const VertexSet members(g.order(), v.cycle);
      return !members.contains(v.vertex) && g.neighbors(v.vertex).intersects(members) &&
             !sees_consecutive_pair(g, v.vertex, v.cycle);
    }
    const WeightedGraph pattern = catalog.get(v.pattern).graph();
    if (!is_induced_embedding(pattern, g, v.embedding)) return false;
    const VertexSet image = v.embedding.image_set(g.order());
    switch (v.suite) {
      case SuiteId::thm5:
        return v.vertex >= 0 && v.vertex < g.order() && !image.intersects(closed_neighborhood(g, v.vertex));
      case SuiteId::thm7:
      case SuiteId::thm9:
      case SuiteId::thm11: {
        if (v.vertex < 0 || v.vertex >= g.order() || !v.atom.contains(v.vertex)) return false;
        if (!image.is_subset_of(v.atom - closed_neighborhood(g, v.vertex))) return false;
        InducedSubgraph sub = induced_subgraph(g, v.atom);
        return is_connected(sub.graph) && !find_clique_cutset(sub.graph);
      }
      default:
        return true;
    }
  } catch (const Error&) {
    return false;
  }
}

std::string SuiteReport::render() const {
  std::string out = "suite " + std::string(to_string(suite)) + "\n";
  out += "statement " + std::string(suite_statement(suite)) + "\n";
  out += std::string("mode ") + (exhaustive ? "exhaustive" : "random") + " n " + std::to_string(n) + " seed " +
         std::to_string(seed) + "\n";
  out += "samples " + std::to_string(samples) + "\n";
  out += "nonvacuous " + std::to_string(nonvacuous) + "\n";
  for (const auto& s : skipped) out += "skipped " + s + "\n";
  if (gave_up) out += "gave-up " + *gave_up + "\n";
  out += "violations " + std::to_string(violations.size()) + "\n";
  for (const auto& v : violations) {
    out += "violation " + v.describe() + " file " + counterexample_name(*this, v) + "\n";
  }
  return out;
}

std::string counterexample_name(const SuiteReport& report, const Violation& v) {
  return std::string(to_string(report.suite)) + "-" + std::to_string(report.seed) + "-" + std::to_string(v.sample) +
         ".g";
}

std::vector<std::filesystem::path> write_counterexamples(const SuiteReport& report,
                                                         const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> paths;
  if (report.violations.empty()) return paths;
  std::filesystem::create_directories(dir);
  for (const auto& v : report.violations) {
    auto path = dir / counterexample_name(report, v);
    write_graph(v.graph, path, v.describe());
    paths.push_back(std::move(path));
  }
  return paths;
}

int default_thread_budget() {
  if (const char* text = std::getenv("GMWIS_THREADS")) {
    const int value = std::atoi(text);
    if (value > 0) return value;
  }
  return 1;
}

SuiteReport run_suite(SuiteId id, const SuiteOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const SuiteShape& shape = shape_of(id);
  if (options.n < 1) throw StructureError("suite graphs need at least one vertex");
  if (options.exhaustive && options.n > kMaxExhaustiveOrder) {
    throw StructureError("exhaustive mode supports n <= " + std::to_string(kMaxExhaustiveOrder));
  }
  const Checker checker(shape, options.catalog);

  SuiteReport report;
  report.suite = id;
  report.seed = options.seed;
  report.n = options.n;
  report.exhaustive = options.exhaustive;
  report.skipped = checker.skipped;
  const int threads = options.threads > 0 ? options.threads : default_thread_budget();

  if (checker.runnable()) {
    std::vector<WeightedGraph> pool;
    std::vector<std::uint64_t> index;
    std::vector<Sample> drawn;
    if (options.exhaustive) {
      for (auto& g : enumerate_class(options.n, checker.hypothesis)) {
        if (shape.connected && !is_connected(g)) continue;
        if (shape.prime && !is_prime(g)) continue;
        index.push_back(pool.size());
        pool.push_back(std::move(g));
      }
    } else {
      drawn.resize(static_cast<std::size_t>(std::max(0, options.samples)));
      parallel_for(drawn.size(), threads,
                   [&](std::size_t i) { drawn[i] = draw_sample(shape, checker.hypothesis, options, i); });
      for (std::size_t i = 0; i < drawn.size(); ++i) {
        if (!drawn[i].graph) {
          if (!report.gave_up) report.gave_up = drawn[i].failure;
          continue;
        }
        index.push_back(i);
        pool.push_back(std::move(*drawn[i].graph));
      }
    }

    std::vector<Checker::Outcome> outcomes(pool.size());
    parallel_for(pool.size(), threads, [&](std::size_t i) { outcomes[i] = checker.check(pool[i]); });
    report.samples = static_cast<int>(pool.size());
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (outcomes[i].nonvacuous) ++report.nonvacuous;
      if (outcomes[i].violation) {
        outcomes[i].violation->sample = index[i];
        report.violations.push_back(std::move(*outcomes[i].violation));
      }
    }
  }

  report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace gmwis
