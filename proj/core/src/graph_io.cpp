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


#include "gmwis/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

namespace gmwis {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  int number = 0;
  while (!text.empty()) {
    const std::size_t end = text.find('\n');
    ++number;
    fn(number, text.substr(0, end));
    if (end == std::string_view::npos) break;
    text.remove_prefix(end + 1);
  }
}

template <typename T>
T parse_number(int line, std::string_view word, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(line, "expected an integer " + std::string(what) + ", got '" + std::string(word) + "'");
  }
  return value;
}

void expect_fields(int line, const std::vector<std::string_view>& words, std::size_t count, std::string_view form) {
  if (words.size() != count) throw ParseError(line, "expected '" + std::string(form) + "'");
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

namespace {

std::string parse_message(int line, const std::string& detail, std::string_view source) {
  std::string out;
  if (!source.empty()) out += std::string(source) + ": ";
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  return out + detail;
}

}  // namespace

ParseError::ParseError(int line, std::string detail, std::string_view source)
    : Error(parse_message(line, detail, source)), line_(line), detail_(std::move(detail)) {}

WeightedGraph parse_graph(std::string_view text) {
  std::optional<int> n;
  int m = 0;
  int header_line = 0;
  std::vector<std::optional<Weight>> weights;
  std::vector<Edge> edges;
  std::set<Edge> seen;

  for_each_line(text, [&](int line, std::string_view raw) {
    auto words = split_words(raw);
    if (words.empty() || words[0] == "c") return;
    const std::string_view kind = words[0];
    if (kind == "p") {
      if (n) throw ParseError(line, "duplicate header");
      expect_fields(line, words, 4, "p gmwis <n> <m>");
      if (words[1] != "gmwis") throw ParseError(line, "unknown format '" + std::string(words[1]) + "'");
      n = parse_number<int>(line, words[2], "vertex count");
      m = parse_number<int>(line, words[3], "edge count");
      if (*n < 0 || m < 0) throw ParseError(line, "counts must be nonnegative");
      weights.assign(static_cast<std::size_t>(*n), std::nullopt);
      header_line = line;
      return;
    }
    if (!n) throw ParseError(line, "'" + std::string(kind) + "' line before the 'p gmwis' header");
    auto vertex_id = [&](std::string_view word) {
      const int id = parse_number<int>(line, word, "vertex id");
      if (id < 1 || id > *n) {
        throw ParseError(line, "vertex id " + std::to_string(id) + " outside 1.." + std::to_string(*n));
      }
      return id - 1;
    };
    if (kind == "n") {
      expect_fields(line, words, 3, "n <id> <weight>");
      const int v = vertex_id(words[1]);
      const Weight w = parse_number<Weight>(line, words[2], "weight");
      if (w < 0) throw ParseError(line, "negative weight " + std::to_string(w));
      auto& slot = weights[static_cast<std::size_t>(v)];
      if (slot) throw ParseError(line, "second weight line for vertex " + std::to_string(v + 1));
      slot = w;
    } else if (kind == "e") {
      expect_fields(line, words, 3, "e <u> <v>");
      const int u = vertex_id(words[1]);
      const int v = vertex_id(words[2]);
      if (u == v) throw ParseError(line, "self-loop on vertex " + std::to_string(u + 1));
      if (u > v) throw ParseError(line, "edge endpoints must be listed as u < v");
      if (!seen.emplace(u, v).second) {
        throw ParseError(line, "duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
      }
      edges.emplace_back(u, v);
    } else {
      throw ParseError(line, "unknown line type '" + std::string(kind) + "'");
    }
  });

  if (!n) throw ParseError(0, "missing 'p gmwis <n> <m>' header");
  std::vector<Weight> w;
  for (int v = 0; v < *n; ++v) {
    const auto& slot = weights[static_cast<std::size_t>(v)];
    if (!slot) throw ParseError(header_line, "no weight line for vertex " + std::to_string(v + 1));
    w.push_back(*slot);
  }
  if (static_cast<int>(edges.size()) != m) {
    throw ParseError(header_line, "header announces " + std::to_string(m) + " edges, file has " +
                                      std::to_string(edges.size()));
  }
  return build_graph(*n, edges, w);
}

std::string format_graph(const WeightedGraph& g, std::string_view comment) {
  std::string out;
  for_each_line(comment, [&](int, std::string_view line) {
    if (!comment.empty()) out += "c " + std::string(line) + "\n";
  });
  out += "p gmwis " + std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (int v = 0; v < g.order(); ++v) {
    out += "n " + std::to_string(v + 1) + " " + std::to_string(g.weight(v)) + "\n";
  }
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

WeightedGraph read_graph(const std::filesystem::path& path) {
  try {
    return parse_graph(slurp(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
}

void write_graph(const WeightedGraph& g, const std::filesystem::path& path, std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << format_graph(g, comment);
  if (!out) throw Error("write failed for " + path.string());
}

std::vector<PatternDef> parse_patterns(std::string_view text) {
  std::vector<PatternDef> patterns;
  std::set<Edge> seen;
  for_each_line(text, [&](int line, std::string_view raw) {
    auto words = split_words(raw);
    if (words.empty() || words[0] == "c" || words[0].starts_with('#')) return;
    const std::string_view kind = words[0];
    if (kind == "pattern") {
      expect_fields(line, words, 3, "pattern <name> <n>");
      PatternDef p;
      p.name = std::string(words[1]);
      p.order = parse_number<int>(line, words[2], "vertex count");
      if (p.order < 1) throw ParseError(line, "pattern needs at least one vertex");
      patterns.push_back(std::move(p));
      seen.clear();
      return;
    }
    if (patterns.empty()) throw ParseError(line, "'" + std::string(kind) + "' line before any 'pattern' line");
    PatternDef& p = patterns.back();
    if (kind == "provenance") {
      expect_fields(line, words, 2, "provenance <tag>");
      try {
        p.provenance = parse_provenance(words[1]);
      } catch (const Error& e) {
        throw ParseError(line, e.what());
      }
    } else if (kind == "e") {
      expect_fields(line, words, 3, "e <u> <v>");
      int u = parse_number<int>(line, words[1], "vertex id");
      int v = parse_number<int>(line, words[2], "vertex id");
      if (u < 1 || v < 1 || u > p.order || v > p.order) {
        throw ParseError(line, "vertex id outside 1.." + std::to_string(p.order));
      }
      if (u == v) throw ParseError(line, "self-loop on vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (!seen.emplace(u, v).second) throw ParseError(line, "duplicate edge");
      p.edges.emplace_back(u - 1, v - 1);
    } else {
      throw ParseError(line, "unknown line type '" + std::string(kind) + "'");
    }
  });
  return patterns;
}

std::string format_patterns(std::span<const PatternDef> patterns) {
  std::string out;
  for (const auto& p : patterns) {
    out += "pattern " + p.name + " " + std::to_string(p.order) + "\n";
    out += "provenance " + std::string(to_string(p.provenance)) + "\n";
    for (auto [u, v] : p.edges) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  return out;
}

std::vector<PatternDef> read_patterns(const std::filesystem::path& path) {
  try {
    return parse_patterns(slurp(path));
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.detail(), path.string());
  }
}

}  // namespace gmwis
