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

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gmwis/graph.hpp"
#include "gmwis/patterns.hpp"

namespace gmwis {

/// Malformed graph or pattern text. line() is 1-based, 0 when the problem is
/// not tied to a single line.
class ParseError : public Error {
 public:
  ParseError(int line, std::string detail, std::string_view source = {});
  int line() const { return line_; }
  /// The message without source and line prefix.
  const std::string& detail() const { return detail_; }

 private:
  int line_;
  std::string detail_;
};

/// Graph files:
///   c <comment>
///   p gmwis <n> <m>
///   n <id> <weight>      one per vertex, ids 1..n
///   e <u> <v>            u < v
WeightedGraph parse_graph(std::string_view text);

/// Canonical text: optional comment lines, the header, weight lines by id,
/// edges sorted. Rewriting a parsed file reproduces it byte for byte.
std::string format_graph(const WeightedGraph& g, std::string_view comment = {});

WeightedGraph read_graph(const std::filesystem::path& path);
void write_graph(const WeightedGraph& g, const std::filesystem::path& path, std::string_view comment = {});

/// Pattern files hold one or more blocks:
///   pattern <name> <n>
///   provenance <tag>     optional, user-supplied by default
///   e <u> <v>            1-based
std::vector<PatternDef> parse_patterns(std::string_view text);
std::string format_patterns(std::span<const PatternDef> patterns);
std::vector<PatternDef> read_patterns(const std::filesystem::path& path);

}  // namespace gmwis
