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

#include "gmwis/vertex_set.hpp"

#include <sstream>
#include <stdexcept>

namespace gmwis {

namespace {

std::size_t word_count(int universe) {
  return (static_cast<std::size_t>(universe) + VertexSet::kWordBits - 1) / VertexSet::kWordBits;
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw std::invalid_argument("vertex set universe must be nonnegative");
  words_.assign(word_count(universe), 0);
}

VertexSet::VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const int> members) : VertexSet(universe) {
  for (int v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  if (universe % kWordBits != 0 && !s.words_.empty()) {
    s.words_.back() = (Word{1} << (universe % kWordBits)) - 1;
  }
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside universe of size " +
                            std::to_string(universe_));
  }
  words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_) return;
  words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

void VertexSet::clear() {
  for (auto& w : words_) w = 0;
}

int VertexSet::size() const {
  int count = 0;
  for (Word w : words_) count += std::popcount(w);
  return count;
}

bool VertexSet::empty() const {
  for (Word w : words_) {
    if (w != 0) return false;
  }
  return true;
}

int VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<int>(i) * kWordBits + std::countr_zero(words_[i]);
  }
  return -1;
}

int VertexSet::next(int v) const {
  int start = v + 1;
  if (start >= universe_) return -1;
  std::size_t index = static_cast<std::size_t>(start) / kWordBits;
  Word w = words_[index] & (~Word{0} << (start % kWordBits));
  while (true) {
    if (w != 0) return static_cast<int>(index) * kWordBits + std::countr_zero(w);
    if (++index >= words_.size()) return -1;
    w = words_[index];
  }
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v : *this) out.push_back(v);
  return out;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw std::invalid_argument("vertex sets over different universes (" + std::to_string(universe_) +
                                " vs " + std::to_string(other.universe_) + ")");
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

int VertexSet::intersection_size(const VertexSet& other) const {
  check_same_universe(other);
  int count = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) count += std::popcount(words_[i] & other.words_[i]);
  return count;
}

bool VertexSet::lexicographically_less(const VertexSet& other) const {
  int a = first();
  int b = other.first();
  while (a != -1 && b != -1) {
    if (a != b) return a < b;
    a = next(a);
    b = other.next(b);
  }
  return a == -1 && b != -1;
}

std::size_t VertexSet::hash() const {
  std::size_t h = static_cast<std::size_t>(universe_) * 0x9e3779b97f4a7c15ULL;
  for (Word w : words_) {
    h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::string VertexSet::to_string(int offset) const {
  std::ostringstream out;
  bool first_member = true;
  for (int v : *this) {
    if (!first_member) out << ' ';
    out << v + offset;
    first_member = false;
  }
  return out.str();
}

}  // namespace gmwis
