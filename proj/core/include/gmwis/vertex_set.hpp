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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace gmwis {

/// A subset of the vertex range 0..universe-1, stored as a packed bitset.
///
/// Membership is O(1); iteration visits members in ascending order. Binary
/// set operations require both operands to share the same universe.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    Iterator() = default;
    Iterator(const VertexSet* set, int position) : set_(set), current_(position) {}

    int operator*() const { return current_; }
    Iterator& operator++() {
      current_ = set_->next(current_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const Iterator& other) const { return current_ == other.current_; }

   private:
    const VertexSet* set_ = nullptr;
    int current_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<int> members);
  VertexSet(int universe, std::span<const int> members);

  static VertexSet full(int universe);

  int universe() const { return universe_; }
  bool contains(int v) const {
    return v >= 0 && v < universe_ &&
           ((words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }

  void insert(int v);
  void erase(int v);
  void clear();

  int size() const;
  bool empty() const;

  /// Smallest member, or -1 when empty.
  int first() const;
  /// Smallest member strictly greater than v, or -1.
  int next(int v) const;

  Iterator begin() const { return Iterator(this, first()); }
  Iterator end() const { return Iterator(this, -1); }

  std::vector<int> to_vector() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet lhs, const VertexSet& rhs) { return lhs |= rhs; }
  friend VertexSet operator&(VertexSet lhs, const VertexSet& rhs) { return lhs &= rhs; }
  friend VertexSet operator-(VertexSet lhs, const VertexSet& rhs) { return lhs -= rhs; }

  /// Members of the universe not in this set.
  VertexSet complement() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  int intersection_size(const VertexSet& other) const;

  bool operator==(const VertexSet& other) const = default;

  /// Lexicographic comparison of the ascending member sequences.
  bool lexicographically_less(const VertexSet& other) const;

  std::size_t hash() const;
  std::span<const Word> words() const { return words_; }

  /// Space separated members, optionally shifted (for 1-based output).
  std::string to_string(int offset = 0) const;

 private:
  void check_same_universe(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<Word> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace gmwis
