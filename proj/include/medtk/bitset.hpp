// Copyright 2026 The medtk Authors.
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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace medtk {

// Fixed-universe bit set over {0, ..., size-1}. Storage is padded to a
// multiple of simd::kBitsetWordAlign words; padding bits are always zero, so
// equality and ordering compare the logical sets.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size);
  Bitset(std::size_t size, std::initializer_list<int> members);

  static Bitset from_indices(std::size_t size, std::span<const int> members);
  static Bitset full(std::size_t size);

  std::size_t size() const { return size_; }
  std::size_t word_count() const { return words_.size(); }
  const std::uint64_t* data() const { return words_.data(); }
  std::uint64_t* data() { return words_.data(); }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  std::size_t count() const;
  bool none() const;
  bool any() const { return !none(); }
  // Smallest member, or size() when empty.
  std::size_t first() const;

  bool intersects(const Bitset& other) const;
  bool is_subset_of(const Bitset& other) const;
  std::size_t intersection_count(const Bitset& other) const;
  std::size_t symmetric_difference_count(const Bitset& other) const;

  Bitset& operator&=(const Bitset& other);
  Bitset& operator|=(const Bitset& other);
  Bitset& operator^=(const Bitset& other);
  Bitset complement() const;

  std::vector<int> indices() const;

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;
  // Lexicographic on sorted member lists.
  friend std::strong_ordering operator<=>(const Bitset& a, const Bitset& b);

 private:
  void check_same_universe(const Bitset& other) const;

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const noexcept;
};

}  // namespace medtk
