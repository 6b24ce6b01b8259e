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

#include "medtk/bitset.hpp"

#include <bit>
#include <string>

#include "medtk/errors.hpp"
#include "medtk/simd/kernels.hpp"

namespace medtk {
namespace {

std::size_t padded_words(std::size_t bits) {
  std::size_t words = (bits + 63) / 64;
  constexpr std::size_t a = simd::kBitsetWordAlign;
  return (words + a - 1) / a * a;
}

}  // namespace

Bitset::Bitset(std::size_t size) : size_(size), words_(padded_words(size), 0) {}

Bitset::Bitset(std::size_t size, std::initializer_list<int> members) : Bitset(size) {
  for (int m : members) {
    if (m < 0 || static_cast<std::size_t>(m) >= size) {
      throw ContractError("bitset member out of range: " + std::to_string(m));
    }
    set(static_cast<std::size_t>(m));
  }
}

Bitset Bitset::from_indices(std::size_t size, std::span<const int> members) {
  Bitset b(size);
  for (int m : members) {
    if (m < 0 || static_cast<std::size_t>(m) >= size) {
      throw ContractError("bitset member out of range: " + std::to_string(m));
    }
    b.set(static_cast<std::size_t>(m));
  }
  return b;
}

Bitset Bitset::full(std::size_t size) {
  Bitset b(size);
  for (std::size_t i = 0; i < size / 64; ++i) b.words_[i] = ~std::uint64_t{0};
  if (size % 64) b.words_[size / 64] = (std::uint64_t{1} << (size % 64)) - 1;
  return b;
}

std::size_t Bitset::count() const {
  return simd::kernels().popcount(words_.data(), words_.size());
}

bool Bitset::none() const {
  for (std::uint64_t w : words_) {
    if (w) return false;
  }
  return true;
}

std::size_t Bitset::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return size_;
}

void Bitset::check_same_universe(const Bitset& other) const {
  if (size_ != other.size_) {
    throw ContractError("bitset universes differ: " + std::to_string(size_) + " vs " +
                        std::to_string(other.size_));
  }
}

bool Bitset::intersects(const Bitset& other) const {
  check_same_universe(other);
  return simd::kernels().intersects(words_.data(), other.words_.data(), words_.size());
}

bool Bitset::is_subset_of(const Bitset& other) const {
  check_same_universe(other);
  return simd::kernels().is_subset(words_.data(), other.words_.data(), words_.size());
}

std::size_t Bitset::intersection_count(const Bitset& other) const {
  check_same_universe(other);
  return simd::kernels().popcount_and(words_.data(), other.words_.data(), words_.size());
}

std::size_t Bitset::symmetric_difference_count(const Bitset& other) const {
  check_same_universe(other);
  return simd::kernels().popcount_xor(words_.data(), other.words_.data(), words_.size());
}

Bitset& Bitset::operator&=(const Bitset& other) {
  check_same_universe(other);
  simd::kernels().and_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& other) {
  check_same_universe(other);
  simd::kernels().or_into(words_.data(), other.words_.data(), words_.size());
  return *this;
}

Bitset& Bitset::operator^=(const Bitset& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

Bitset Bitset::complement() const {
  Bitset out = full(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  return out;
}

std::vector<int> Bitset::indices() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      out.push_back(static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

std::strong_ordering operator<=>(const Bitset& a, const Bitset& b) {
  // Compare sorted member lists lexicographically: at the lowest differing
  // element, the set containing it has the smaller list, unless the other set
  // has run out of members below it.
  std::size_t n = std::min(a.words_.size(), b.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (!diff) continue;
    std::uint64_t low = diff & (~diff + 1);
    bool a_has = a.words_[i] & low;
    // does the side lacking the element have any member above it?
    const auto& lacking = a_has ? b : a;
    bool lacking_has_more = (lacking.words_[i] & ~((low << 1) - 1)) != 0;
    for (std::size_t j = i + 1; !lacking_has_more && j < lacking.words_.size(); ++j) {
      lacking_has_more = lacking.words_[j] != 0;
    }
    if (!lacking_has_more) {
      // the lacking list is a proper prefix: shorter list is smaller
      return a_has ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    return a_has ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.size_ <=> b.size_;
}

std::size_t BitsetHash::operator()(const Bitset& b) const noexcept {
  std::size_t h = b.size() * 0x9e3779b97f4a7c15ULL;
  for (std::size_t i = 0; i < b.word_count(); ++i) {
    h ^= b.data()[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace medtk
