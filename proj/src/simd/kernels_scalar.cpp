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

#include <bit>

#include "medtk/simd/kernels.hpp"

namespace medtk::simd {
namespace {

std::size_t count_sum3_equal(const std::uint16_t* a, const std::uint16_t* b,
                             const std::uint16_t* c, std::size_t n,
                             std::uint16_t target) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    count += static_cast<std::uint16_t>(a[i] + b[i] + c[i]) == target;
  }
  return count;
}

std::size_t find_sum3_equal(const std::uint16_t* a, const std::uint16_t* b,
                            const std::uint16_t* c, std::size_t n,
                            std::uint16_t target) {
  for (std::size_t i = 0; i < n; ++i) {
    if (static_cast<std::uint16_t>(a[i] + b[i] + c[i]) == target) return i;
  }
  return n;
}

std::uint64_t popcount(const std::uint64_t* a, std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::uint64_t popcount_and(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

std::uint64_t popcount_xor(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t words) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] ^ b[i]);
  return total;
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= src[i];
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

constexpr KernelTable kScalar{
    Isa::kScalar, count_sum3_equal, find_sum3_equal, popcount, popcount_and,
    popcount_xor, intersects,       is_subset,       and_into, or_into,
};

}  // namespace

const KernelTable& detail::scalar_table() { return kScalar; }

}  // namespace medtk::simd
