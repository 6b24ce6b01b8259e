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

// Data-parallel inner loops shared by the median, wallspace and convexity
// code. Each kernel has a scalar reference implementation and, where the
// target supports it, a vector variant; the active table is picked once at
// startup from the CPU features (override with MEDTK_ISA=scalar|avx2|neon).
//
// Bit-vector kernels take word counts, and every Bitset pads its storage to
// kBitsetWordAlign words so vector variants never need a scalar tail on
// Bitset data. Raw callers may pass any length.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace medtk::simd {

enum class Isa { kScalar, kAvx2, kNeon };

inline constexpr std::size_t kBitsetWordAlign = 4;

struct KernelTable {
  Isa isa;
  // #{i : a[i] + b[i] + c[i] == target}. Requires a[i] + b[i] + c[i] < 2^16.
  std::size_t (*count_sum3_equal)(const std::uint16_t* a, const std::uint16_t* b,
                                  const std::uint16_t* c, std::size_t n,
                                  std::uint16_t target);
  // Smallest such i, or n when there is none.
  std::size_t (*find_sum3_equal)(const std::uint16_t* a, const std::uint16_t* b,
                                 const std::uint16_t* c, std::size_t n,
                                 std::uint16_t target);
  std::uint64_t (*popcount)(const std::uint64_t* a, std::size_t words);
  std::uint64_t (*popcount_and)(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words);
  std::uint64_t (*popcount_xor)(const std::uint64_t* a, const std::uint64_t* b,
                                std::size_t words);
  bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  // a ⊆ b
  bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  void (*and_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
};

bool isa_available(Isa isa);
std::string_view isa_name(Isa isa);

// Table for a specific ISA; throws ContractError when it is unavailable.
const KernelTable& kernels_for(Isa isa);

// The dispatched table.
const KernelTable& kernels();

// Test hook: pin the dispatched table. Not thread-safe against concurrent
// kernel calls.
void force_isa(Isa isa);

namespace detail {
const KernelTable& scalar_table();
const KernelTable* avx2_table();  // nullptr when not compiled in
const KernelTable* neon_table();
}  // namespace detail

}  // namespace medtk::simd
