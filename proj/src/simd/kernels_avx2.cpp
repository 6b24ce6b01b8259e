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

// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.

#include <immintrin.h>

#include <bit>

#include "medtk/simd/kernels.hpp"

namespace medtk::simd {
namespace {

inline __m256i load(const void* p) {
  return _mm256_loadu_si256(static_cast<const __m256i*>(p));
}

// Nibble-table popcount of each byte, summed into four 64-bit lanes.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo),
                                   _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::uint64_t hsum64(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

std::size_t count_sum3_equal(const std::uint16_t* a, const std::uint16_t* b,
                             const std::uint16_t* c, std::size_t n,
                             std::uint16_t target) {
  const __m256i t = _mm256_set1_epi16(static_cast<short>(target));
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m256i s = _mm256_add_epi16(_mm256_add_epi16(load(a + i), load(b + i)), load(c + i));
    unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(s, t)));
    count += static_cast<std::size_t>(std::popcount(mask)) / 2;
  }
  for (; i < n; ++i) {
    count += static_cast<std::uint16_t>(a[i] + b[i] + c[i]) == target;
  }
  return count;
}

std::size_t find_sum3_equal(const std::uint16_t* a, const std::uint16_t* b,
                            const std::uint16_t* c, std::size_t n,
                            std::uint16_t target) {
  const __m256i t = _mm256_set1_epi16(static_cast<short>(target));
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m256i s = _mm256_add_epi16(_mm256_add_epi16(load(a + i), load(b + i)), load(c + i));
    unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(s, t)));
    if (mask != 0) return i + static_cast<std::size_t>(std::countr_zero(mask)) / 2;
  }
  for (; i < n; ++i) {
    if (static_cast<std::uint16_t>(a[i] + b[i] + c[i]) == target) return i;
  }
  return n;
}

#define MEDTK_POPCOUNT_BINARY(name, vec_op, scalar_op)                              \
  std::uint64_t name(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) { \
    __m256i acc = _mm256_setzero_si256();                                             \
    std::size_t i = 0;                                                                \
    for (; i + 4 <= words; i += 4) {                                                  \
      acc = _mm256_add_epi64(acc, popcount_lanes(vec_op(load(a + i), load(b + i))));  \
    }                                                                                 \
    std::uint64_t total = hsum64(acc);                                                \
    for (; i < words; ++i) total += static_cast<std::uint64_t>(std::popcount(scalar_op)); \
    return total;                                                                     \
  }

std::uint64_t popcount(const std::uint64_t* a, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(load(a + i)));
  std::uint64_t total = hsum64(acc);
  for (; i < words; ++i) total += static_cast<std::uint64_t>(std::popcount(a[i]));
  return total;
}

MEDTK_POPCOUNT_BINARY(popcount_and, _mm256_and_si256, a[i] & b[i])
MEDTK_POPCOUNT_BINARY(popcount_xor, _mm256_xor_si256, a[i] ^ b[i])
#undef MEDTK_POPCOUNT_BINARY

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  }
  for (; i < words; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    // testc(b, a) is 1 iff (~b & a) == 0
    if (!_mm256_testc_si256(load(b + i), load(a + i))) return false;
  }
  for (; i < words; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_and_si256(load(dst + i), load(src + i)));
  }
  for (; i < words; ++i) dst[i] &= src[i];
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_or_si256(load(dst + i), load(src + i)));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

constexpr KernelTable kAvx2{
    Isa::kAvx2, count_sum3_equal, find_sum3_equal, popcount, popcount_and,
    popcount_xor, intersects,     is_subset,       and_into, or_into,
};

}  // namespace

const KernelTable* detail::avx2_table() { return &kAvx2; }

}  // namespace medtk::simd
