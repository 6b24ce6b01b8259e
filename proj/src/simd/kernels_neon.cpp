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

// aarch64 only.

#include <arm_neon.h>

#include <bit>

#include "medtk/simd/kernels.hpp"

namespace medtk::simd {
namespace {

std::size_t count_sum3_equal(const std::uint16_t* a, const std::uint16_t* b,
                             const std::uint16_t* c, std::size_t n,
                             std::uint16_t target) {
  const uint16x8_t t = vdupq_n_u16(target);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    uint16x8_t s = vaddq_u16(vaddq_u16(vld1q_u16(a + i), vld1q_u16(b + i)), vld1q_u16(c + i));
    // equal lanes are 0xffff; shifting right by 15 leaves 1
    count += vaddvq_u16(vshrq_n_u16(vceqq_u16(s, t), 15));
  }
  for (; i < n; ++i) count += static_cast<std::uint16_t>(a[i] + b[i] + c[i]) == target;
  return count;
}

std::size_t find_sum3_equal(const std::uint16_t* a, const std::uint16_t* b,
                            const std::uint16_t* c, std::size_t n,
                            std::uint16_t target) {
  const uint16x8_t t = vdupq_n_u16(target);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    uint16x8_t s = vaddq_u16(vaddq_u16(vld1q_u16(a + i), vld1q_u16(b + i)), vld1q_u16(c + i));
    if (vmaxvq_u16(vceqq_u16(s, t)) != 0) break;
  }
  for (; i < n; ++i) {
    if (static_cast<std::uint16_t>(a[i] + b[i] + c[i]) == target) return i;
  }
  return n;
}

inline std::uint64_t popcount_u64x2(uint64x2_t v) {
  return vaddvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
}

std::uint64_t popcount(const std::uint64_t* a, std::size_t words) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) total += popcount_u64x2(vld1q_u64(a + i));
  for (; i < words; ++i) total += std::popcount(a[i]);
  return total;
}

std::uint64_t popcount_and(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t words) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    total += popcount_u64x2(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  for (; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

std::uint64_t popcount_xor(const std::uint64_t* a, const std::uint64_t* b,
                           std::size_t words) {
  std::uint64_t total = 0;
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    total += popcount_u64x2(veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  for (; i < words; ++i) total += std::popcount(a[i] ^ b[i]);
  return total;
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    uint64x2_t v = vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if ((vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0) return true;
  }
  for (; i < words; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

bool is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    uint64x2_t v = vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i));
    if ((vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) != 0) return false;
  }
  for (; i < words; ++i) {
    if (a[i] & ~b[i]) return false;
  }
  return true;
}

void and_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < words; ++i) dst[i] &= src[i];
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

constexpr KernelTable kNeon{
    Isa::kNeon, count_sum3_equal, find_sum3_equal, popcount, popcount_and,
    popcount_xor, intersects,     is_subset,       and_into, or_into,
};

}  // namespace

const KernelTable* detail::neon_table() { return &kNeon; }

}  // namespace medtk::simd
