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

#include <atomic>
#include <cstdlib>
#include <string>

#include "medtk/errors.hpp"
#include "medtk/simd/kernels.hpp"

namespace medtk::simd {

#if !defined(MEDTK_HAVE_AVX2_KERNELS)
const KernelTable* detail::avx2_table() { return nullptr; }
#endif
#if !defined(__aarch64__)
const KernelTable* detail::neon_table() { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() {
#if defined(MEDTK_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const KernelTable* select_default() {
  if (const char* env = std::getenv("MEDTK_ISA")) {
    std::string want(env);
    if (want == "scalar") return &detail::scalar_table();
    if (want == "avx2" && isa_available(Isa::kAvx2)) return detail::avx2_table();
    if (want == "neon" && isa_available(Isa::kNeon)) return detail::neon_table();
  }
  if (isa_available(Isa::kAvx2)) return detail::avx2_table();
  if (isa_available(Isa::kNeon)) return detail::neon_table();
  return &detail::scalar_table();
}

std::atomic<const KernelTable*>& active() {
  static std::atomic<const KernelTable*> table{select_default()};
  return table;
}

}  // namespace

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
      return detail::avx2_table() != nullptr && cpu_has_avx2();
    case Isa::kNeon:
      return detail::neon_table() != nullptr;
  }
  return false;
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_available(isa)) {
    throw ContractError("kernel table unavailable on this CPU: " + std::string(isa_name(isa)));
  }
  switch (isa) {
    case Isa::kAvx2:
      return *detail::avx2_table();
    case Isa::kNeon:
      return *detail::neon_table();
    case Isa::kScalar:
      break;
  }
  return detail::scalar_table();
}

const KernelTable& kernels() { return *active().load(std::memory_order_relaxed); }

void force_isa(Isa isa) { active().store(&kernels_for(isa), std::memory_order_relaxed); }

}  // namespace medtk::simd
