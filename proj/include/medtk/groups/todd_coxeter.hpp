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

#include <cstddef>
#include <vector>

#include "medtk/groups/presentation.hpp"

namespace medtk::groups {

inline constexpr std::size_t kDefaultCosetLimit = 10000;

struct EnumerationStats {
  std::size_t cosets_defined = 0;  // total, including cosets later identified
  std::size_t max_live = 0;
};

// Coset enumeration for the subgroup generated by `subgroup_gens`, relator by
// relator from each live coset in turn (HLT), with coincidence processing.
// Returns the standardised table. Hitting `coset_limit` definitions throws
// ResourceError, which says nothing about whether the index is finite.
CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                        std::size_t coset_limit = kDefaultCosetLimit,
                        EnumerationStats* stats = nullptr);

}  // namespace medtk::groups
