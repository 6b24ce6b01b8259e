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

#include <vector>

#include "medtk/exact/smith.hpp"
#include "medtk/groups/presentation.hpp"

namespace medtk::groups {

using exact::Integer;

// Invariant factors of the abelianisation: torsion factors d1 | d2 | ... (all
// > 1, ascending) followed by one 0 per free Z summand.
std::vector<Integer> abelian_invariants(const Presentation& pres);

// Relator exponent-sum matrix, one row per relator.
exact::SparseIntMatrix exponent_matrix(const Presentation& pres);

// Basis of the homomorphisms G -> Z/2, each as a 0/1 vector over the
// generators (1 = generator maps to the non-trivial element). Reduced row
// echelon order, one vector per free column.
std::vector<std::vector<int>> mod2_homomorphism_basis(const Presentation& pres);

}  // namespace medtk::groups
