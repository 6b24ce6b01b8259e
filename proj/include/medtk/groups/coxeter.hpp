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

#include <optional>
#include <string>
#include <vector>

#include "medtk/groups/dinfty.hpp"
#include "medtk/groups/presentation.hpp"
#include "medtk/groups/todd_coxeter.hpp"

namespace medtk::groups {

inline constexpr int kAffineCoxeterCap = 5;

// The affine Coxeter group of type A_n as Lambda x| S_{n+1}, where Lambda is
// the root lattice {v in Z^{n+1} : sum v = 0}. Generators l1..ln are the basis
// e_i - e_{i+1}, then s1..sn the adjacent transpositions; relators are the
// lattice commutators, the Coxeter relations and s_j l_i s_j^-1 = s_j(l_i).
Presentation build_affine_coxeter(int n);

// Lambda x| D4 on generators a, b, c (lattice) and x, y, z (the dihedral
// group, x and y commuting involutions swapped by z).
Presentation lattice_by_d4();

struct D4Quotient {
  std::string name;     // "x=y=1", "z=1", "x=yz"
  std::vector<Word> added;
  std::optional<int> order;  // empty when the coset limit was reached
  EnumerationStats stats;
  // When enumeration stops at the limit: a verified morphism of the quotient
  // onto an infinite subgroup of D-infinity, which proves it infinite.
  std::optional<DinftyWitness> infinite_witness;
};

// Adds each of the three relation sets to lattice_by_d4() and enumerates
// cosets of the trivial subgroup. Quotients that exceed the limit are then
// searched for a D-infinity witness.
std::vector<D4Quotient> verify_d4_quotients(std::size_t coset_limit = kDefaultCosetLimit);

// No integer in [2, n] divides q.
bool fw_plus_cyclic(long long q, int n);

}  // namespace medtk::groups
