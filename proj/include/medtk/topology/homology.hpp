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

#include "medtk/exact/smith.hpp"
#include "medtk/topology/complex.hpp"

namespace medtk::topology {

/// Integer homology of a finite simplicial complex.
///
/// Index d of every vector refers to dimension d, for d = 0 .. dimension().
/// `torsion[d]` lists the invariant factors greater than one of H_d. Reduced
/// homology differs from the unreduced groups only in degree zero.
struct HomologyProfile {
  std::vector<std::size_t> betti;
  std::vector<std::size_t> reduced_betti;
  std::vector<std::vector<exact::Integer>> torsion;
  std::vector<std::size_t> face_counts;
  long long euler_characteristic = 0;

  /// Reduced H_d is non-zero (free part or torsion). False outside the
  /// computed range.
  bool reduced_nonzero(int d) const;
};

inline constexpr std::size_t kDefaultSimplexCap = 100000;

/// Boundary matrices are assembled with the face-position sign convention
/// (omitting vertex i of a simplex contributes (-1)^i) and reduced by the
/// exact Smith normal form. Both ∂∘∂ = 0 and the Euler characteristic
/// identity are asserted; a violation raises InternalError.
HomologyProfile homology(const SimplicialComplex& sc, std::size_t simplex_cap = kDefaultSimplexCap);

/// Reduced homology in dimension exactly n is non-zero.
bool nontrivial_in_dim(const SimplicialComplex& sc, int n,
                       std::size_t simplex_cap = kDefaultSimplexCap);

}  // namespace medtk::topology
