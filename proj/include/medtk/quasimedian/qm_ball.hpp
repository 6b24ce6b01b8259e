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
#include <map>
#include <string>
#include <vector>

#include "medtk/graphprod/coset_complex.hpp"
#include "medtk/graphprod/normal_form.hpp"
#include "medtk/graphs/graph.hpp"

namespace medtk::quasimedian {

using graphprod::GraphProductSpec;
using graphprod::NormalForm;

// The ball of the given syllable radius about the identity in the Cayley
// graph of a graph product with respect to the union of its vertex groups.
struct QMBall {
  graphs::FiniteGraph graph;
  std::vector<NormalForm> labels;  // by length, then normal form; vertex 0 is the identity
  int center = 0;
  int radius = 0;
  // No right multiplication by a vertex-group element leaves the ball, so the
  // ball is the whole (finite) group.
  bool closed = false;
  std::map<NormalForm, int> index;

  // -1 outside the ball.
  int find(const NormalForm& g) const;
  int length(int v) const { return static_cast<int>(labels[v].size()); }
};

// ContractError for a negative radius; ResourceError past `cap` elements.
QMBall build_qm_ball(const GraphProductSpec& spec, int radius,
                     std::size_t cap = graphprod::kDefaultComplexCap);

struct CosetViolation {
  int vertex = 0;
  std::string kind;
  std::string detail;
};

struct CosetReport {
  int margin = 0;
  std::size_t checked = 0;          // vertices examined
  std::size_t cliques_checked = 0;
  std::size_t prisms_checked = 0;
  std::size_t gates_checked = 0;    // only closed balls have exact distances
  std::vector<CosetViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks, at each vertex g of length <= radius - margin whose neighbourhood
// lies in the ball, that the maximal cliques through g are exactly the cosets
// gG_u (one per vertex of Gamma) and that the prisms through g are exactly
// the cosets g<Lambda> for cliques Lambda of Gamma. Prisms are checked where
// the longest one fits in the ball. In closed balls every clique is also
// checked to be gated. ContractError unless 0 <= margin <= radius.
CosetReport verify_coset_structure(const GraphProductSpec& spec, const QMBall& ball, int margin);

}  // namespace medtk::quasimedian
