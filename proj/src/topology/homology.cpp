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

#include "medtk/topology/homology.hpp"

#include <map>

#include "medtk/errors.hpp"

namespace medtk::topology {

bool HomologyProfile::reduced_nonzero(int d) const {
  if (d < 0 || static_cast<std::size_t>(d) >= reduced_betti.size()) return false;
  return reduced_betti[d] > 0 || !torsion[d].empty();
}

HomologyProfile homology(const SimplicialComplex& sc, std::size_t simplex_cap) {
  HomologyProfile out;
  const int dim = sc.dimension();
  if (dim < 0) return out;

  std::vector<std::vector<Simplex>> faces;
  std::size_t total = 0;
  for (int d = 0; d <= dim; ++d) {
    faces.push_back(sc.faces(d, simplex_cap));
    total += faces.back().size();
    if (total > simplex_cap) {
      throw_resource("homology simplex count", static_cast<long long>(total),
                     static_cast<long long>(simplex_cap));
    }
    out.face_counts.push_back(faces.back().size());
  }

  // boundary[d] : C_d -> C_{d-1}, stored with rows = (d-1)-faces.
  std::vector<exact::SparseIntMatrix> boundary(static_cast<std::size_t>(dim) + 1);
  for (int d = 1; d <= dim; ++d) {
    std::map<Simplex, std::size_t> row_of;
    for (std::size_t i = 0; i < faces[d - 1].size(); ++i) row_of.emplace(faces[d - 1][i], i);
    exact::SparseIntMatrix m(faces[d - 1].size(), faces[d].size());
    for (std::size_t c = 0; c < faces[d].size(); ++c) {
      const Simplex& s = faces[d][c];
      for (std::size_t i = 0; i < s.size(); ++i) {
        Simplex face;
        face.reserve(s.size() - 1);
        for (std::size_t j = 0; j < s.size(); ++j) {
          if (j != i) face.push_back(s[j]);
        }
        m.add(row_of.at(face), c, i % 2 ? -1 : 1);
      }
    }
    boundary[d] = std::move(m);
  }

  // ∂_{d} ∘ ∂_{d+1} = 0, column by column.
  for (int d = 1; d < dim; ++d) {
    std::vector<std::map<std::size_t, exact::Integer>> by_col(boundary[d].cols);
    for (std::size_t r = 0; r < boundary[d].rows; ++r) {
      for (const auto& [c, v] : boundary[d].entries[r]) by_col[c][r] = v;
    }
    std::vector<std::map<std::size_t, exact::Integer>> upper_cols(boundary[d + 1].cols);
    for (std::size_t r = 0; r < boundary[d + 1].rows; ++r) {
      for (const auto& [c, v] : boundary[d + 1].entries[r]) upper_cols[c][r] = v;
    }
    for (const auto& col : upper_cols) {
      std::map<std::size_t, exact::Integer> acc;
      for (const auto& [mid, coeff] : col) {
        for (const auto& [low, v] : by_col[mid]) acc[low] += coeff * v;
      }
      for (const auto& [low, v] : acc) {
        if (v != 0) throw InternalError("boundary of a boundary is non-zero");
      }
    }
  }

  std::vector<std::size_t> rank(static_cast<std::size_t>(dim) + 2, 0);
  std::vector<std::vector<exact::Integer>> torsion_of(static_cast<std::size_t>(dim) + 2);
  for (int d = 1; d <= dim; ++d) {
    auto snf = exact::smith_normal_form(boundary[d]);
    rank[d] = snf.rank;
    torsion_of[d] = snf.torsion();
  }
  long long euler_from_faces = 0;
  long long euler_from_betti = 0;
  for (int d = 0; d <= dim; ++d) {
    const std::size_t cycles = faces[d].size() - rank[d];
    const std::size_t b = cycles - rank[d + 1];
    out.betti.push_back(b);
    out.torsion.push_back(torsion_of[d + 1]);
    const long long sign = d % 2 ? -1 : 1;
    euler_from_faces += sign * static_cast<long long>(faces[d].size());
    euler_from_betti += sign * static_cast<long long>(b);
  }
  if (euler_from_faces != euler_from_betti) {
    throw InternalError("Euler characteristic mismatch between faces and Betti numbers");
  }
  out.euler_characteristic = euler_from_faces;
  out.reduced_betti = out.betti;
  out.reduced_betti[0] -= 1;
  return out;
}

bool nontrivial_in_dim(const SimplicialComplex& sc, int n, std::size_t simplex_cap) {
  return homology(sc, simplex_cap).reduced_nonzero(n);
}

}  // namespace medtk::topology
