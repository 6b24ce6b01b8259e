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

#include "medtk/groups/abelian.hpp"

#include <algorithm>

namespace medtk::groups {

exact::SparseIntMatrix exponent_matrix(const Presentation& pres) {
  exact::SparseIntMatrix m(pres.relators().size(), static_cast<std::size_t>(pres.generator_count()));
  for (std::size_t r = 0; r < pres.relators().size(); ++r) {
    for (int g = 1; g <= pres.generator_count(); ++g) {
      if (int e = exponent_sum(pres.relators()[r], g)) m.add(r, static_cast<std::size_t>(g - 1), e);
    }
  }
  return m;
}

std::vector<Integer> abelian_invariants(const Presentation& pres) {
  exact::SmithForm snf = exact::smith_normal_form(exponent_matrix(pres));
  std::vector<Integer> out;
  for (const Integer& d : snf.diagonal) {
    Integer a = abs(d);
    if (a > 1) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  for (int i = static_cast<int>(snf.rank); i < pres.generator_count(); ++i) out.push_back(0);
  return out;
}

std::vector<std::vector<int>> mod2_homomorphism_basis(const Presentation& pres) {
  const int k = pres.generator_count();
  std::vector<std::vector<int>> rows;
  for (const Word& r : pres.relators()) {
    std::vector<int> row(k);
    for (int g = 1; g <= k; ++g) row[g - 1] = exponent_sum(r, g) & 1;
    rows.push_back(std::move(row));
  }
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (int col = 0; col < k && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p][col]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && rows[r][col]) {
        for (int c = 0; c < k; ++c) rows[r][c] ^= rows[rank][c];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < k; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<int> v(k, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < rank; ++r) v[pivot_col[r]] = rows[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace medtk::groups
