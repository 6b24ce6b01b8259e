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

#include "medtk/exact/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace medtk::exact {
namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

// Dense SNF on an owned matrix; returns the non-zero diagonal.
std::vector<Integer> dense_smith(std::vector<std::vector<Integer>> a) {
  const std::size_t m = a.size();
  const std::size_t n = m ? a[0].size() : 0;
  std::vector<Integer> diag;
  std::size_t t = 0;
  while (t < m && t < n) {
    // smallest non-zero magnitude in the trailing block
    std::size_t pi = m, pj = n;
    Integer best;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < n; ++j) {
        if (a[i][j] != 0 && (pi == m || abs_value(a[i][j]) < best)) {
          best = abs_value(a[i][j]);
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == m) break;
    std::swap(a[t], a[pi]);
    for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][pj]);

    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        Integer q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        Integer q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (std::size_t i = 0; i < m; ++i) std::swap(a[i][t], a[i][j]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // pivot must divide the whole trailing block
      bool fixed = false;
      for (std::size_t i = t + 1; i < m && !fixed; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < n; ++k) a[t][k] += a[i][k];
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    diag.push_back(abs_value(a[t][t]));
    ++t;
  }
  return diag;
}

}  // namespace

void SparseIntMatrix::add(std::size_t row, std::size_t col, const Integer& value) {
  auto& r = entries[row];
  for (auto it = r.begin(); it != r.end(); ++it) {
    if (it->first == col) {
      it->second += value;
      if (it->second == 0) r.erase(it);
      return;
    }
  }
  if (value != 0) r.emplace_back(col, value);
}

std::vector<Integer> SmithForm::torsion() const {
  std::vector<Integer> out;
  for (const Integer& d : diagonal) {
    if (d > 1) out.push_back(d);
  }
  return out;
}

SmithForm smith_normal_form(SparseIntMatrix m) {
  // Rows as ordered maps plus a column -> rows index.
  std::vector<std::map<std::size_t, Integer>> rows(m.rows);
  std::vector<std::set<std::size_t>> col_rows(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (auto& [c, v] : m.entries[i]) {
      if (v == 0) continue;
      rows[i][c] += v;
      col_rows[c].insert(i);
    }
  }
  std::vector<char> row_alive(m.rows, 1);
  SmithForm out;

  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t c = 0; c < m.cols; ++c) {
      // unit pivot in column c, preferring the sparsest row
      std::size_t pivot_row = m.rows;
      for (std::size_t r : col_rows[c]) {
        const Integer& v = rows[r].at(c);
        if ((v == 1 || v == -1) &&
            (pivot_row == m.rows || rows[r].size() < rows[pivot_row].size())) {
          pivot_row = r;
        }
      }
      if (pivot_row == m.rows) continue;
      const Integer pivot = rows[pivot_row].at(c);
      std::vector<std::size_t> targets(col_rows[c].begin(), col_rows[c].end());
      for (std::size_t r : targets) {
        if (r == pivot_row) continue;
        Integer factor = rows[r].at(c) * pivot;  // pivot^-1 == pivot for units
        for (auto& [pc, pv] : rows[pivot_row]) {
          Integer& slot = rows[r][pc];
          slot -= factor * pv;
          if (slot == 0) {
            rows[r].erase(pc);
            col_rows[pc].erase(r);
          } else {
            col_rows[pc].insert(r);
          }
        }
      }
      for (auto& [pc, pv] : rows[pivot_row]) col_rows[pc].erase(pivot_row);
      rows[pivot_row].clear();
      row_alive[pivot_row] = 0;
      ++out.rank;
      out.diagonal.push_back(1);
      progress = true;
    }
  }

  // Residual dense block.
  std::vector<std::size_t> live_rows, live_cols;
  for (std::size_t r = 0; r < m.rows; ++r) {
    if (row_alive[r] && !rows[r].empty()) live_rows.push_back(r);
  }
  for (std::size_t c = 0; c < m.cols; ++c) {
    if (!col_rows[c].empty()) live_cols.push_back(c);
  }
  if (!live_rows.empty()) {
    std::vector<std::vector<Integer>> dense(live_rows.size(),
                                            std::vector<Integer>(live_cols.size()));
    for (std::size_t i = 0; i < live_rows.size(); ++i) {
      for (auto& [c, v] : rows[live_rows[i]]) {
        auto j = static_cast<std::size_t>(
            std::lower_bound(live_cols.begin(), live_cols.end(), c) - live_cols.begin());
        dense[i][j] = v;
      }
    }
    for (Integer& d : dense_smith(std::move(dense))) {
      ++out.rank;
      out.diagonal.push_back(std::move(d));
    }
  }
  return out;
}

SmithForm smith_normal_form(const std::vector<std::vector<Integer>>& dense) {
  std::size_t cols = dense.empty() ? 0 : dense[0].size();
  SparseIntMatrix m(dense.size(), cols);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (dense[i][j] != 0) m.entries[i].emplace_back(j, dense[i][j]);
    }
  }
  return smith_normal_form(std::move(m));
}

}  // namespace medtk::exact
