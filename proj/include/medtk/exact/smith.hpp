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

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <utility>
#include <vector>

namespace medtk::exact {

using Integer = boost::multiprecision::cpp_int;

// Row-major sparse integer matrix; each row holds (column, value) pairs with
// distinct columns and non-zero values.
struct SparseIntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<std::pair<std::size_t, Integer>>> entries;

  SparseIntMatrix() = default;
  SparseIntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r) {}
  // Adds `value` at (row, col), merging with an existing entry.
  void add(std::size_t row, std::size_t col, const Integer& value);
};

struct SmithForm {
  std::size_t rank = 0;
  // Non-zero diagonal entries d_1 | d_2 | ... | d_rank, all positive.
  std::vector<Integer> diagonal;

  // Entries of `diagonal` greater than one.
  std::vector<Integer> torsion() const;
};

// Exact Smith normal form. Unit pivots are eliminated sparsely first; the
// residual block (usually tiny) is reduced densely with smallest-magnitude
// pivoting.
SmithForm smith_normal_form(SparseIntMatrix m);
SmithForm smith_normal_form(const std::vector<std::vector<Integer>>& dense);

}  // namespace medtk::exact
