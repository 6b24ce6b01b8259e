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

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace medtk::groups {

// Letters are non-zero integers: +i is generator i (1-based), -i its inverse.
using Word = std::vector<int>;

Word free_reduce(std::span<const int> w);
Word inverse(std::span<const int> w);
Word concat(std::span<const int> a, std::span<const int> b);
// Exponent sum of generator `g` (1-based) in w.
int exponent_sum(std::span<const int> w, int g);

// Coset-table column of a letter: +i -> 2(i-1), -i -> 2(i-1)+1. The inverse
// letter's column is column ^ 1.
inline int letter_column(int letter) { return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1; }
inline int column_letter(int column) { return column % 2 ? -(column / 2 + 1) : column / 2 + 1; }

class Presentation {
 public:
  // Relators are freely reduced and empty ones dropped. Throws InputError for
  // a negative generator count or an out-of-range letter. Names default to
  // x1, x2, ...
  Presentation(int generator_count, std::vector<Word> relators, std::vector<std::string> names = {});

  int generator_count() const { return generators_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<std::string>& names() const { return names_; }

  // Same group with extra relators appended.
  Presentation with_relators(const std::vector<Word>& extra) const;
  // Relabels generator i as perm[i] (0-based); used for ordering-invariance
  // checks.
  Presentation permuted(const std::vector<int>& perm) const;

  std::string format_word(std::span<const int> w) const;

 private:
  int generators_;
  std::vector<Word> relators_;
  std::vector<std::string> names_;
};

// A complete coset table: every entry defined, each column a permutation,
// coset 0 the subgroup. Entries are stored row-major, 2 * generator_count
// columns per coset, in letter_column order.
class CosetTable {
 public:
  CosetTable() = default;
  // Throws ContractError unless the data forms a complete permutation table.
  CosetTable(int generator_count, std::vector<int> data);

  int generator_count() const { return generators_; }
  int coset_count() const;
  int act(int coset, int letter) const { return data_[row_width() * coset + letter_column(letter)]; }
  int at_column(int coset, int column) const { return data_[row_width() * coset + column]; }
  int trace(int coset, std::span<const int> word) const;
  bool closed_under(const std::vector<Word>& relators) const;
  // The word lies in the subgroup.
  bool contains(std::span<const int> word) const { return trace(0, word) == 0; }

  // Renumbered by first appearance in a breadth-first scan from `base`
  // (cosets in new order, columns in order). With base b the table is the
  // standard one for the conjugate subgroup stabilising b.
  CosetTable standardized(int base = 0) const;
  bool is_standard() const { return standardized(0) == *this; }

  const std::vector<int>& data() const { return data_; }
  friend auto operator<=>(const CosetTable&, const CosetTable&) = default;

 private:
  int row_width() const { return 2 * generators_; }

  int generators_ = 0;
  std::vector<int> data_;
};

}  // namespace medtk::groups
