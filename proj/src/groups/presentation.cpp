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

#include "medtk/groups/presentation.hpp"

#include <algorithm>

#include "medtk/errors.hpp"

namespace medtk::groups {

Word free_reduce(std::span<const int> w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word inverse(std::span<const int> w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(std::span<const int> a, std::span<const int> b) {
  Word out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

int exponent_sum(std::span<const int> w, int g) {
  int s = 0;
  for (int x : w) {
    if (x == g) ++s;
    if (x == -g) --s;
  }
  return s;
}

Presentation::Presentation(int generator_count, std::vector<Word> relators,
                           std::vector<std::string> names)
    : generators_(generator_count), names_(std::move(names)) {
  if (generator_count < 0) throw InputError("negative generator count");
  for (const Word& r : relators) {
    for (int x : r) {
      if (x == 0 || x > generator_count || -x > generator_count) {
        throw InputError("relator letter " + std::to_string(x) + " out of range");
      }
    }
    Word reduced = free_reduce(r);
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
  if (names_.empty()) {
    for (int i = 1; i <= generator_count; ++i) names_.push_back("x" + std::to_string(i));
  }
  if (static_cast<int>(names_.size()) != generator_count) {
    throw InputError("generator name count does not match the generator count");
  }
}

Presentation Presentation::with_relators(const std::vector<Word>& extra) const {
  std::vector<Word> all = relators_;
  all.insert(all.end(), extra.begin(), extra.end());
  return Presentation(generators_, std::move(all), names_);
}

Presentation Presentation::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != generators_) throw ContractError("permutation size mismatch");
  std::vector<Word> rels;
  for (const Word& r : relators_) {
    Word w;
    for (int x : r) w.push_back(x > 0 ? perm[x - 1] + 1 : -(perm[-x - 1] + 1));
    rels.push_back(std::move(w));
  }
  std::vector<std::string> names(names_.size());
  for (int i = 0; i < generators_; ++i) names[perm[i]] = names_[i];
  return Presentation(generators_, std::move(rels), std::move(names));
}

std::string Presentation::format_word(std::span<const int> w) const {
  if (w.empty()) return "1";
  std::string out;
  for (int x : w) {
    if (!out.empty()) out += ' ';
    out += names_[std::abs(x) - 1];
    if (x < 0) out += "^-1";
  }
  return out;
}

CosetTable::CosetTable(int generator_count, std::vector<int> data)
    : generators_(generator_count), data_(std::move(data)) {
  const int w = row_width();
  if (generator_count < 0 || (w == 0 && !data_.empty()) ||
      (w > 0 && data_.size() % static_cast<std::size_t>(w) != 0)) {
    throw ContractError("coset table has a malformed shape");
  }
  const int n = coset_count();
  if (w > 0 && n == 0) throw ContractError("coset table has no cosets");
  for (int c = 0; c < n; ++c) {
    for (int col = 0; col < w; ++col) {
      int d = data_[static_cast<std::size_t>(w) * c + col];
      if (d < 0 || d >= n) throw ContractError("coset table entry undefined or out of range");
      if (data_[static_cast<std::size_t>(w) * d + (col ^ 1)] != c) {
        throw ContractError("coset table columns are not mutually inverse");
      }
    }
  }
}

int CosetTable::coset_count() const {
  return generators_ == 0 ? 1 : static_cast<int>(data_.size() / static_cast<std::size_t>(row_width()));
}

int CosetTable::trace(int coset, std::span<const int> word) const {
  for (int x : word) coset = act(coset, x);
  return coset;
}

bool CosetTable::closed_under(const std::vector<Word>& relators) const {
  for (int c = 0; c < coset_count(); ++c) {
    for (const Word& r : relators) {
      if (trace(c, r) != c) return false;
    }
  }
  return true;
}

CosetTable CosetTable::standardized(int base) const {
  const int n = coset_count();
  const int w = row_width();
  if (base < 0 || base >= n) throw ContractError("standardisation base out of range");
  if (w == 0) return *this;
  std::vector<int> order{base};
  std::vector<int> renumber(n, -1);
  renumber[base] = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int col = 0; col < w; ++col) {
      int d = at_column(order[i], col);
      if (renumber[d] < 0) {
        renumber[d] = static_cast<int>(order.size());
        order.push_back(d);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) throw ContractError("coset table is not transitive");
  std::vector<int> out(data_.size());
  for (int i = 0; i < n; ++i) {
    for (int col = 0; col < w; ++col) out[static_cast<std::size_t>(w) * i + col] = renumber[at_column(order[i], col)];
  }
  return CosetTable(generators_, std::move(out));
}

}  // namespace medtk::groups
