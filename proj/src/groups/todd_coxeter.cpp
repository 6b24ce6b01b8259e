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

#include "medtk/groups/todd_coxeter.hpp"

#include <algorithm>

#include "medtk/errors.hpp"

namespace medtk::groups {
namespace {

class Enumerator {
 public:
  Enumerator(int generators, std::size_t limit) : width_(2 * generators), limit_(limit) { add_coset(); }

  void scan_and_fill(int c, const Word& w) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(w.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, letter_column(w[i])) >= 0) f = entry(f, letter_column(w[i++]));
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, letter_column(w[j]) ^ 1) >= 0) b = entry(b, letter_column(w[j--]) ^ 1);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        set(f, letter_column(w[i]), b);
        return;
      }
      define(f, letter_column(w[i]));
    }
  }

  void run(const std::vector<Word>& relators, const std::vector<Word>& subgroup) {
    for (const Word& w : subgroup) scan_and_fill(0, w);
    for (int c = 0; c < static_cast<int>(p_.size()); ++c) {
      if (!alive(c)) continue;
      for (const Word& r : relators) {
        scan_and_fill(c, r);
        if (!alive(c)) break;
      }
      if (!alive(c)) continue;
      for (int col = 0; col < width_; ++col) {
        if (entry(c, col) < 0) define(c, col);
      }
    }
  }

  CosetTable finish() const {
    std::vector<int> renumber(p_.size(), -1);
    int live = 0;
    for (std::size_t c = 0; c < p_.size(); ++c) {
      if (alive(static_cast<int>(c))) renumber[c] = live++;
    }
    std::vector<int> data;
    data.reserve(static_cast<std::size_t>(live) * width_);
    for (std::size_t c = 0; c < p_.size(); ++c) {
      if (!alive(static_cast<int>(c))) continue;
      for (int col = 0; col < width_; ++col) data.push_back(renumber[entry(static_cast<int>(c), col)]);
    }
    return CosetTable(width_ / 2, std::move(data)).standardized(0);
  }

  std::size_t defined() const { return p_.size(); }
  std::size_t max_live() const { return max_live_; }

 private:
  int entry(int c, int col) const { return table_[static_cast<std::size_t>(c) * width_ + col]; }
  int& entry(int c, int col) { return table_[static_cast<std::size_t>(c) * width_ + col]; }
  bool alive(int c) const { return p_[c] == c; }

  void set(int c, int col, int d) {
    entry(c, col) = d;
    entry(d, col ^ 1) = c;
  }

  int add_coset() {
    if (p_.size() >= limit_) {
      throw_resource("coset enumeration cosets defined", static_cast<long long>(p_.size() + 1),
                     static_cast<long long>(limit_));
    }
    int d = static_cast<int>(p_.size());
    p_.push_back(d);
    table_.resize(table_.size() + width_, -1);
    ++live_;
    max_live_ = std::max(max_live_, live_);
    return d;
  }

  void define(int c, int col) { set(c, col, add_coset()); }

  int rep(int k) {
    int root = k;
    while (p_[root] != root) root = p_[root];
    while (p_[k] != root) {
      int next = p_[k];
      p_[k] = root;
      k = next;
    }
    return root;
  }

  void merge(int k, int l, std::vector<int>& queue) {
    int a = rep(k), b = rep(l);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p_[b] = a;
    --live_;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const int g = queue[i];
      for (int col = 0; col < width_; ++col) {
        const int d = entry(g, col);
        if (d < 0) continue;
        entry(d, col ^ 1) = -1;
        const int mu = rep(g);
        const int nu = rep(d);
        if (entry(mu, col) >= 0) {
          merge(nu, entry(mu, col), queue);
        } else if (entry(nu, col ^ 1) >= 0) {
          merge(mu, entry(nu, col ^ 1), queue);
        } else {
          set(mu, col, nu);
        }
      }
    }
  }

  int width_;
  std::size_t limit_;
  std::vector<int> table_;
  std::vector<int> p_;
  std::size_t live_ = 0;
  std::size_t max_live_ = 0;
};

}  // namespace

CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup_gens,
                        std::size_t coset_limit, EnumerationStats* stats) {
  if (coset_limit == 0) throw ContractError("coset limit must be positive");
  for (const Word& w : subgroup_gens) {
    for (int x : w) {
      if (x == 0 || std::abs(x) > pres.generator_count()) throw InputError("subgroup generator letter out of range");
    }
  }
  if (pres.generator_count() == 0) return CosetTable(0, {});
  std::vector<Word> subgroup;
  for (const Word& w : subgroup_gens) subgroup.push_back(free_reduce(w));
  Enumerator e(pres.generator_count(), coset_limit);
  auto record = [&] {
    if (stats) {
      stats->cosets_defined = e.defined();
      stats->max_live = e.max_live();
    }
  };
  try {
    e.run(pres.relators(), subgroup);
  } catch (const ResourceError&) {
    record();
    throw;
  }
  record();
  CosetTable table = e.finish();
  if (!table.closed_under(pres.relators())) throw InternalError("enumerated coset table violates a relator");
  for (const Word& w : subgroup) {
    if (!table.contains(w)) throw InternalError("enumerated coset table misses a subgroup generator");
  }
  return table;
}

}  // namespace medtk::groups
