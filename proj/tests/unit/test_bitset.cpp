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

#include <vector>

#include "doctest.h"
#include "medtk/bitset.hpp"
#include "medtk/errors.hpp"

using medtk::Bitset;

TEST_CASE("basic membership and counting") {
  Bitset b(130, {0, 64, 129});
  CHECK(b.count() == 3);
  CHECK(b.test(64));
  CHECK_FALSE(b.test(63));
  CHECK(b.first() == 0);
  b.reset(0);
  CHECK(b.first() == 64);
  CHECK(b.indices() == std::vector<int>{64, 129});
  CHECK(b.complement().count() == 128);
  CHECK(Bitset(5).first() == 5);
  CHECK(Bitset::full(70).count() == 70);
}

TEST_CASE("set algebra") {
  Bitset a(10, {1, 2, 3}), b(10, {3, 4});
  CHECK((a & b) == Bitset(10, {3}));
  CHECK((a | b) == Bitset(10, {1, 2, 3, 4}));
  CHECK(a.intersects(b));
  CHECK(Bitset(10, {3}).is_subset_of(a));
  CHECK(a.intersection_count(b) == 1);
  CHECK(a.symmetric_difference_count(b) == 3);
  CHECK_THROWS_AS(a.intersects(Bitset(11)), medtk::ContractError);
}

TEST_CASE("ordering is lexicographic on member lists") {
  CHECK(Bitset(8, {0, 5}) < Bitset(8, {1}));
  CHECK(Bitset(8, {0}) < Bitset(8, {0, 1}));
  CHECK(Bitset(8, {2, 3}) > Bitset(8, {2}));
  CHECK((Bitset(8, {2, 3}) <=> Bitset(8, {2, 3})) == 0);
}
