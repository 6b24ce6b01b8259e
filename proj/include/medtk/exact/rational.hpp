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
#include <vector>

#include "medtk/exact/smith.hpp"

namespace medtk::exact {

using Rational = boost::multiprecision::cpp_rational;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Basis of {x : A x = 0} for an m x cols matrix A, one vector per free column
// of the reduced row echelon form, in column order.
std::vector<std::vector<Rational>> nullspace(RationalMatrix a, std::size_t cols);

// Scales a rational vector to a primitive integer vector with the same
// direction (first non-zero entry keeps its sign).
std::vector<Integer> primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace medtk::exact
