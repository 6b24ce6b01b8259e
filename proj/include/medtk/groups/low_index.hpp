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
#include <vector>

#include "medtk/groups/presentation.hpp"

namespace medtk::groups {

inline constexpr int kLowIndexCap = 12;
inline constexpr std::size_t kLowIndexNodeCap = 20'000'000;

// One standard coset table per conjugacy class of subgroups of index <= n,
// sorted by (index, table). The representative of a class is the table that
// is least among the standardisations at every base coset. Throws
// ResourceError beyond n > kLowIndexCap or `node_cap` search nodes.
std::vector<CosetTable> low_index_subgroups(const Presentation& pres, int n,
                                            std::size_t node_cap = kLowIndexNodeCap);

}  // namespace medtk::groups
