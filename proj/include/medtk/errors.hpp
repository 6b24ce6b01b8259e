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

#include <stdexcept>
#include <string>

namespace medtk {

// A configured size cap was exceeded. Never evidence about the mathematics.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller broke an operation's precondition (non-convex set passed where a
// convex one is required, a permutation that is not an automorphism, ...).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The request is outside the regime this toolkit can verify end to end.
class UnsupportedRegime : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation on a truncated complex reached the truncation boundary.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data (JSON files, graph descriptions, words).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A mathematical guarantee that should hold by construction failed. Seeing
// one of these means a bug, not a property of the input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

[[noreturn]] void throw_resource(const std::string& what, long long value, long long cap);

}  // namespace medtk
