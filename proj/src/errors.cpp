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

#include "medtk/errors.hpp"

namespace medtk {

void throw_resource(const std::string& what, long long value, long long cap) {
  throw ResourceError(what + ": " + std::to_string(value) + " exceeds cap " +
                      std::to_string(cap));
}

}  // namespace medtk
