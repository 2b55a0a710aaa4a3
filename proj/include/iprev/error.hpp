// Copyright 2026 The iprev Authors
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

#ifndef IPREV_ERROR_HPP
#define IPREV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace iprev {

/// Invalid input: malformed data, mismatched spaces, violated preconditions.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A broken internal invariant (e.g. primal/dual value mismatch). Reaching
/// this indicates a bug in the library, not bad user input.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace iprev

#endif  // IPREV_ERROR_HPP
