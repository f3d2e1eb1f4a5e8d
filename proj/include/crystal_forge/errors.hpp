// Copyright 2026 The crystal-forge Authors
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

#ifndef CRYSTAL_FORGE_ERRORS_HPP_
#define CRYSTAL_FORGE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace crystal_forge {

// A violated precondition of a domain operation (bad diagram string,
// non-dominant weight, shape mismatch, ...). The CLI maps it to exit code 1.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// A crystal whose shape contradicts the normal highest-weight structure
// assumed by decomposition and isomorphism search.
class StructureError : public DomainError {
 public:
  explicit StructureError(const std::string& what) : DomainError(what) {}
};

// A configurable resource cap (vertex count) was exceeded. Exit code 2.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace crystal_forge

#endif  // CRYSTAL_FORGE_ERRORS_HPP_
