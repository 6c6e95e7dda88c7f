// Copyright 2026 The Authors.
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

#ifndef PRIMCX_CORE_ERRORS_H_
#define PRIMCX_CORE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace primcx {

// Operands built over different ground sets, or malformed containers.
class StructuralError : public std::invalid_argument {
 public:
  explicit StructuralError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Arithmetic or parameter outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// The request is well-formed but exceeds what this implementation enumerates.
class CapabilityError : public std::runtime_error {
 public:
  explicit CapabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

// A loop guard tripped. Carries enough context to reproduce the run.
class IterationLimitError : public std::runtime_error {
 public:
  explicit IterationLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A checked guarantee failed at runtime.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what)
      : std::logic_error(what) {}
};

}  // namespace primcx

#endif  // PRIMCX_CORE_ERRORS_H_
