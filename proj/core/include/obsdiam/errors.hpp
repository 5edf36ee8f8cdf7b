// Copyright 2026 The obsdiam Authors
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

#ifndef OBSDIAM_ERRORS_HPP_
#define OBSDIAM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace obsdiam {

// Argument outside the mathematical domain of an operation (alpha > 1,
// kappa outside (0,1), unnormalized masses, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A documented precondition between arguments does not hold, e.g. a measure
// handed to the compression construction whose partial diameter is not 1.
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An enumeration cap was exceeded. Never silently approximated.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (rational literals, JSON files, screen specs).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace obsdiam

#endif  // OBSDIAM_ERRORS_HPP_
