// Copyright 2026 The Complements Authors
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

#ifndef COMPLEMENTS_ERROR_HPP_
#define COMPLEMENTS_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace complements {

// Base class of every error raised by the library. The CLI maps these to
// exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input (rationals, lists, type tags).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the domain of the operation, e.g. a multiplicity
// outside [0,1].
class DomainError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace complements

#endif  // COMPLEMENTS_ERROR_HPP_
