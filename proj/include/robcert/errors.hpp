// Copyright 2026 The robcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ROBCERT_ERRORS_HPP
#define ROBCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace robcert {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a documented precondition (unknown label, wrong size...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed input text (matrix, graph or certificate files).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Always a bug in robcert.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw InvalidArgument(message);
}

inline void ensure(bool condition, const std::string& message) {
  if (!condition) throw InvariantViolation(message);
}

}  // namespace detail
}  // namespace robcert

#endif  // ROBCERT_ERRORS_HPP
