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

#ifndef DOMCLO_ERROR_HPP
#define DOMCLO_ERROR_HPP

#include <stdexcept>
#include <string>

namespace domclo {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input: unknown labels, bad syntax.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Ground set too large for the requested operation.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// API misuse, e.g. mixing subsets from different ground sets.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A structure failed validation (family not intersection-closed, cyclic
/// order, ragged matrix, ...). The message carries the witness.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an operator lacking a required property.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace domclo

#endif  // DOMCLO_ERROR_HPP
