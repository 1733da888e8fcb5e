// Copyright 2026 The exmatch Authors
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

#ifndef EXMATCH_ERRORS_HPP
#define EXMATCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace exmatch {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (unknown edge,
/// invalid matching, missing bipartition, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph or matching file.
class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// Solver parameters are missing or inconsistent with the instance.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// The structural parameter handed to the solver is smaller than the
/// instance's true value, detected because a guaranteed skip was not found.
class ParameterTooSmallError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

/// Instance too large for a brute-force oracle.
class OracleCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace exmatch

#endif  // EXMATCH_ERRORS_HPP
