// Copyright 2026 The swapsat Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swapsat {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (QASM, DIMACS, JSON). Carries a 1-based position when
/// one is known; line 0 means "no position".
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::size_t column = 0)
      : Error(line == 0 ? message
                        : std::to_string(line) + ":" + std::to_string(column) +
                              ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that uses a construct outside the supported subset.
class UnsupportedError : public ParseError {
 public:
  UnsupportedError(const std::string& construct, std::size_t line = 0,
                   std::size_t column = 0)
      : ParseError("unsupported construct '" + construct + "'", line, column),
        construct_(construct) {}

  const std::string& construct() const { return construct_; }

 private:
  std::string construct_;
};

/// A value violates a documented precondition or invariant.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The instance cannot be mapped at all (e.g. more logical than physical
/// qubits).
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// SAT backend failure (external process error, unparsable output).
class SolverError : public Error {
 public:
  using Error::Error;
};

/// A broken internal invariant: a bad model, an inconsistent plan, a solver
/// answer that fails its own check. Always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace swapsat
