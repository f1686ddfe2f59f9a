// Copyright 2026 The Cohesia Authors.
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

#ifndef COHESIA_ERROR_H_
#define COHESIA_ERROR_H_

#include <stdexcept>
#include <string>

namespace cohesia {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller violated an operation's precondition.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

// A file could not be read.
class IoError : public Error {
 public:
  using Error::Error;
};

// Malformed input stream. `line` is 1-based, 0 when not line-oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// A context-factor profile requests something the engine does not produce.
class UnsupportedFactorError : public Error {
 public:
  UnsupportedFactorError(std::string field, const std::string& message)
      : Error("unsupported " + field + ": " + message),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

}  // namespace cohesia

#endif  // COHESIA_ERROR_H_
