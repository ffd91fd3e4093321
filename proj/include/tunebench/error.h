// Copyright 2026 The Tunebench Authors
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
#ifndef TUNEBENCH_ERROR_H_
#define TUNEBENCH_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tunebench {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller supplied a value outside an operation's domain.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// ask() was called on a study with no suggestions left.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

// Malformed persisted text. line() is 1-based; 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A model fit or objective evaluation failed numerically.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace tunebench

#endif  // TUNEBENCH_ERROR_H_
