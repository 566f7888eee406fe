// Copyright 2026 The boolham Authors
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

namespace boolham {

/** Malformed textual input (expressions, DIMACS, JSON, circuit text). */
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position);
  explicit ParseError(const std::string& what);

  /** Byte offset of the error in the input, or npos when unknown. */
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/** A size limit (qubit count, dense cap, term-count guard) was exceeded. */
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Operands disagree on qubit or variable count. */
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** An operator that must represent a 0/1-valued function does not. */
class NotBoolean : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace boolham
