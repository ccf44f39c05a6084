// Copyright 2026 The flipdist Authors
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

#ifndef FLIPDIST_CORE_ERROR_HPP_
#define FLIPDIST_CORE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flipdist {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. `offset` is the byte position of the first bad byte.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class InvalidTriangulation : public Error {
 public:
  using Error::Error;
};

class NotADiagonal : public Error {
 public:
  using Error::Error;
};

// A size guard (enumeration cap, LP cap, sweep cap) was exceeded.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// A search ran out of its node or pivot budget before finishing.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace flipdist

#endif  // FLIPDIST_CORE_ERROR_HPP_
