// Copyright 2026 The kclique Authors
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

namespace kclique {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class IoError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised instead of wrapping when a clique count or binomial exceeds 128 bits.
class OverflowError : public std::overflow_error {
  using std::overflow_error::overflow_error;
};

class ConfigError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An oracle was asked to run beyond its configured limit.
class LimitError : public std::length_error {
  using std::length_error::length_error;
};

}  // namespace kclique
