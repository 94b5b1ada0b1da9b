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

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace kclique {

using u128 = unsigned __int128;

/// Unsigned 128-bit clique counter. Every arithmetic path is checked; an
/// overflow raises OverflowError rather than wrapping.
class CliqueCount {
 public:
  constexpr CliqueCount() = default;
  constexpr explicit CliqueCount(u128 v) : value_(v) {}

  constexpr u128 value() const { return value_; }
  constexpr std::uint64_t high() const { return static_cast<std::uint64_t>(value_ >> 64); }
  constexpr std::uint64_t low() const { return static_cast<std::uint64_t>(value_); }

  CliqueCount& operator+=(CliqueCount other) {
    u128 sum;
    if (__builtin_add_overflow(value_, other.value_, &sum))
      throw OverflowError("clique count exceeds 128 bits");
    value_ = sum;
    return *this;
  }
  CliqueCount& operator+=(std::uint64_t other) { return *this += CliqueCount(other); }

  friend CliqueCount operator+(CliqueCount a, CliqueCount b) { return a += b; }
  friend constexpr bool operator==(CliqueCount, CliqueCount) = default;
  friend constexpr auto operator<=>(CliqueCount a, CliqueCount b) { return a.value_ <=> b.value_; }

  std::string to_string() const {
    if (value_ == 0) return "0";
    std::string out;
    for (u128 v = value_; v != 0; v /= 10) out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    std::reverse(out.begin(), out.end());
    return out;
  }

  /// Parses a decimal string; nullopt on empty input, non-digits or overflow.
  static std::optional<CliqueCount> parse(std::string_view s) {
    if (s.empty()) return std::nullopt;
    u128 v = 0;
    for (char c : s) {
      if (c < '0' || c > '9') return std::nullopt;
      if (__builtin_mul_overflow(v, u128{10}, &v)) return std::nullopt;
      if (__builtin_add_overflow(v, static_cast<u128>(c - '0'), &v)) return std::nullopt;
    }
    return CliqueCount(v);
  }

 private:
  u128 value_ = 0;
};

}  // namespace kclique
