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

#include "engine_orient.hpp"

#include <algorithm>
#include <stdexcept>

namespace kclique {

OrientStack::OrientStack(std::uint32_t max_levels, std::size_t words_per_row)
    : max_levels_(max_levels),
      stride_(words_per_row),
      rows_(static_cast<std::size_t>(max_levels) * words_per_row, 0),
      cursor_(max_levels, 0) {}

std::uint32_t orient_stack_levels(std::uint32_t t, std::uint32_t max_locals) {
  // Frames live at levels 1..t-1; the last level is counted by popcount.
  // A frame at level l holds a non-empty candidate set, so l <= max_locals.
  if (t < 2) return 0;
  return std::min(t - 1, max_locals);
}

CliqueCount count_tcliques_orient(const BitGraph& s, std::uint32_t t, NodeCounter& stats, OrientStack& stack) {
  const std::uint32_t n = s.local_count();
  if (t == 0) return CliqueCount(1);
  if (t == 1) return CliqueCount(n);
  if (n == 0) return CliqueCount(0);

  const std::size_t wpr = s.words_per_row();
  const std::uint32_t levels = orient_stack_levels(t, n);
  if (levels > stack.max_levels_ || wpr > stack.stride_)
    throw std::length_error("orientation stack too small for sub-graph");

  auto frame = [&](std::uint32_t depth) {
    return std::span<Word>(stack.rows_).subspan(depth * stack.stride_, wpr);
  };

  CliqueCount total;
  bits::fill_prefix(frame(0), n);
  stack.cursor_[0] = 0;
  std::uint32_t depth = 0;  // frame index; level = depth + 1
  while (true) {
    auto cand = frame(depth);
    std::size_t v = bits::next_set(cand, stack.cursor_[depth]);
    if (v == bits::npos) {
      if (depth == 0) break;
      --depth;
      continue;
    }
    stack.cursor_[depth] = v + 1;
    ++stats.visited;
    auto adj = s.row(static_cast<std::uint32_t>(v));
    if (depth + 2 == t) {
      total += bits::and_popcount(cand, adj);
      continue;
    }
    // In a DAG the frame at depth d holds at most n - d candidates, so a
    // frame at depth n - 1 cannot have children.
    if (depth + 1 == levels) continue;
    auto next = frame(depth + 1);
    bits::and_into(next, cand, adj);
    if (bits::any(next)) {
      ++depth;
      stack.cursor_[depth] = 0;
    }
  }
  return total;
}

CliqueCount count_tcliques_orient(const BitGraph& s, std::uint32_t t, NodeCounter& stats) {
  OrientStack stack(orient_stack_levels(t, s.local_count()), s.words_per_row());
  return count_tcliques_orient(s, t, stats, stack);
}

}  // namespace kclique
