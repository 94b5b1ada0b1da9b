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

#include <cstdint>
#include <vector>

#include "clique_count.hpp"
#include "induced.hpp"

namespace kclique {

struct NodeCounter {
  std::uint64_t visited = 0;
};

/// Explicit DFS stack for the orientation traversal: one candidate row and a
/// cursor per level, sized up front for a maximum depth and row width.
class OrientStack {
 public:
  OrientStack(std::uint32_t max_levels, std::size_t words_per_row);

  std::uint32_t max_levels() const { return max_levels_; }
  std::size_t allocated_words() const { return rows_.size(); }

 private:
  friend CliqueCount count_tcliques_orient(const BitGraph&, std::uint32_t, NodeCounter&, OrientStack&);

  std::uint32_t max_levels_;
  std::size_t stride_;
  std::vector<Word> rows_;
  std::vector<std::size_t> cursor_;
};

/// Levels an OrientStack needs to count t-cliques in sub-graphs of up to
/// `max_locals` vertices.
std::uint32_t orient_stack_levels(std::uint32_t t, std::uint32_t max_locals);

/// Number of t-cliques in a directed BitGraph. Visits candidates in ascending
/// local order; `stats.visited` grows by one per branched vertex. t = 0
/// yields 1 and t = 1 yields local_count.
CliqueCount count_tcliques_orient(const BitGraph& s, std::uint32_t t, NodeCounter& stats, OrientStack& stack);

/// Convenience overload that allocates its own stack.
CliqueCount count_tcliques_orient(const BitGraph& s, std::uint32_t t, NodeCounter& stats);

}  // namespace kclique
