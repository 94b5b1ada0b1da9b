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
#include <span>
#include <utility>
#include <vector>

#include "clique_count.hpp"
#include "engine_orient.hpp"
#include "induced.hpp"

namespace kclique {

/// Pascal triangle C(n, r) for 0 <= r <= n <= max_n in 128-bit entries.
/// Entries that do not fit are flagged at construction and raise
/// OverflowError when read.
class BinomialTable {
 public:
  explicit BinomialTable(std::uint32_t max_n);

  std::uint32_t max_n() const { return max_n_; }

  /// C(n, r); zero when r < 0 or r > n. Throws LimitError for n > max_n.
  CliqueCount operator()(std::int64_t n, std::int64_t r) const;

 private:
  std::size_t index(std::uint32_t n, std::uint32_t r) const {
    return static_cast<std::size_t>(n) * (n + 1) / 2 + r;
  }

  std::uint32_t max_n_;
  std::vector<u128> table_;
  std::vector<bool> overflow_;
};

/// Pivot with the largest coverage |I & Adj(v)| over v in I (lowest local id
/// on ties); writes I minus the pivot's neighbors into `pruned`.
std::uint32_t find_pivot(const BitGraph& s, std::span<const Word> cand, std::span<Word> pruned);
std::pair<std::uint32_t, BitRow> find_pivot(const BitGraph& s, const BitRow& cand);

/// Per-worker stack for the pivot traversal: candidate row, pruned row,
/// pivot, pivot count and cursor per frame.
class PivotStack {
 public:
  PivotStack(std::uint32_t max_frames, std::size_t words_per_row);

  std::uint32_t max_frames() const { return max_frames_; }
  std::size_t allocated_words() const { return cand_.size() + pruned_.size(); }

 private:
  template <typename Sink>
  friend void traverse_pivot(const BitGraph&, std::uint32_t, bool, NodeCounter&, PivotStack&, Sink&&);

  struct Meta {
    std::uint32_t pivot;
    std::uint32_t pivots;
    std::size_t cursor;
  };
  std::uint32_t max_frames_;
  std::size_t stride_;
  std::vector<Word> cand_;
  std::vector<Word> pruned_;
  std::vector<Meta> meta_;
};

/// Frames a PivotStack needs for sub-graphs of up to `max_locals` vertices.
inline std::uint32_t pivot_stack_frames(std::uint32_t max_locals) { return max_locals + 1; }

/// Number of t-cliques in an undirected BitGraph via pivoting. A maximal
/// path with p pivots among its l vertices contributes C(p, l - t); branches
/// whose non-pivot vertices already exceed t are cut. `stats.visited` counts
/// the search-tree nodes that were expanded.
CliqueCount count_tcliques_pivot(const BitGraph& s, std::uint32_t t, NodeCounter& stats, PivotStack& stack,
                                 const BinomialTable& binom);
CliqueCount count_tcliques_pivot(const BitGraph& s, std::uint32_t t, NodeCounter& stats);

/// One traversal without the t cut-off; element t of the result is the
/// t-clique count, for t = 0 .. local_count.
std::vector<CliqueCount> count_all_tcliques_pivot(const BitGraph& s, NodeCounter& stats, PivotStack& stack,
                                                  const BinomialTable& binom);

}  // namespace kclique
