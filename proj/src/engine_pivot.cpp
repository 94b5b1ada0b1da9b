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

#include "engine_pivot.hpp"

#include <stdexcept>
#include <string>

namespace kclique {

BinomialTable::BinomialTable(std::uint32_t max_n)
    : max_n_(max_n), table_(index(max_n + 1, 0), 0), overflow_(table_.size(), false) {
  for (std::uint32_t n = 0; n <= max_n; ++n) {
    table_[index(n, 0)] = 1;
    table_[index(n, n)] = 1;
    for (std::uint32_t r = 1; r < n; ++r) {
      std::size_t a = index(n - 1, r - 1), b = index(n - 1, r), here = index(n, r);
      u128 sum;
      overflow_[here] = overflow_[a] || overflow_[b] || __builtin_add_overflow(table_[a], table_[b], &sum);
      table_[here] = overflow_[here] ? 0 : sum;
    }
  }
}

CliqueCount BinomialTable::operator()(std::int64_t n, std::int64_t r) const {
  if (n < 0) throw std::invalid_argument("binomial: negative n");
  if (n > static_cast<std::int64_t>(max_n_))
    throw LimitError("binomial: n = " + std::to_string(n) + " exceeds table bound " + std::to_string(max_n_));
  if (r < 0 || r > n) return CliqueCount(0);
  std::size_t i = index(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(r));
  if (overflow_[i])
    throw OverflowError("binomial C(" + std::to_string(n) + ", " + std::to_string(r) + ") exceeds 128 bits");
  return CliqueCount(table_[i]);
}

std::uint32_t find_pivot(const BitGraph& s, std::span<const Word> cand, std::span<Word> pruned) {
  std::uint32_t pivot = 0;
  std::int64_t best = -1;
  for (std::size_t v = bits::next_set(cand, 0); v != bits::npos; v = bits::next_set(cand, v + 1)) {
    std::int64_t cover = bits::and_popcount(cand, s.row(static_cast<std::uint32_t>(v)));
    if (cover > best) {
      best = cover;
      pivot = static_cast<std::uint32_t>(v);
    }
  }
  auto adj = s.row(pivot);
  for (std::size_t w = 0; w < cand.size(); ++w) pruned[w] = cand[w] & ~adj[w];
  return pivot;
}

std::pair<std::uint32_t, BitRow> find_pivot(const BitGraph& s, const BitRow& cand) {
  if (!bits::any(cand.words)) throw std::invalid_argument("find_pivot: empty candidate set");
  BitRow pruned;
  pruned.words.resize(cand.words.size());
  std::uint32_t p = find_pivot(s, cand.words, pruned.words);
  return {p, std::move(pruned)};
}

PivotStack::PivotStack(std::uint32_t max_frames, std::size_t words_per_row)
    : max_frames_(max_frames),
      stride_(words_per_row),
      cand_(static_cast<std::size_t>(max_frames) * words_per_row, 0),
      pruned_(cand_.size(), 0),
      meta_(max_frames) {}

// Iterative pivot traversal. `t` is the clique size used by the cut-off
// (ignored when `cut` is false); `leaf(level, pivots)` fires at every
// maximal path.
template <typename Sink>
void traverse_pivot(const BitGraph& s, std::uint32_t t, bool cut, NodeCounter& stats, PivotStack& stack,
                    Sink&& leaf) {
  const std::uint32_t n = s.local_count();
  const std::size_t wpr = s.words_per_row();
  if (n + 1 > stack.max_frames_ || wpr > stack.stride_)
    throw std::length_error("pivot stack too small for sub-graph");

  auto cand = [&](std::uint32_t d) { return std::span<Word>(stack.cand_).subspan(d * stack.stride_, wpr); };
  auto pruned = [&](std::uint32_t d) { return std::span<Word>(stack.pruned_).subspan(d * stack.stride_, wpr); };
  auto& meta = stack.meta_;

  bits::fill_prefix(cand(0), n);
  meta[0] = {find_pivot(s, cand(0), pruned(0)), 0, 0};
  std::uint32_t depth = 0;  // frame index; level = depth + 1
  while (true) {
    auto& f = meta[depth];
    std::size_t v = bits::next_set(pruned(depth), f.cursor);
    if (v == bits::npos) {
      if (depth == 0) break;
      --depth;
      continue;
    }
    f.cursor = v + 1;
    const std::uint32_t pivots = f.pivots + (v == f.pivot ? 1 : 0);
    const std::uint32_t level = depth + 1;
    // More than t non-pivot vertices on the path: no t-clique left below.
    if (cut && level > pivots + t) continue;
    ++stats.visited;

    // I' = (I & Adj(v)) minus the pruned vertices ordered before v.
    auto cur = cand(depth);
    auto held = pruned(depth);
    auto adj = s.row(static_cast<std::uint32_t>(v));
    auto next = cand(depth + 1);
    const std::size_t vw = v / kWordBits;
    bool nonempty = false;
    for (std::size_t w = 0; w < wpr; ++w) {
      Word before = w < vw ? held[w] : (w == vw ? held[w] & ((Word{1} << (v % kWordBits)) - 1) : 0);
      next[w] = cur[w] & adj[w] & ~before;
      nonempty |= next[w] != 0;
    }
    if (nonempty) {
      ++depth;
      meta[depth] = {find_pivot(s, next, pruned(depth)), pivots, 0};
    } else {
      leaf(level, pivots);
    }
  }
}

CliqueCount count_tcliques_pivot(const BitGraph& s, std::uint32_t t, NodeCounter& stats, PivotStack& stack,
                                 const BinomialTable& binom) {
  const std::uint32_t n = s.local_count();
  if (t == 0) return CliqueCount(1);
  if (t == 1) return CliqueCount(n);
  if (n == 0) return CliqueCount(0);
  CliqueCount total;
  traverse_pivot(s, t, true, stats, stack, [&](std::uint32_t level, std::uint32_t pivots) {
    if (level >= t) total += binom(pivots, level - t);
  });
  return total;
}

CliqueCount count_tcliques_pivot(const BitGraph& s, std::uint32_t t, NodeCounter& stats) {
  PivotStack stack(pivot_stack_frames(s.local_count()), s.words_per_row());
  BinomialTable binom(s.local_count() + 1);
  return count_tcliques_pivot(s, t, stats, stack, binom);
}

std::vector<CliqueCount> count_all_tcliques_pivot(const BitGraph& s, NodeCounter& stats, PivotStack& stack,
                                                  const BinomialTable& binom) {
  const std::uint32_t n = s.local_count();
  std::vector<CliqueCount> counts(n + 1);
  if (n == 0) {
    counts[0] = CliqueCount(1);
    return counts;
  }
  traverse_pivot(s, 0, false, stats, stack, [&](std::uint32_t level, std::uint32_t pivots) {
    for (std::uint32_t t = level - pivots; t <= level; ++t) counts[t] += binom(pivots, level - t);
  });
  return counts;
}

}  // namespace kclique
