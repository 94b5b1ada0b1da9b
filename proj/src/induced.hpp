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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "orientation.hpp"

namespace kclique {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// Word-level kernels over bit rows. Bit i lives in word i / 64 at position
// i % 64, least significant first. All spans in one call have equal length.
namespace bits {

inline void set(std::span<Word> row, std::size_t i) { row[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline bool test(std::span<const Word> row, std::size_t i) {
  return (row[i / kWordBits] >> (i % kWordBits)) & 1U;
}

inline void and_into(std::span<Word> out, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t w = 0; w < out.size(); ++w) out[w] = a[w] & b[w];
}

inline std::uint32_t popcount(std::span<const Word> a) {
  std::uint32_t c = 0;
  for (Word w : a) c += static_cast<std::uint32_t>(std::popcount(w));
  return c;
}

inline std::uint32_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  std::uint32_t c = 0;
  for (std::size_t w = 0; w < a.size(); ++w) c += static_cast<std::uint32_t>(std::popcount(a[w] & b[w]));
  return c;
}

inline bool any(std::span<const Word> a) {
  for (Word w : a)
    if (w) return true;
  return false;
}

/// Index of the first set bit at or after `from`, or npos.
inline constexpr std::size_t npos = static_cast<std::size_t>(-1);
inline std::size_t next_set(std::span<const Word> a, std::size_t from) {
  std::size_t w = from / kWordBits;
  if (w >= a.size()) return npos;
  Word cur = a[w] & (~Word{0} << (from % kWordBits));
  while (true) {
    if (cur) return w * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
    if (++w == a.size()) return npos;
    cur = a[w];
  }
}

/// Sets bits [0, count) and clears the rest, padding included.
inline void fill_prefix(std::span<Word> row, std::size_t count) {
  for (std::size_t w = 0; w < row.size(); ++w) {
    std::size_t lo = w * kWordBits;
    if (count >= lo + kWordBits)
      row[w] = ~Word{0};
    else if (count > lo)
      row[w] = (Word{1} << (count - lo)) - 1;
    else
      row[w] = 0;
  }
}

}  // namespace bits

/// Owning bit vector used at API boundaries and in tests; the engines work on
/// spans into pre-allocated scratch instead.
struct BitRow {
  std::vector<Word> words;

  BitRow() = default;
  explicit BitRow(std::size_t bit_count) : words(words_for(bit_count), 0) {}

  void set(std::size_t i) { bits::set(words, i); }
  bool test(std::size_t i) const { return bits::test(words, i); }
  friend bool operator==(const BitRow&, const BitRow&) = default;
};

BitRow row_and(const BitRow& a, const BitRow& b);
std::uint32_t popcount(const BitRow& a);

/// Binary-encoded induced sub-graph over local indices 0..local_count-1.
/// Storage is sized once for `capacity` locals and reused across extractions;
/// only the first local_count rows are meaningful.
class BitGraph {
 public:
  explicit BitGraph(std::uint32_t capacity = 0);

  std::uint32_t capacity() const { return capacity_; }
  std::uint32_t local_count() const { return local_count_; }
  std::size_t words_per_row() const { return words_per_row_; }
  bool directed() const { return directed_; }

  std::span<const Word> row(std::uint32_t i) const {
    return std::span<const Word>(storage_).subspan(i * words_per_row_, words_per_row_);
  }
  std::span<const VertexId> local_to_global() const {
    return std::span<const VertexId>(locals_).first(local_count_);
  }

  /// Words held by the adjacency matrix buffer (capacity x words_for(capacity)).
  std::size_t allocated_words() const { return storage_.size(); }
  std::size_t allocated_bytes() const {
    return storage_.size() * sizeof(Word) + locals_.size() * sizeof(VertexId);
  }

  friend BitGraph& extract_vertex_induced(const OrientedGraph&, VertexId, bool, BitGraph&);
  friend BitGraph& extract_edge_induced(const OrientedGraph&, EdgeIndex, bool, BitGraph&);

 private:
  std::span<Word> mutable_row(std::uint32_t i) {
    return std::span<Word>(storage_).subspan(i * words_per_row_, words_per_row_);
  }
  void fill_rows(const OrientedGraph& og);

  std::uint32_t capacity_ = 0;
  std::uint32_t local_count_ = 0;
  std::size_t words_per_row_ = 0;
  bool directed_ = true;
  std::vector<Word> storage_;
  std::vector<VertexId> locals_;
};

/// Locals are the out-neighbors of v. Directed rows hold oriented edges,
/// undirected rows hold both directions.
BitGraph& extract_vertex_induced(const OrientedGraph& og, VertexId v, bool directed, BitGraph& out);

/// Locals are the common out-neighbors of the oriented edge coo_src[e] -> coo_dst[e].
BitGraph& extract_edge_induced(const OrientedGraph& og, EdgeIndex e, bool directed, BitGraph& out);

}  // namespace kclique
