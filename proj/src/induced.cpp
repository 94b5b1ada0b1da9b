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

#include "induced.hpp"

#include <algorithm>
#include <stdexcept>

namespace kclique {

BitRow row_and(const BitRow& a, const BitRow& b) {
  if (a.words.size() != b.words.size()) throw std::invalid_argument("row_and: row widths differ");
  BitRow out;
  out.words.resize(a.words.size());
  bits::and_into(out.words, a.words, b.words);
  return out;
}

std::uint32_t popcount(const BitRow& a) { return bits::popcount(a.words); }

BitGraph::BitGraph(std::uint32_t capacity)
    : capacity_(capacity),
      storage_(static_cast<std::size_t>(capacity) * words_for(capacity), 0),
      locals_(capacity, 0) {}

void BitGraph::fill_rows(const OrientedGraph& og) {
  words_per_row_ = words_for(local_count_);
  for (std::uint32_t i = 0; i < local_count_; ++i) std::fill_n(mutable_row(i).begin(), words_per_row_, Word{0});

  const auto locals = std::span<const VertexId>(locals_).first(local_count_);
  auto mark = [&](std::uint32_t i, std::uint32_t j) {
    bits::set(mutable_row(i), j);
    if (!directed_) bits::set(mutable_row(j), i);
  };
  // Two locals are joined by exactly one oriented edge or none, so one
  // directed lookup per pair covers the undirected case too. Search from
  // whichever side is shorter.
  for (std::uint32_t i = 0; i < local_count_; ++i) {
    auto adj = og.out_neighbors(locals[i]);
    if (adj.size() <= locals.size()) {
      for (VertexId w : adj) {
        auto it = std::lower_bound(locals.begin(), locals.end(), w);
        if (it != locals.end() && *it == w) mark(i, static_cast<std::uint32_t>(it - locals.begin()));
      }
    } else {
      for (std::uint32_t j = 0; j < local_count_; ++j)
        if (j != i && std::binary_search(adj.begin(), adj.end(), locals[j])) mark(i, j);
    }
  }
}

BitGraph& extract_vertex_induced(const OrientedGraph& og, VertexId v, bool directed, BitGraph& out) {
  auto adj = og.out_neighbors(v);
  if (adj.size() > out.capacity_) throw std::length_error("induced sub-graph exceeds scratch capacity");
  out.directed_ = directed;
  out.local_count_ = static_cast<std::uint32_t>(adj.size());
  std::copy(adj.begin(), adj.end(), out.locals_.begin());
  out.fill_rows(og);
  return out;
}

BitGraph& extract_edge_induced(const OrientedGraph& og, EdgeIndex e, bool directed, BitGraph& out) {
  auto a = og.out_neighbors(og.coo_src()[e]);
  auto b = og.out_neighbors(og.coo_dst()[e]);
  if (std::min(a.size(), b.size()) > out.capacity_)
    throw std::length_error("induced sub-graph exceeds scratch capacity");
  out.directed_ = directed;
  auto end = std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), out.locals_.begin());
  out.local_count_ = static_cast<std::uint32_t>(end - out.locals_.begin());
  out.fill_rows(og);
  return out;
}

}  // namespace kclique
