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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kclique {

using VertexId = std::uint32_t;
using EdgeIndex = std::uint64_t;
using RawId = std::uint64_t;

/// Edge list as read from a SNAP-style text file. After load_edge_list the
/// edges are normalized: u < v, sorted, unique, no self-loops.
struct EdgeList {
  std::vector<std::pair<RawId, RawId>> edges;
  // Ids that only occurred on dropped self-loop lines.
  std::vector<RawId> isolated;
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicates_dropped = 0;
};

/// Parses a SNAP edge list. '#' lines are comments, blank lines are skipped,
/// every other line must hold exactly two non-negative integers. Throws
/// ParseError carrying the 1-based line number.
EdgeList load_edge_list(std::string_view text);

/// Drops self-loops and duplicate pairs (either orientation) and sorts.
EdgeList normalize_edges(std::vector<std::pair<RawId, RawId>> raw);

/// Reads a whole file and parses it with load_edge_list. Throws IoError.
EdgeList load_edge_list_file(const std::string& path);

/// Immutable simple undirected graph in hybrid CSR + COO form. Each undirected
/// edge appears twice in col/coo arrays, once per direction.
class Graph {
 public:
  Graph();

  static Graph from_edges(const EdgeList& edges);

  VertexId num_vertices() const { return n_; }
  std::uint64_t num_edges() const { return col_.size() / 2; }

  std::span<const EdgeIndex> row_ptr() const { return row_ptr_; }
  std::span<const VertexId> col() const { return col_; }
  std::span<const VertexId> coo_src() const { return coo_src_; }
  std::span<const VertexId> coo_dst() const { return coo_dst_; }
  /// Compact id -> original id, ascending.
  std::span<const RawId> id_map() const { return id_map_; }

  std::span<const VertexId> neighbors(VertexId v) const {
    return std::span<const VertexId>(col_).subspan(row_ptr_[v], row_ptr_[v + 1] - row_ptr_[v]);
  }
  std::uint32_t degree(VertexId v) const {
    return static_cast<std::uint32_t>(row_ptr_[v + 1] - row_ptr_[v]);
  }
  std::uint32_t max_degree() const;
  bool has_edge(VertexId u, VertexId v) const;

 private:
  VertexId n_ = 0;
  std::vector<EdgeIndex> row_ptr_;
  std::vector<VertexId> col_;
  std::vector<VertexId> coo_src_;
  std::vector<VertexId> coo_dst_;
  std::vector<RawId> id_map_;
};

}  // namespace kclique
