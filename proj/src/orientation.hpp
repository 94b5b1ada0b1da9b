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
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace kclique {

enum class Criterion { kDegree, kDegeneracy };

std::string_view to_string(Criterion c);

/// Total vertex order. rank[v] is the position of v; a permutation of 0..n-1.
struct Ranking {
  std::vector<std::uint32_t> rank;
  Criterion criterion = Criterion::kDegree;
  // Largest residual degree seen while peeling; only set for kDegeneracy.
  std::uint32_t degeneracy = 0;
};

/// Degree: ascending degree, ties by id. Degeneracy: k-core peeling order,
/// always removing a minimum residual degree vertex with the lowest id.
Ranking compute_rank(const Graph& g, Criterion criterion);

/// DAG obtained by keeping u->v iff rank[u] < rank[v]. Out-adjacency segments
/// stay ascending by compact id.
class OrientedGraph {
 public:
  VertexId num_vertices() const { return n_; }
  std::uint64_t num_edges() const { return col_.size(); }
  std::uint32_t max_out_degree() const { return d_max_; }
  const Ranking& ranking() const { return ranking_; }

  std::span<const EdgeIndex> row_ptr() const { return row_ptr_; }
  std::span<const VertexId> col() const { return col_; }
  std::span<const VertexId> coo_src() const { return coo_src_; }
  std::span<const VertexId> coo_dst() const { return coo_dst_; }

  std::span<const VertexId> out_neighbors(VertexId v) const {
    return std::span<const VertexId>(col_).subspan(row_ptr_[v], row_ptr_[v + 1] - row_ptr_[v]);
  }
  std::uint32_t out_degree(VertexId v) const {
    return static_cast<std::uint32_t>(row_ptr_[v + 1] - row_ptr_[v]);
  }

  friend OrientedGraph orient(const Graph& g, const Ranking& r);

 private:
  VertexId n_ = 0;
  std::uint32_t d_max_ = 0;
  Ranking ranking_;
  std::vector<EdgeIndex> row_ptr_{0};
  std::vector<VertexId> col_;
  std::vector<VertexId> coo_src_;
  std::vector<VertexId> coo_dst_;
};

OrientedGraph orient(const Graph& g, const Ranking& r);

}  // namespace kclique
