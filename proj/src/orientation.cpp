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

#include "orientation.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <utility>

namespace kclique {

std::string_view to_string(Criterion c) {
  return c == Criterion::kDegree ? "degree" : "degeneracy";
}

namespace {

Ranking degree_rank(const Graph& g) {
  const VertexId n = g.num_vertices();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return g.degree(a) < g.degree(b); });
  Ranking r;
  r.criterion = Criterion::kDegree;
  r.rank.resize(n);
  for (VertexId pos = 0; pos < n; ++pos) r.rank[order[pos]] = pos;
  return r;
}

// Min-heap keyed on (residual degree, id) with lazy deletion. Stale entries
// are skipped when popped, which keeps the lowest-id tie-break exact.
Ranking degeneracy_rank(const Graph& g) {
  const VertexId n = g.num_vertices();
  std::vector<std::uint32_t> residual(n);
  std::vector<bool> removed(n, false);
  using Entry = std::pair<std::uint32_t, VertexId>;
  std::vector<Entry> init;
  init.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    residual[v] = g.degree(v);
    init.emplace_back(residual[v], v);
  }
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap(std::greater<>{}, std::move(init));

  Ranking r;
  r.criterion = Criterion::kDegeneracy;
  r.rank.resize(n);
  std::uint32_t position = 0;
  while (!heap.empty()) {
    auto [deg, v] = heap.top();
    heap.pop();
    if (removed[v] || deg != residual[v]) continue;
    removed[v] = true;
    r.rank[v] = position++;
    r.degeneracy = std::max(r.degeneracy, deg);
    for (VertexId w : g.neighbors(v)) {
      if (removed[w]) continue;
      heap.emplace(--residual[w], w);
    }
  }
  return r;
}

}  // namespace

Ranking compute_rank(const Graph& g, Criterion criterion) {
  return criterion == Criterion::kDegree ? degree_rank(g) : degeneracy_rank(g);
}

OrientedGraph orient(const Graph& g, const Ranking& r) {
  const VertexId n = g.num_vertices();
  if (r.rank.size() != n) throw std::invalid_argument("ranking size does not match graph");

  OrientedGraph og;
  og.n_ = n;
  og.ranking_ = r;
  og.row_ptr_.assign(static_cast<std::size_t>(n) + 1, 0);

  // Filter, then recompute row pointers with a histogram + exclusive scan.
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w : g.neighbors(v))
      if (r.rank[v] < r.rank[w]) ++og.row_ptr_[v + 1];
  for (VertexId v = 0; v < n; ++v) {
    og.d_max_ = std::max(og.d_max_, static_cast<std::uint32_t>(og.row_ptr_[v + 1]));
    og.row_ptr_[v + 1] += og.row_ptr_[v];
  }

  const std::size_t m = og.row_ptr_[n];
  og.col_.resize(m);
  og.coo_src_.resize(m);
  og.coo_dst_.resize(m);
  std::size_t e = 0;
  for (VertexId v = 0; v < n; ++v) {
    for (VertexId w : g.neighbors(v)) {
      if (r.rank[v] >= r.rank[w]) continue;
      og.col_[e] = w;
      og.coo_src_[e] = v;
      og.coo_dst_[e] = w;
      ++e;
    }
  }
  return og;
}

}  // namespace kclique
