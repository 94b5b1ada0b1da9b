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

// Test-only graph generators and reference implementations. Nothing here
// calls into the engines it is used to check.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "clique_count.hpp"
#include "graph.hpp"
#include "induced.hpp"
#include "orientation.hpp"

namespace kclique::testing {

using Pairs = std::vector<std::pair<RawId, RawId>>;

inline Graph graph_of(const Pairs& edges) { return Graph::from_edges(normalize_edges(edges)); }

inline Pairs gnp_pairs(std::uint32_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Pairs out;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (coin(rng)) out.emplace_back(u, v);
  return out;
}

inline Graph gnp(std::uint32_t n, double p, std::mt19937_64& rng) { return graph_of(gnp_pairs(n, p, rng)); }

inline Pairs complete_pairs(std::uint32_t n) {
  Pairs out;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

// Self-loops are dropped by the loader but keep their vertex, so K_1 exists.
inline Graph complete(std::uint32_t n) {
  Pairs edges = complete_pairs(n);
  for (std::uint32_t v = 0; v < n; ++v) edges.emplace_back(v, v);
  return graph_of(edges);
}

inline Ranking identity_rank(const Graph& g) {
  Ranking r;
  r.rank.resize(g.num_vertices());
  std::iota(r.rank.begin(), r.rank.end(), 0);
  return r;
}

/// Adds a hub vertex 0 adjacent to every vertex of `inner` (shifted by one)
/// and orients by id, so the hub's induced sub-graph is `inner` with locals
/// in the same order.
inline OrientedGraph hub_over(const Pairs& inner, std::uint32_t n) {
  Pairs all;
  for (std::uint32_t v = 0; v < n; ++v) all.emplace_back(0, v + 1);
  for (auto [u, v] : inner) all.emplace_back(u + 1, v + 1);
  Graph g = graph_of(all);
  return orient(g, identity_rank(g));
}

/// Bit matrix of an induced sub-graph computed by direct membership tests on
/// the oriented adjacency, row by row, one bit at a time.
inline std::vector<std::vector<bool>> naive_matrix(const OrientedGraph& og, const std::vector<VertexId>& locals,
                                                   bool directed) {
  const std::size_t L = locals.size();
  std::vector<std::vector<bool>> m(L, std::vector<bool>(L, false));
  auto has = [&](VertexId a, VertexId b) {
    for (VertexId w : og.out_neighbors(a))
      if (w == b) return true;
    return false;
  };
  for (std::size_t i = 0; i < L; ++i)
    for (std::size_t j = 0; j < L; ++j) {
      if (i == j) continue;
      bool e = has(locals[i], locals[j]);
      if (!directed) e = e || has(locals[j], locals[i]);
      m[i][j] = e;
    }
  return m;
}

inline std::vector<std::vector<bool>> matrix_of(const BitGraph& s) {
  const std::uint32_t L = s.local_count();
  std::vector<std::vector<bool>> m(L, std::vector<bool>(L, false));
  for (std::uint32_t i = 0; i < L; ++i)
    for (std::uint32_t j = 0; j < L; ++j) m[i][j] = bits::test(s.row(i), j);
  return m;
}

/// t-subsets of the locals that are cliques, treating any bit as an edge.
inline std::uint64_t brute_force_subgraph(const BitGraph& s, std::uint32_t t) {
  const std::uint32_t L = s.local_count();
  auto adj = [&](std::uint32_t a, std::uint32_t b) { return bits::test(s.row(a), b) || bits::test(s.row(b), a); };
  std::uint64_t count = 0;
  std::vector<std::uint32_t> pick;
  auto rec = [&](auto&& self, std::uint32_t from) -> void {
    if (pick.size() == t) {
      ++count;
      return;
    }
    for (std::uint32_t v = from; v < L; ++v) {
      bool ok = true;
      for (std::uint32_t u : pick) ok = ok && adj(u, v);
      if (!ok) continue;
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

/// Recursive form of the orientation traversal on a directed BitGraph, with
/// a node counter that increments per branched vertex.
inline void recursive_orient(const BitGraph& s, std::uint32_t t, std::uint32_t level, const std::vector<bool>& cand,
                             std::uint64_t& count, std::uint64_t& nodes) {
  const std::uint32_t L = s.local_count();
  for (std::uint32_t v = 0; v < L; ++v) {
    if (!cand[v]) continue;
    ++nodes;
    std::vector<bool> next(L, false);
    std::uint32_t size = 0;
    for (std::uint32_t u = 0; u < L; ++u)
      if (cand[u] && bits::test(s.row(v), u)) {
        next[u] = true;
        ++size;
      }
    if (level + 1 == t)
      count += size;
    else if (size > 0)
      recursive_orient(s, t, level + 1, next, count, nodes);
  }
}

/// Pascal-free binomial via the multiplicative formula in 128-bit.
inline u128 binomial_multiplicative(std::uint32_t n, std::uint32_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  u128 acc = 1;
  for (std::uint32_t i = 1; i <= r; ++i) acc = acc * (n - r + i) / i;  // exact at every step
  return acc;
}

/// O(n^2) peeling: scan for the minimum residual degree each round, lowest id
/// first. Returns (rank, degeneracy).
inline std::pair<std::vector<std::uint32_t>, std::uint32_t> naive_peeling(const Graph& g) {
  const std::uint32_t n = g.num_vertices();
  std::vector<std::uint32_t> deg(n), rank(n);
  std::vector<bool> gone(n, false);
  for (VertexId v = 0; v < n; ++v) deg[v] = g.degree(v);
  std::uint32_t degeneracy = 0;
  for (std::uint32_t step = 0; step < n; ++step) {
    VertexId best = n;
    for (VertexId v = 0; v < n; ++v)
      if (!gone[v] && (best == n || deg[v] < deg[best])) best = v;
    gone[best] = true;
    rank[best] = step;
    degeneracy = std::max(degeneracy, deg[best]);
    for (VertexId w : g.neighbors(best))
      if (!gone[w]) --deg[w];
  }
  return {rank, degeneracy};
}

/// k-subsets of g that are cliques, grown depth first over an adjacency
/// matrix so dense graphs up to a few dozen vertices stay cheap.
inline std::uint64_t brute_force_graph(const Graph& g, std::uint32_t k) {
  const std::uint32_t n = g.num_vertices();
  if (k == 0) return 1;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w : g.neighbors(v)) adj[v][w] = true;
  std::uint64_t count = 0;
  std::vector<std::uint32_t> pick;
  auto rec = [&](auto&& self, std::uint32_t from) -> void {
    if (pick.size() == k) {
      ++count;
      return;
    }
    for (std::uint32_t v = from; v < n; ++v) {
      bool ok = true;
      for (std::uint32_t u : pick) ok = ok && adj[u][v];
      if (!ok) continue;
      pick.push_back(v);
      self(self, v + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

inline u128 choose(std::uint32_t n, std::uint32_t r) { return binomial_multiplicative(n, r); }

}  // namespace kclique::testing
