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

#include "oracle.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"

namespace kclique::oracle {

CliqueCount brute_force_count(const Graph& g, std::uint32_t k, OracleLimit limit) {
  const std::uint32_t n = g.num_vertices();
  if (n > limit.max_n)
    throw LimitError("brute-force oracle limited to " + std::to_string(limit.max_n) + " vertices, got " +
                     std::to_string(n));
  if (k == 0) return CliqueCount(1);
  if (k > n) return CliqueCount(0);

  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::uint64_t e = 0; e < g.col().size(); ++e) adj[g.coo_src()[e]][g.coo_dst()[e]] = true;

  // Lexicographic walk over all k-combinations of 0..n-1.
  std::vector<std::uint32_t> pick(k);
  for (std::uint32_t i = 0; i < k; ++i) pick[i] = i;
  CliqueCount count;
  while (true) {
    bool clique = true;
    for (std::uint32_t a = 0; a < k && clique; ++a)
      for (std::uint32_t b = a + 1; b < k && clique; ++b) clique = adj[pick[a]][pick[b]];
    if (clique) count += 1;

    int i = static_cast<int>(k) - 1;
    while (i >= 0 && pick[i] == n - k + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return count;
}

namespace {

using Lists = std::vector<std::vector<VertexId>>;

std::vector<std::uint64_t> order_keys(const Graph& g, Criterion criterion) {
  const std::uint32_t n = g.num_vertices();
  std::vector<std::uint64_t> pos(n);
  if (criterion == Criterion::kDegree) {
    // (degree, id) packed into one key.
    for (VertexId v = 0; v < n; ++v) pos[v] = (static_cast<std::uint64_t>(g.degree(v)) << 32) | v;
    return pos;
  }
  std::vector<std::uint32_t> deg(n);
  std::set<std::pair<std::uint32_t, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<bool> gone(n, false);
  for (std::uint64_t step = 0; !queue.empty(); ++step) {
    auto [d, v] = *queue.begin();
    queue.erase(queue.begin());
    gone[v] = true;
    pos[v] = step;
    for (VertexId w : g.neighbors(v)) {
      if (gone[w]) continue;
      queue.erase({deg[w], w});
      queue.emplace(--deg[w], w);
    }
  }
  return pos;
}

CliqueCount traverse(const Lists& out, std::uint32_t k, std::uint32_t level, const std::vector<VertexId>& cand) {
  CliqueCount count;
  std::vector<VertexId> next;
  for (VertexId v : cand) {
    next.clear();
    std::set_intersection(cand.begin(), cand.end(), out[v].begin(), out[v].end(), std::back_inserter(next));
    if (level + 1 == k)
      count += next.size();
    else if (!next.empty())
      count += traverse(out, k, level + 1, next);
  }
  return count;
}

}  // namespace

CliqueCount naive_recursive_count(const Graph& g, std::uint32_t k, Criterion criterion) {
  const std::uint32_t n = g.num_vertices();
  if (k == 0) return CliqueCount(1);
  if (k == 1) return CliqueCount(n);

  const auto key = order_keys(g, criterion);
  Lists out(n);
  for (VertexId v = 0; v < n; ++v)
    for (VertexId w : g.neighbors(v))
      if (key[v] < key[w]) out[v].push_back(w);

  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  return traverse(out, k, 1, all);
}

}  // namespace kclique::oracle
