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
#include <vector>

#include "clique_count.hpp"
#include "config.hpp"
#include "graph.hpp"
#include "orientation.hpp"

namespace kclique {

struct Task {
  enum class Kind { kVertex, kEdge };
  Kind kind;
  std::uint64_t id;  // vertex id or oriented COO edge index
};

/// Ascending task sequence. Vertex tasks cover vertices with out-degree > 0,
/// edge tasks cover every oriented edge.
class TaskList {
 public:
  TaskList(const OrientedGraph& og, Scheme scheme);

  std::uint64_t size() const { return scheme_ == Scheme::kVertex ? vertices_.size() : edge_count_; }
  Task operator[](std::uint64_t i) const {
    if (scheme_ == Scheme::kVertex) return {Task::Kind::kVertex, vertices_[i]};
    return {Task::Kind::kEdge, i};
  }

 private:
  Scheme scheme_;
  std::vector<VertexId> vertices_;
  std::uint64_t edge_count_ = 0;
};

TaskList make_tasks(const OrientedGraph& og, Scheme scheme);

/// Per-worker visited-node summary. normalized_max is max / mean, and 1.0
/// when nothing was visited.
struct LoadStats {
  std::vector<std::uint64_t> per_worker;
  std::uint64_t total = 0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  double mean = 0.0;
  double normalized_max = 1.0;

  std::vector<double> normalized() const;
};

LoadStats load_stats(std::span<const std::uint64_t> counters);

struct CountReport {
  RunConfig config;
  CliqueCount count;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint32_t d_max_undirected = 0;
  std::uint32_t d_max_oriented = 0;
  std::uint64_t tasks = 0;
  double orient_ms = 0.0;
  double count_ms = 0.0;
  LoadStats load;
  // Bytes of per-worker scratch (bit matrices, local maps, stacks).
  std::uint64_t scratch_bytes = 0;
  // With all_k: element s is the number of s-cliques, up to the largest clique.
  std::vector<CliqueCount> all_k;
};

/// Orients g, distributes tasks over cfg.workers threads pulling from one
/// atomic cursor and sums the per-worker partial counts.
CountReport run_count(const Graph& g, const RunConfig& cfg);

}  // namespace kclique
