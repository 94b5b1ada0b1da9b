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

#include "scheduler.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <numeric>
#include <optional>
#include <thread>

#include "engine_orient.hpp"
#include "engine_pivot.hpp"
#include "induced.hpp"

namespace kclique {

TaskList::TaskList(const OrientedGraph& og, Scheme scheme) : scheme_(scheme) {
  if (scheme == Scheme::kEdge) {
    edge_count_ = og.num_edges();
    return;
  }
  for (VertexId v = 0; v < og.num_vertices(); ++v)
    if (og.out_degree(v) > 0) vertices_.push_back(v);
}

TaskList make_tasks(const OrientedGraph& og, Scheme scheme) { return TaskList(og, scheme); }

std::vector<double> LoadStats::normalized() const {
  std::vector<double> out;
  out.reserve(per_worker.size());
  for (std::uint64_t c : per_worker) out.push_back(mean > 0 ? static_cast<double>(c) / mean : 1.0);
  return out;
}

LoadStats load_stats(std::span<const std::uint64_t> counters) {
  LoadStats s;
  s.per_worker.assign(counters.begin(), counters.end());
  if (counters.empty()) return s;
  s.total = std::accumulate(counters.begin(), counters.end(), std::uint64_t{0});
  auto [lo, hi] = std::minmax_element(counters.begin(), counters.end());
  s.min = *lo;
  s.max = *hi;
  s.mean = static_cast<double>(s.total) / static_cast<double>(counters.size());
  s.normalized_max = s.mean > 0 ? static_cast<double>(s.max) / s.mean : 1.0;
  return s;
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Worker-private state, sized once from d_max before any task runs.
struct WorkerScratch {
  BitGraph sub;
  std::optional<OrientStack> orient_stack;
  std::optional<PivotStack> pivot_stack;
  NodeCounter nodes;
  CliqueCount partial;
  std::vector<CliqueCount> partial_all;

  WorkerScratch(const RunConfig& cfg, std::uint32_t d_max, std::uint32_t t) : sub(d_max) {
    const std::size_t wpr = words_for(d_max);
    if (cfg.algorithm == Algorithm::kOrientation)
      orient_stack.emplace(orient_stack_levels(t, d_max), wpr);
    else
      pivot_stack.emplace(pivot_stack_frames(d_max), wpr);
    if (cfg.all_k) partial_all.resize(static_cast<std::size_t>(d_max) + 3);
  }

  std::uint64_t bytes() const {
    std::uint64_t b = sub.allocated_bytes();
    if (orient_stack) b += orient_stack->allocated_words() * sizeof(Word);
    if (pivot_stack) b += pivot_stack->allocated_words() * sizeof(Word);
    return b;
  }
};

}  // namespace

CountReport run_count(const Graph& g, const RunConfig& cfg) {
  validate(cfg);
  CountReport report;
  report.config = cfg;
  report.n = g.num_vertices();
  report.m = g.num_edges();
  report.d_max_undirected = g.max_degree();

  auto t0 = Clock::now();
  const OrientedGraph og = orient(g, compute_rank(g, cfg.criterion));
  report.orient_ms = ms_since(t0);
  report.d_max_oriented = og.max_out_degree();
  const std::uint32_t d_max = og.max_out_degree();

  t0 = Clock::now();
  const bool closed_form = !cfg.all_k && cfg.k <= 2;
  if (closed_form) {
    report.count = CliqueCount(cfg.k == 1 ? report.n : report.m);
    report.load = load_stats(std::vector<std::uint64_t>(cfg.workers, 0));
    report.count_ms = ms_since(t0);
    return report;
  }

  const TaskList tasks = make_tasks(og, cfg.scheme);
  report.tasks = tasks.size();
  // Clique vertices already fixed by the task root.
  const std::uint32_t root_size = cfg.scheme == Scheme::kVertex ? 1 : 2;
  const std::uint32_t t = cfg.k >= root_size ? cfg.k - root_size : 0;
  const bool directed = cfg.algorithm == Algorithm::kOrientation;
  const BinomialTable binom(cfg.algorithm == Algorithm::kPivot ? d_max + 2 : 0);

  std::vector<WorkerScratch> scratch;
  scratch.reserve(cfg.workers);
  for (std::uint32_t w = 0; w < cfg.workers; ++w) scratch.emplace_back(cfg, d_max, t);

  std::atomic<std::uint64_t> cursor{0};
  std::atomic<bool> abort{false};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto work = [&](WorkerScratch& ws) {
    try {
      while (!abort.load(std::memory_order_relaxed)) {
        const std::uint64_t i = cursor.fetch_add(1, std::memory_order_relaxed);
        if (i >= tasks.size()) break;
        const Task task = tasks[i];
        ++ws.nodes.visited;  // the task root
        if (task.kind == Task::Kind::kVertex)
          extract_vertex_induced(og, static_cast<VertexId>(task.id), directed, ws.sub);
        else
          extract_edge_induced(og, task.id, directed, ws.sub);

        if (cfg.all_k) {
          auto counts = count_all_tcliques_pivot(ws.sub, ws.nodes, *ws.pivot_stack, binom);
          for (std::size_t s = 1; s < counts.size(); ++s) ws.partial_all[s + root_size] += counts[s];
          continue;
        }
        if (ws.sub.local_count() < t) continue;
        if (directed)
          ws.partial += count_tcliques_orient(ws.sub, t, ws.nodes, *ws.orient_stack);
        else
          ws.partial += count_tcliques_pivot(ws.sub, t, ws.nodes, *ws.pivot_stack, binom);
      }
    } catch (...) {
      std::lock_guard lock(failure_mu);
      if (!failure) failure = std::current_exception();
      abort = true;
    }
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(cfg.workers);
    for (auto& ws : scratch) pool.emplace_back(work, std::ref(ws));
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<std::uint64_t> visited;
  for (const auto& ws : scratch) {
    visited.push_back(ws.nodes.visited);
    report.scratch_bytes += ws.bytes();
    report.count += ws.partial;
  }
  report.load = load_stats(visited);

  if (cfg.all_k) {
    std::vector<CliqueCount> all(static_cast<std::size_t>(d_max) + 3);
    all[0] = CliqueCount(1);
    all[1] = CliqueCount(report.n);
    if (all.size() > 2) all[2] = CliqueCount(report.m);
    for (const auto& ws : scratch)
      for (std::size_t s = 3; s < all.size(); ++s) all[s] += ws.partial_all[s];
    while (all.size() > 1 && all.back() == CliqueCount(0)) all.pop_back();
    report.count = cfg.k < all.size() ? all[cfg.k] : CliqueCount(0);
    report.all_k = std::move(all);
  }
  report.count_ms = ms_since(t0);
  return report;
}

}  // namespace kclique
