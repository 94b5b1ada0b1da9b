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

#include "kclique/kclique.h"

#include <chrono>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "config.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "orientation.hpp"
#include "scheduler.hpp"

struct kc_graph {
  kclique::Graph graph;
  std::uint64_t self_loops_dropped = 0;
  std::uint64_t duplicates_dropped = 0;
  double load_ms = 0.0;
};

struct kc_report {
  kclique::CountReport report;
};

namespace {

thread_local std::string g_last_error;

kc_status fail(kc_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Maps the core's exceptions onto status codes.
template <typename F>
kc_status guarded(F&& body) {
  try {
    return body();
  } catch (const kclique::ParseError& e) {
    return fail(KC_ERR_PARSE, e.what());
  } catch (const kclique::IoError& e) {
    return fail(KC_ERR_IO, e.what());
  } catch (const kclique::OverflowError& e) {
    return fail(KC_ERR_OVERFLOW, e.what());
  } catch (const kclique::LimitError& e) {
    return fail(KC_ERR_LIMIT, e.what());
  } catch (const kclique::ConfigError& e) {
    return fail(KC_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(KC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(KC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(KC_ERR_INTERNAL, "unknown error");
  }
}

kc_status write_string(const std::string& s, char* buf, std::size_t cap, std::size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buf || cap < s.size() + 1) return fail(KC_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return KC_OK;
}

kc_status make_graph(kclique::EdgeList list, double load_ms, kc_graph** out) {
  auto* g = new kc_graph;
  g->graph = kclique::Graph::from_edges(list);
  g->self_loops_dropped = list.self_loops_dropped;
  g->duplicates_dropped = list.duplicates_dropped;
  g->load_ms = load_ms;
  *out = g;
  return KC_OK;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool criterion_from(kc_criterion c, kclique::Criterion& out) {
  if (c == KC_ORIENT_DEGREE) out = kclique::Criterion::kDegree;
  else if (c == KC_ORIENT_DEGENERACY) out = kclique::Criterion::kDegeneracy;
  else return false;
  return true;
}

kc_status request_from(const kc_config& cfg, kclique::ConfigRequest& req) {
  if (cfg.k == 0) return fail(KC_ERR_INVALID_ARGUMENT, "k must be at least 1");
  switch (cfg.algorithm) {
    case KC_ALGO_ORIENT: req.algorithm = kclique::Algorithm::kOrientation; break;
    case KC_ALGO_PIVOT: req.algorithm = kclique::Algorithm::kPivot; break;
    case KC_ALGO_AUTO: break;
    default: return fail(KC_ERR_INVALID_ARGUMENT, "unknown algorithm");
  }
  switch (cfg.scheme) {
    case KC_SCHEME_VERTEX: req.scheme = kclique::Scheme::kVertex; break;
    case KC_SCHEME_EDGE: req.scheme = kclique::Scheme::kEdge; break;
    case KC_SCHEME_AUTO: break;
    default: return fail(KC_ERR_INVALID_ARGUMENT, "unknown scheme");
  }
  if (cfg.criterion != KC_ORIENT_AUTO) {
    kclique::Criterion c;
    if (!criterion_from(cfg.criterion, c)) return fail(KC_ERR_INVALID_ARGUMENT, "unknown orientation criterion");
    req.criterion = c;
  }
  req.k = cfg.k;
  req.workers = cfg.workers ? cfg.workers : std::max(1U, std::thread::hardware_concurrency());
  req.all_k = cfg.all_k != 0;
  return KC_OK;
}

kc_config config_to_c(const kclique::RunConfig& r) {
  kc_config c{};
  c.algorithm = r.algorithm == kclique::Algorithm::kOrientation ? KC_ALGO_ORIENT : KC_ALGO_PIVOT;
  c.scheme = r.scheme == kclique::Scheme::kVertex ? KC_SCHEME_VERTEX : KC_SCHEME_EDGE;
  c.criterion = r.criterion == kclique::Criterion::kDegree ? KC_ORIENT_DEGREE : KC_ORIENT_DEGENERACY;
  c.k = r.k;
  c.workers = r.workers;
  c.all_k = r.all_k ? 1 : 0;
  return c;
}

kclique::RunConfig resolve_for(const kc_graph* graph, const kclique::ConfigRequest& req) {
  // auto_select ignores the graph shape today; skip the extra orientation.
  return kclique::resolve(req, graph->graph.num_vertices(), graph->graph.num_edges(), 0);
}

}  // namespace

extern "C" {

const char* kc_last_error(void) { return g_last_error.c_str(); }

const char* kc_status_string(kc_status status) {
  switch (status) {
    case KC_OK: return "ok";
    case KC_ERR_INVALID_ARGUMENT: return "invalid argument";
    case KC_ERR_PARSE: return "parse error";
    case KC_ERR_IO: return "i/o error";
    case KC_ERR_OVERFLOW: return "count overflow";
    case KC_ERR_LIMIT: return "limit exceeded";
    case KC_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case KC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void kc_config_default(kc_config* cfg, uint32_t k) {
  if (!cfg) return;
  cfg->algorithm = KC_ALGO_AUTO;
  cfg->scheme = KC_SCHEME_AUTO;
  cfg->criterion = KC_ORIENT_AUTO;
  cfg->k = k;
  cfg->workers = 0;
  cfg->all_k = 0;
}

kc_status kc_graph_load_file(const char* path, kc_graph** out) {
  if (!path || !out) return fail(KC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto t0 = std::chrono::steady_clock::now();
    auto list = kclique::load_edge_list_file(path);
    return make_graph(std::move(list), ms_since(t0), out);
  });
}

kc_status kc_graph_load_text(const char* text, size_t length, kc_graph** out) {
  if ((!text && length) || !out) return fail(KC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    auto t0 = std::chrono::steady_clock::now();
    auto list = kclique::load_edge_list(std::string_view(text ? text : "", length));
    return make_graph(std::move(list), ms_since(t0), out);
  });
}

kc_status kc_graph_from_edges(const uint64_t* src, const uint64_t* dst, size_t count, kc_graph** out) {
  if ((count && (!src || !dst)) || !out) return fail(KC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<std::pair<kclique::RawId, kclique::RawId>> raw;
    raw.reserve(count);
    for (size_t i = 0; i < count; ++i) raw.emplace_back(src[i], dst[i]);
    return make_graph(kclique::normalize_edges(std::move(raw)), 0.0, out);
  });
}

void kc_graph_free(kc_graph* graph) { delete graph; }

kc_status kc_graph_get_info(const kc_graph* graph, kc_graph_info* out) {
  if (!graph || !out) return fail(KC_ERR_INVALID_ARGUMENT, "null argument");
  out->n = graph->graph.num_vertices();
  out->m = graph->graph.num_edges();
  out->d_max_undirected = graph->graph.max_degree();
  out->self_loops_dropped = graph->self_loops_dropped;
  out->duplicates_dropped = graph->duplicates_dropped;
  out->load_ms = graph->load_ms;
  return KC_OK;
}

kc_status kc_graph_oriented_dmax(const kc_graph* graph, kc_criterion criterion, uint32_t* out) {
  if (!graph || !out) return fail(KC_ERR_INVALID_ARGUMENT, "null argument");
  kclique::Criterion c;
  if (!criterion_from(criterion, c)) return fail(KC_ERR_INVALID_ARGUMENT, "criterion must be degree or degeneracy");
  return guarded([&] {
    *out = kclique::orient(graph->graph, kclique::compute_rank(graph->graph, c)).max_out_degree();
    return KC_OK;
  });
}

kc_status kc_config_resolve(const kc_graph* graph, kc_config* cfg) {
  if (!graph || !cfg) return fail(KC_ERR_INVALID_ARGUMENT, "null argument");
  kclique::ConfigRequest req;
  if (kc_status s = request_from(*cfg, req); s != KC_OK) return s;
  return guarded([&] {
    *cfg = config_to_c(resolve_for(graph, req));
    return KC_OK;
  });
}

kc_status kc_count(const kc_graph* graph, const kc_config* cfg, kc_report** out) {
  if (!graph || !cfg || !out) return fail(KC_ERR_INVALID_ARGUMENT, "null argument");
  kclique::ConfigRequest req;
  if (kc_status s = request_from(*cfg, req); s != KC_OK) return s;
  return guarded([&] {
    auto resolved = resolve_for(graph, req);
    auto* r = new kc_report{kclique::run_count(graph->graph, resolved)};
    *out = r;
    return KC_OK;
  });
}

void kc_report_free(kc_report* report) { delete report; }

kc_status kc_report_get_summary(const kc_report* report, kc_report_summary* out) {
  if (!report || !out) return fail(KC_ERR_INVALID_ARGUMENT, "null argument");
  const auto& r = report->report;
  out->config = config_to_c(r.config);
  out->n = r.n;
  out->m = r.m;
  out->d_max_undirected = r.d_max_undirected;
  out->d_max_oriented = r.d_max_oriented;
  out->tasks = r.tasks;
  out->orient_ms = r.orient_ms;
  out->count_ms = r.count_ms;
  out->scratch_bytes = r.scratch_bytes;
  out->visited_total = r.load.total;
  out->visited_min = r.load.min;
  out->visited_max = r.load.max;
  out->visited_mean = r.load.mean;
  out->normalized_max_load = r.load.normalized_max;
  return KC_OK;
}

kc_status kc_report_count_string(const kc_report* report, char* buf, size_t cap, size_t* needed) {
  if (!report) return fail(KC_ERR_INVALID_ARGUMENT, "null argument");
  return write_string(report->report.count.to_string(), buf, cap, needed);
}

kc_status kc_report_count_u128(const kc_report* report, uint64_t* high, uint64_t* low) {
  if (!report || !high || !low) return fail(KC_ERR_INVALID_ARGUMENT, "null argument");
  *high = report->report.count.high();
  *low = report->report.count.low();
  return KC_OK;
}

kc_status kc_report_worker_visits(const kc_report* report, uint64_t* buf, size_t cap, size_t* count) {
  if (!report || !count) return fail(KC_ERR_INVALID_ARGUMENT, "null argument");
  const auto& w = report->report.load.per_worker;
  *count = w.size();
  if (cap < w.size() || (!buf && !w.empty())) return fail(KC_ERR_BUFFER_TOO_SMALL, "output buffer too small");
  std::copy(w.begin(), w.end(), buf);
  return KC_OK;
}

kc_status kc_report_max_clique_size(const kc_report* report, uint32_t* out) {
  if (!report || !out) return fail(KC_ERR_INVALID_ARGUMENT, "null argument");
  if (report->report.all_k.empty()) return fail(KC_ERR_INVALID_ARGUMENT, "report was not produced with all_k");
  *out = static_cast<uint32_t>(report->report.all_k.size() - 1);
  return KC_OK;
}

kc_status kc_report_count_for_size(const kc_report* report, uint32_t size, char* buf, size_t cap,
                                   size_t* needed) {
  if (!report) return fail(KC_ERR_INVALID_ARGUMENT, "null argument");
  const auto& all = report->report.all_k;
  if (all.empty()) return fail(KC_ERR_INVALID_ARGUMENT, "report was not produced with all_k");
  kclique::CliqueCount c = size < all.size() ? all[size] : kclique::CliqueCount(0);
  return write_string(c.to_string(), buf, cap, needed);
}

kc_status kc_oracle_count(const kc_graph* graph, uint32_t k, kc_oracle oracle, kc_criterion criterion, char* buf,
                          size_t cap, size_t* needed) {
  if (!graph) return fail(KC_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&]() -> kc_status {
    kclique::CliqueCount c;
    if (oracle == KC_ORACLE_BRUTE_FORCE) {
      c = kclique::oracle::brute_force_count(graph->graph, k);
    } else if (oracle == KC_ORACLE_RECURSIVE) {
      kclique::Criterion crit = kclique::Criterion::kDegeneracy;
      if (criterion != KC_ORIENT_AUTO && !criterion_from(criterion, crit))
        return fail(KC_ERR_INVALID_ARGUMENT, "unknown orientation criterion");
      c = kclique::oracle::naive_recursive_count(graph->graph, k, crit);
    } else {
      return fail(KC_ERR_INVALID_ARGUMENT, "unknown oracle");
    }
    return write_string(c.to_string(), buf, cap, needed);
  });
}

uint32_t kc_oracle_brute_force_limit(void) { return kclique::oracle::OracleLimit{}.max_n; }

}  // extern "C"
