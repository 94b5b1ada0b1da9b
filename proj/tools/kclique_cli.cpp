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

// kclique: count k-cliques in a SNAP edge list through the C API.
//
// Exit status: 0 success, 1 usage/input/config error, 2 oracle mismatch,
// 3 count overflow.

#include <cstdio>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kclique/kclique.h"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitOracleMismatch = 2;
constexpr int kExitOverflow = 3;

// Largest graph the recursive oracle is run on by --oracle-check.
constexpr std::uint64_t kRecursiveOracleMaxVertices = 100000;

struct GraphDeleter {
  void operator()(kc_graph* g) const { kc_graph_free(g); }
};
struct ReportDeleter {
  void operator()(kc_report* r) const { kc_report_free(r); }
};
using GraphPtr = std::unique_ptr<kc_graph, GraphDeleter>;
using ReportPtr = std::unique_ptr<kc_report, ReportDeleter>;

struct Options {
  std::string input;
  std::uint32_t k = 0;
  std::string algo = "auto";
  std::string orient = "auto";
  std::string scheme = "auto";
  std::uint32_t threads = 0;
  std::string format = "json";
  bool stats = false;
  bool oracle_check = false;
  bool all_k = false;
};

const char* algo_name(kc_algorithm a) { return a == KC_ALGO_ORIENT ? "orient" : a == KC_ALGO_PIVOT ? "pivot" : "auto"; }
const char* scheme_name(kc_scheme s) { return s == KC_SCHEME_VERTEX ? "vertex" : s == KC_SCHEME_EDGE ? "edge" : "auto"; }
const char* criterion_name(kc_criterion c) {
  return c == KC_ORIENT_DEGREE ? "degree" : c == KC_ORIENT_DEGENERACY ? "degeneracy" : "auto";
}

int exit_for(kc_status s) { return s == KC_ERR_OVERFLOW ? kExitOverflow : kExitError; }

int report_failure(const std::string& what, kc_status s) {
  std::cerr << "kclique: " << what << ": " << kc_status_string(s) << ": " << kc_last_error() << "\n";
  return exit_for(s);
}

// Two-call pattern for the API's string getters.
template <typename F>
kc_status fetch_string(std::string& out, F&& call) {
  std::size_t needed = 0;
  kc_status s = call(nullptr, 0, &needed);
  if (s != KC_OK && s != KC_ERR_BUFFER_TOO_SMALL) return s;
  std::vector<char> buf(needed);
  s = call(buf.data(), buf.size(), &needed);
  if (s == KC_OK) out.assign(buf.data());
  return s;
}

struct OracleResult {
  bool attempted = false;
  std::string name;
  std::string count;
  std::string skipped_reason;
};

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

void print_text(const Options& opt, const kc_graph_info& info, const kc_report_summary& sum, const std::string& count,
                const std::map<std::uint32_t, std::string>& all_k, const std::vector<std::uint64_t>& visits,
                const OracleResult& oracle) {
  std::string name = std::filesystem::path(opt.input).filename().string();
  const double total_s = (sum.orient_ms + sum.count_ms) / 1000.0;
  std::cout << std::left << std::setw(24) << "Graph" << std::right << std::setw(12) << "|V|" << std::setw(14) << "|E|"
            << std::setw(4) << "k" << std::setw(26) << "# k-Cliques" << std::setw(8) << "algo" << std::setw(8)
            << "scheme" << std::setw(12) << "orient" << std::setw(12) << "Time (s)" << "\n";
  std::cout << std::left << std::setw(24) << name << std::right << std::setw(12) << info.n << std::setw(14) << info.m
            << std::setw(4) << sum.config.k << std::setw(26) << count << std::setw(8) << algo_name(sum.config.algorithm)
            << std::setw(8) << scheme_name(sum.config.scheme) << std::setw(12) << criterion_name(sum.config.criterion)
            << std::setw(12) << fixed(total_s, 3) << "\n";
  std::cout << "d_max undirected " << info.d_max_undirected << ", oriented " << sum.d_max_oriented << "; load "
            << fixed(info.load_ms, 1) << " ms, orient " << fixed(sum.orient_ms, 1) << " ms, count "
            << fixed(sum.count_ms, 1) << " ms; scratch " << sum.scratch_bytes << " bytes\n";
  if (!all_k.empty()) {
    std::cout << "all k:\n";
    for (const auto& [size, c] : all_k) std::cout << "  " << std::setw(4) << size << "  " << c << "\n";
  }
  if (opt.stats) {
    std::cout << "visited nodes: total " << sum.visited_total << ", min " << sum.visited_min << ", max "
              << sum.visited_max << ", mean " << fixed(sum.visited_mean, 1) << ", normalized max "
              << fixed(sum.normalized_max_load, 3) << "\n";
    for (std::size_t w = 0; w < visits.size(); ++w) std::cout << "  worker " << w << ": " << visits[w] << "\n";
  }
  if (opt.oracle_check) {
    if (oracle.attempted)
      std::cout << "oracle (" << oracle.name << "): " << oracle.count << (oracle.count == count ? " ok" : " MISMATCH")
                << "\n";
    else
      std::cout << "oracle skipped: " << oracle.skipped_reason << "\n";
  }
}

ordered_json build_json(const Options& opt, const kc_graph_info& info, const kc_report_summary& sum,
                        const std::string& count, const std::map<std::uint32_t, std::string>& all_k,
                        const std::vector<std::uint64_t>& visits, const OracleResult& oracle) {
  ordered_json j;
  j["graph"] = {{"path", opt.input},
                {"n", info.n},
                {"m", info.m},
                {"d_max_undirected", info.d_max_undirected},
                {"d_max_oriented", sum.d_max_oriented},
                {"self_loops_dropped", info.self_loops_dropped},
                {"duplicates_dropped", info.duplicates_dropped}};
  j["config"] = {{"k", sum.config.k},
                 {"algo", algo_name(sum.config.algorithm)},
                 {"scheme", scheme_name(sum.config.scheme)},
                 {"orient", criterion_name(sum.config.criterion)},
                 {"threads", sum.config.workers},
                 {"all_k", sum.config.all_k != 0}};
  j["count"] = count;
  j["timings"] = {{"load_ms", info.load_ms},
                  {"orient_ms", sum.orient_ms},
                  {"count_ms", sum.count_ms},
                  {"total_ms", sum.orient_ms + sum.count_ms}};
  j["tasks"] = sum.tasks;
  j["scratch_bytes"] = sum.scratch_bytes;
  if (!all_k.empty()) {
    ordered_json counts = ordered_json::object();
    for (const auto& [size, c] : all_k) counts[std::to_string(size)] = c;
    j["all_k"] = counts;
  }
  if (opt.stats) {
    j["load_balance"] = {{"visited_total", sum.visited_total},
                         {"visited_min", sum.visited_min},
                         {"visited_max", sum.visited_max},
                         {"visited_mean", sum.visited_mean},
                         {"normalized_max", sum.normalized_max_load},
                         {"per_worker", visits}};
  }
  if (opt.oracle_check) {
    if (oracle.attempted) {
      j["oracle"] = oracle.name;
      j["oracle_count"] = oracle.count;
      j["oracle_verified"] = oracle.count == count;
    } else {
      j["oracle_verified"] = nullptr;
      j["oracle_skipped"] = oracle.skipped_reason;
    }
  }
  return j;
}

int run(const Options& opt) {
  kc_config cfg;
  kc_config_default(&cfg, opt.k);
  cfg.workers = opt.threads;
  cfg.all_k = opt.all_k ? 1 : 0;
  if (opt.algo == "orient") cfg.algorithm = KC_ALGO_ORIENT;
  else if (opt.algo == "pivot") cfg.algorithm = KC_ALGO_PIVOT;
  if (opt.scheme == "vertex") cfg.scheme = KC_SCHEME_VERTEX;
  else if (opt.scheme == "edge") cfg.scheme = KC_SCHEME_EDGE;
  if (opt.orient == "degree") cfg.criterion = KC_ORIENT_DEGREE;
  else if (opt.orient == "degeneracy") cfg.criterion = KC_ORIENT_DEGENERACY;

  kc_graph* raw_graph = nullptr;
  if (kc_status s = kc_graph_load_file(opt.input.c_str(), &raw_graph); s != KC_OK)
    return report_failure("loading " + opt.input, s);
  GraphPtr graph(raw_graph);
  kc_graph_info info{};
  kc_graph_get_info(graph.get(), &info);

  kc_report* raw_report = nullptr;
  if (kc_status s = kc_count(graph.get(), &cfg, &raw_report); s != KC_OK) return report_failure("counting", s);
  ReportPtr report(raw_report);
  kc_report_summary sum{};
  kc_report_get_summary(report.get(), &sum);

  std::string count;
  if (kc_status s = fetch_string(count, [&](char* b, std::size_t c, std::size_t* n) {
        return kc_report_count_string(report.get(), b, c, n);
      });
      s != KC_OK)
    return report_failure("reading count", s);

  std::map<std::uint32_t, std::string> all_k;
  if (opt.all_k) {
    std::uint32_t max_size = 0;
    kc_report_max_clique_size(report.get(), &max_size);
    for (std::uint32_t size = 1; size <= max_size; ++size) {
      std::string c;
      fetch_string(c, [&](char* b, std::size_t cap, std::size_t* n) {
        return kc_report_count_for_size(report.get(), size, b, cap, n);
      });
      all_k[size] = c;
    }
  }

  std::vector<std::uint64_t> visits;
  if (opt.stats) {
    std::size_t workers = 0;
    kc_report_worker_visits(report.get(), nullptr, 0, &workers);
    visits.resize(workers);
    kc_report_worker_visits(report.get(), visits.data(), visits.size(), &workers);
  }

  OracleResult oracle;
  if (opt.oracle_check) {
    kc_oracle which = KC_ORACLE_BRUTE_FORCE;
    if (info.n <= kc_oracle_brute_force_limit()) {
      which = KC_ORACLE_BRUTE_FORCE;
      oracle.name = "brute_force";
    } else if (info.n <= kRecursiveOracleMaxVertices) {
      which = KC_ORACLE_RECURSIVE;
      oracle.name = "naive_recursive";
    } else {
      oracle.skipped_reason = "graph has " + std::to_string(info.n) + " vertices, oracle limit is " +
                              std::to_string(kRecursiveOracleMaxVertices);
    }
    if (oracle.skipped_reason.empty()) {
      kc_status s = fetch_string(oracle.count, [&](char* b, std::size_t c, std::size_t* n) {
        return kc_oracle_count(graph.get(), opt.k, which, KC_ORIENT_DEGENERACY, b, c, n);
      });
      if (s != KC_OK) return report_failure("oracle", s);
      oracle.attempted = true;
    }
  }

  if (opt.format == "text")
    print_text(opt, info, sum, count, all_k, visits, oracle);
  else
    std::cout << build_json(opt, info, sum, count, all_k, visits, oracle).dump(2) << "\n";

  if (oracle.attempted && oracle.count != count) {
    std::cerr << "kclique: oracle mismatch for k=" << opt.k << ": engine " << count << ", " << oracle.name << " "
              << oracle.count << "\n";
    return kExitOracleMismatch;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app("Exact k-clique counting over SNAP edge lists", "kclique");
  app.add_option("--input,-i", opt.input, "SNAP edge-list file")->required();
  app.add_option("--k,-k", opt.k, "Clique size")->required()->check(CLI::PositiveNumber);
  app.add_option("--algo", opt.algo, "Traversal algorithm")->check(CLI::IsMember({"orient", "pivot", "auto"}));
  app.add_option("--orient", opt.orient, "Orientation criterion")
      ->check(CLI::IsMember({"degree", "degeneracy", "auto"}));
  app.add_option("--scheme", opt.scheme, "Work distribution")->check(CLI::IsMember({"vertex", "edge", "auto"}));
  app.add_option("--threads,-t", opt.threads, "Worker threads (0 = hardware concurrency)");
  app.add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--stats", opt.stats, "Report per-worker visited-node load balance");
  app.add_flag("--oracle-check", opt.oracle_check, "Verify the count with an independent oracle");
  app.add_flag("--all-k", opt.all_k, "Report counts for every clique size (pivot algorithm)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return kExitError;
  }
  if (opt.all_k && opt.algo == "orient") {
    std::cerr << "kclique: --all-k requires --algo pivot or auto\n";
    return kExitError;
  }
  return run(opt);
}
