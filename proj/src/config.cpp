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

#include "config.hpp"

#include "errors.hpp"

namespace kclique {

std::string_view to_string(Algorithm a) { return a == Algorithm::kOrientation ? "orient" : "pivot"; }
std::string_view to_string(Scheme s) { return s == Scheme::kVertex ? "vertex" : "edge"; }

void validate(const RunConfig& cfg) {
  if (cfg.k < 1) throw ConfigError("k must be at least 1");
  if (cfg.workers < 1) throw ConfigError("workers must be at least 1");
  if (cfg.all_k && cfg.algorithm != Algorithm::kPivot)
    throw ConfigError("all-k counting requires the pivot algorithm");
}

namespace {

Criterion criterion_for(Algorithm a, std::uint32_t k) {
  if (a == Algorithm::kPivot) return Criterion::kDegeneracy;
  return k < 7 ? Criterion::kDegree : Criterion::kDegeneracy;
}

}  // namespace

RunConfig auto_select(std::uint64_t, std::uint64_t, std::uint32_t, std::uint32_t k) {
  RunConfig cfg;
  cfg.k = k;
  cfg.algorithm = k < 7 ? Algorithm::kOrientation : Algorithm::kPivot;
  cfg.scheme = k < 6 ? Scheme::kVertex : Scheme::kEdge;
  cfg.criterion = criterion_for(cfg.algorithm, k);
  return cfg;
}

RunConfig resolve(const ConfigRequest& req, std::uint64_t n, std::uint64_t m, std::uint32_t d_max_degree_oriented) {
  RunConfig cfg = auto_select(n, m, d_max_degree_oriented, req.k);
  if (req.algorithm)
    cfg.algorithm = *req.algorithm;
  else if (req.all_k)
    cfg.algorithm = Algorithm::kPivot;
  if (req.scheme) cfg.scheme = *req.scheme;
  cfg.criterion = req.criterion ? *req.criterion : criterion_for(cfg.algorithm, req.k);
  cfg.workers = req.workers;
  cfg.all_k = req.all_k;
  return cfg;
}

}  // namespace kclique
