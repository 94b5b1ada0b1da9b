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
#include <optional>
#include <string_view>

#include "orientation.hpp"

namespace kclique {

enum class Algorithm { kOrientation, kPivot };
enum class Scheme { kVertex, kEdge };

std::string_view to_string(Algorithm a);
std::string_view to_string(Scheme s);

struct RunConfig {
  Algorithm algorithm = Algorithm::kOrientation;
  Scheme scheme = Scheme::kVertex;
  Criterion criterion = Criterion::kDegree;
  std::uint32_t k = 3;
  std::uint32_t workers = 1;
  // Pivot only: also report counts for every clique size in one pass.
  bool all_k = false;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Throws ConfigError unless k >= 1, workers >= 1 and all_k implies pivot.
void validate(const RunConfig& cfg);

/// Heuristic configuration: orientation below k = 7, pivoting from 7 on;
/// vertex tasks below k = 6, edge tasks from 6 on; degree orientation only
/// for the orientation algorithm below k = 7, degeneracy otherwise. The
/// graph-shape arguments are accepted for future rules and currently unused.
RunConfig auto_select(std::uint64_t n, std::uint64_t m, std::uint32_t d_max_degree_oriented, std::uint32_t k);

/// A configuration with some fields left to auto_select.
struct ConfigRequest {
  std::optional<Algorithm> algorithm;
  std::optional<Scheme> scheme;
  std::optional<Criterion> criterion;
  std::uint32_t k = 3;
  std::uint32_t workers = 1;
  bool all_k = false;
};

/// Fills unset fields. The criterion follows the resolved algorithm, and
/// all_k forces the pivot algorithm when the algorithm is unset.
RunConfig resolve(const ConfigRequest& req, std::uint64_t n, std::uint64_t m, std::uint32_t d_max_degree_oriented);

}  // namespace kclique
