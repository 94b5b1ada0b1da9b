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

#include "clique_count.hpp"
#include "graph.hpp"
#include "orientation.hpp"

// Ground-truth counters that share no code with the engines: no bitsets, no
// induced sub-graphs, no orientation module.
namespace kclique::oracle {

struct OracleLimit {
  std::uint32_t max_n = 30;
};

/// Checks every k-subset against an adjacency matrix. Throws LimitError when
/// n exceeds limit.max_n.
CliqueCount brute_force_count(const Graph& g, std::uint32_t k, OracleLimit limit = {});

/// Recursive depth-first traversal over a DAG built here from the chosen
/// criterion, using sorted-list merge intersections.
CliqueCount naive_recursive_count(const Graph& g, std::uint32_t k, Criterion criterion);

}  // namespace kclique::oracle
