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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <set>

#include "errors.hpp"
#include "graph.hpp"
#include "support.hpp"

using namespace kclique;

TEST_CASE("parse comments, blank lines and whitespace") {
  EdgeList el = load_edge_list("# header\n\n0 1\n1\t2\r\n  2   0  \n");
  REQUIRE(el.edges.size() == 3);
  CHECK(el.edges[0] == std::pair<RawId, RawId>{0, 1});
  CHECK(el.edges[1] == std::pair<RawId, RawId>{0, 2});
  CHECK(el.edges[2] == std::pair<RawId, RawId>{1, 2});
  Graph g = Graph::from_edges(el);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 3);
}

TEST_CASE("self-loops and duplicates are dropped") {
  EdgeList el = load_edge_list("0 1\n1 0\n0 1\n2 2\n1 2\n");
  CHECK(el.edges.size() == 2);
  CHECK(el.self_loops_dropped == 1);
  CHECK(el.duplicates_dropped == 2);
  Graph g = Graph::from_edges(el);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
}

TEST_CASE("id only on a self-loop stays as an isolated vertex") {
  EdgeList el = load_edge_list("0 1\n7 7\n");
  REQUIRE(el.isolated.size() == 1);
  CHECK(el.isolated[0] == 7);
  Graph g = Graph::from_edges(el);
  CHECK(g.num_vertices() == 3);
  CHECK(g.degree(2) == 0);
}

TEST_CASE("malformed lines report their line number") {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      load_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("0 1\n1 x\n") == 2);
  CHECK(line_of("# c\n0 1\n\n5\n") == 4);
  CHECK(line_of("0 1 2\n") == 1);
  CHECK(line_of("-1 2\n") == 1);
  CHECK(line_of("0 99999999999999999999999\n") == 1);
}

TEST_CASE("empty input gives an empty graph") {
  Graph g = Graph::from_edges(load_edge_list("# nothing\n\n"));
  CHECK(g.num_vertices() == 0);
  CHECK(g.num_edges() == 0);
  CHECK(g.max_degree() == 0);
  CHECK(g.row_ptr().size() == 1);
}

TEST_CASE("non-contiguous ids are compacted in ascending order") {
  Graph g = Graph::from_edges(load_edge_list("30 10\n20 30\n"));
  REQUIRE(g.num_vertices() == 3);
  CHECK(g.id_map()[0] == 10);
  CHECK(g.id_map()[1] == 20);
  CHECK(g.id_map()[2] == 30);
  CHECK(g.has_edge(0, 2));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("missing file raises IoError") {
  CHECK_THROWS_AS(load_edge_list_file("/nonexistent/graph.txt"), IoError);
}

TEST_CASE("file loading matches text loading") {
  const std::string path = "graph_test_tmp.txt";
  {
    std::ofstream out(path);
    out << "# t\n5 6\n6 7\n7 5\n";
  }
  EdgeList a = load_edge_list_file(path);
  std::remove(path.c_str());
  EdgeList b = load_edge_list("5 6\n6 7\n7 5\n");
  CHECK(a.edges == b.edges);
}

TEST_CASE("structural properties on random graphs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    auto pairs = testing::gnp_pairs(40, 0.15, rng);
    Graph g = testing::graph_of(pairs);
    std::set<std::pair<VertexId, VertexId>> expect;
    for (auto [u, v] : pairs) expect.emplace(static_cast<VertexId>(u), static_cast<VertexId>(v));

    // Ids may be compacted when some vertex has no edges.
    std::set<std::pair<RawId, RawId>> seen;
    std::uint64_t degree_sum = 0;
    std::uint32_t max_deg = 0;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      auto nb = g.neighbors(v);
      CHECK(std::is_sorted(nb.begin(), nb.end()));
      degree_sum += g.degree(v);
      max_deg = std::max(max_deg, g.degree(v));
      for (VertexId w : nb) {
        CHECK(w != v);
        CHECK(g.has_edge(w, v));
        RawId a = g.id_map()[v], b = g.id_map()[w];
        if (a < b) seen.emplace(a, b);
      }
    }
    CHECK(degree_sum == 2 * g.num_edges());
    CHECK(max_deg == g.max_degree());
    CHECK(seen.size() == expect.size());
    for (auto [u, v] : expect) CHECK(seen.count({u, v}) == 1);

    REQUIRE(g.coo_src().size() == g.col().size());
    for (std::size_t i = 0; i < g.col().size(); ++i) {
      VertexId s = g.coo_src()[i];
      CHECK(i >= g.row_ptr()[s]);
      CHECK(i < g.row_ptr()[s + 1]);
      CHECK(g.coo_dst()[i] == g.col()[i]);
    }
  }
}
