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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

#ifndef KCLIQUE_CLI_PATH
#error "KCLIQUE_CLI_PATH must name the command-line binary"
#endif

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  std::string cmd = std::string(KCLIQUE_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t got = std::fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), got);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_file(const std::string& name, const std::string& body) {
  std::ofstream(name) << body;
  return name;
}

std::string random_graph_file(const std::string& name, int n, double p, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::string body = "# random\n";
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) body += std::to_string(u) + "\t" + std::to_string(v) + "\n";
  return write_file(name, body);
}

}  // namespace

TEST_CASE("json report for K5") {
  std::string f = write_file("cli_k5.txt", "0 1\n0 2\n0 3\n0 4\n1 2\n1 3\n1 4\n2 3\n2 4\n3 4\n");
  Result r = run("--input " + f + " --k 4 --oracle-check --stats --threads 2");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == "5");
  CHECK(j["graph"]["n"] == 5);
  CHECK(j["graph"]["m"] == 10);
  CHECK(j["graph"]["d_max_undirected"] == 4);
  CHECK(j["config"]["k"] == 4);
  CHECK(j["config"]["algo"] == "orient");
  CHECK(j["config"]["scheme"] == "vertex");
  CHECK(j["config"]["orient"] == "degree");
  CHECK(j["config"]["threads"] == 2);
  CHECK(j["oracle_verified"] == true);
  CHECK(j["load_balance"]["per_worker"].size() == 2);
  CHECK(j.contains("timings"));
}

TEST_CASE("thread count does not change the result") {
  std::string f = random_graph_file("cli_rand.txt", 120, 0.2, 89);
  for (const char* algo : {"orient", "pivot"})
    for (const char* scheme : {"vertex", "edge"}) {
      std::string base = std::string("--input ") + f + " --k 5 --algo " + algo + " --scheme " + scheme;
      Result one = run(base + " --threads 1 --oracle-check");
      Result many = run(base + " --threads 6");
      REQUIRE(one.code == 0);
      REQUIRE(many.code == 0);
      auto a = nlohmann::json::parse(one.out);
      auto b = nlohmann::json::parse(many.out);
      CHECK(a["oracle_verified"] == true);
      CHECK(a["count"] == b["count"]);
      CHECK(b["config"]["threads"] == 6);
    }
}

TEST_CASE("all sizes output") {
  std::string f = write_file("cli_k6.txt", "1 2\n1 3\n1 4\n1 5\n1 6\n2 3\n2 4\n2 5\n2 6\n3 4\n3 5\n3 6\n4 5\n4 6\n5 6\n");
  Result r = run("--input " + f + " --k 3 --all-k");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == "20");
  CHECK(j["config"]["algo"] == "pivot");
  CHECK(j["all_k"]["4"] == "15");
  CHECK(j["all_k"]["6"] == "1");
}

TEST_CASE("text format") {
  std::string f = write_file("cli_tri.txt", "0 1\n1 2\n2 0\n");
  Result r = run("--input " + f + " --k 3 --format text");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("Graph") != std::string::npos);
  CHECK(r.out.find("cli_tri.txt") != std::string::npos);
  CHECK_FALSE(nlohmann::json::accept(r.out));
}

TEST_CASE("error exit codes") {
  CHECK(run("--input /nonexistent/graph.txt --k 3").code == 1);
  std::string bad = write_file("cli_bad.txt", "0 1\nx y\n");
  CHECK(run("--input " + bad + " --k 3").code == 1);
  std::string ok = write_file("cli_ok.txt", "0 1\n");
  CHECK(run("--input " + ok + " --k 0").code == 1);
  CHECK(run("--input " + ok).code == 1);
  CHECK(run("--input " + ok + " --k 3 --algo bogus").code == 1);
  CHECK(run("--input " + ok + " --k 3 --algo orient --all-k").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("json round trip and brute-force oracle on 30 vertices") {
  std::string f = random_graph_file("cli_rand30.txt", 30, 0.5, 97);
  Result r = run("--input " + f + " --k 4 --oracle-check --threads 3");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["oracle"] == "brute_force");
  CHECK(j["oracle_verified"] == true);
  auto again = nlohmann::json::parse(j.dump());
  CHECK(again["config"] == j["config"]);
  CHECK(again["count"] == j["count"]);
  CHECK(again["count"].get<std::string>() == j["oracle_count"].get<std::string>());
}
