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

#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

#include "errors.hpp"

namespace kclique {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

}  // namespace

EdgeList load_edge_list(std::string_view text) {
  std::vector<std::pair<RawId, RawId>> raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    std::size_t i = 0;
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size() || line[i] == '#') continue;

    RawId ids[2];
    int tokens = 0;
    while (i < line.size()) {
      std::size_t start = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      std::string_view tok = line.substr(start, i - start);
      if (tokens == 2)
        throw ParseError(line_no, "expected two vertex ids, found more");
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), ids[tokens]);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line_no, "invalid vertex id '" + std::string(tok) + "'");
      ++tokens;
      while (i < line.size() && is_space(line[i])) ++i;
    }
    if (tokens != 2) throw ParseError(line_no, "expected two vertex ids, found one");

    raw.emplace_back(ids[0], ids[1]);
  }
  return normalize_edges(std::move(raw));
}

EdgeList normalize_edges(std::vector<std::pair<RawId, RawId>> raw) {
  EdgeList out;
  std::vector<RawId> loop_ids;
  out.edges.reserve(raw.size());
  for (auto [a, b] : raw) {
    auto [u, v] = std::minmax(a, b);
    if (u == v) {
      ++out.self_loops_dropped;
      loop_ids.push_back(u);
      continue;
    }
    out.edges.emplace_back(u, v);
  }

  std::sort(out.edges.begin(), out.edges.end());
  auto last = std::unique(out.edges.begin(), out.edges.end());
  out.duplicates_dropped = static_cast<std::uint64_t>(std::distance(last, out.edges.end()));
  out.edges.erase(last, out.edges.end());

  if (!loop_ids.empty()) {
    std::vector<RawId> incident;
    incident.reserve(out.edges.size() * 2);
    for (auto [u, v] : out.edges) {
      incident.push_back(u);
      incident.push_back(v);
    }
    std::sort(incident.begin(), incident.end());
    std::sort(loop_ids.begin(), loop_ids.end());
    loop_ids.erase(std::unique(loop_ids.begin(), loop_ids.end()), loop_ids.end());
    for (RawId id : loop_ids)
      if (!std::binary_search(incident.begin(), incident.end(), id)) out.isolated.push_back(id);
  }
  return out;
}

EdgeList load_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed for '" + path + "'");
  return load_edge_list(buf.str());
}

Graph::Graph() : row_ptr_{0} {}

Graph Graph::from_edges(const EdgeList& list) {
  Graph g;

  std::vector<RawId>& ids = g.id_map_;
  ids.reserve(list.edges.size() * 2 + list.isolated.size());
  for (auto [u, v] : list.edges) {
    ids.push_back(u);
    ids.push_back(v);
  }
  ids.insert(ids.end(), list.isolated.begin(), list.isolated.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  if (ids.size() > std::numeric_limits<VertexId>::max())
    throw std::length_error("vertex count exceeds 32-bit id space");
  g.n_ = static_cast<VertexId>(ids.size());

  auto compact = [&](RawId raw) {
    return static_cast<VertexId>(std::lower_bound(ids.begin(), ids.end(), raw) - ids.begin());
  };

  // Both directions of every pair, then sort so each row is ascending.
  std::vector<std::pair<VertexId, VertexId>> arcs;
  arcs.reserve(list.edges.size() * 2);
  for (auto [u, v] : list.edges) {
    if (u == v) continue;
    VertexId cu = compact(u), cv = compact(v);
    arcs.emplace_back(cu, cv);
    arcs.emplace_back(cv, cu);
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  g.row_ptr_.assign(static_cast<std::size_t>(g.n_) + 1, 0);
  g.col_.resize(arcs.size());
  g.coo_src_.resize(arcs.size());
  g.coo_dst_.resize(arcs.size());
  for (std::size_t e = 0; e < arcs.size(); ++e) {
    ++g.row_ptr_[arcs[e].first + 1];
    g.coo_src_[e] = arcs[e].first;
    g.coo_dst_[e] = arcs[e].second;
    g.col_[e] = arcs[e].second;
  }
  for (VertexId v = 0; v < g.n_; ++v) g.row_ptr_[v + 1] += g.row_ptr_[v];
  return g;
}

std::uint32_t Graph::max_degree() const {
  std::uint32_t best = 0;
  for (VertexId v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

}  // namespace kclique
