// Copyright 2026 qftsynth contributors
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

#include "qftsynth/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qftsynth {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count <= 0) {
    throw std::invalid_argument("graph must have at least one vertex");
  }
  n_ = vertex_count;
  active_count_ = vertex_count;
  adj_.assign(static_cast<size_t>(n_), {});
  excluded_.assign(static_cast<size_t>(n_), 0);

  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop is not allowed");
    }
    const auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate edge");
    }
    adj_[static_cast<size_t>(u)].push_back(v);
    adj_[static_cast<size_t>(v)].push_back(u);
  }
  m_ = static_cast<int>(seen.size());
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

Graph Graph::parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;

  auto next_content_line = [&](std::string& out) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };

  std::string content;
  if (!next_content_line(content)) {
    throw std::invalid_argument("empty graph file");
  }
  {
    std::istringstream ls(content);
    if (!(ls >> n >> m)) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected header \"n m\"");
    }
    std::string extra;
    if (ls >> extra) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": trailing tokens after header");
    }
  }
  if (n <= 0 || m < 0) {
    throw std::invalid_argument("header values out of range");
  }
  for (int i = 0; i < m; ++i) {
    if (!next_content_line(content)) {
      throw std::invalid_argument("expected " + std::to_string(m) +
                                  " edges, found " + std::to_string(i));
    }
    std::istringstream ls(content);
    int u = 0, v = 0;
    if (!(ls >> u >> v)) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected edge \"u v\"");
    }
    std::string extra;
    if (ls >> extra) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": trailing tokens after edge");
    }
    if (u < 1 || u > n || v < 1 || v > n) {
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": vertex out of range 1.." +
                                  std::to_string(n));
    }
    edges.emplace_back(u - 1, v - 1);
  }
  if (next_content_line(content)) {
    throw std::invalid_argument("line " + std::to_string(line_no) +
                                ": unexpected content after edge list");
  }

  Graph g(n, edges);
  if (!g.connected_on_active()) {
    throw std::invalid_argument("graph is disconnected");
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
  const auto& list = adj_[static_cast<size_t>(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u : adj_[static_cast<size_t>(v)]) {
    if (!excluded_[static_cast<size_t>(u)]) out.push_back(u);
  }
  return out;
}

std::vector<int> Graph::active_vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(active_count_));
  for (int v = 0; v < n_; ++v) {
    if (!excluded_[static_cast<size_t>(v)]) out.push_back(v);
  }
  return out;
}

void Graph::exclude(int v) {
  if (v < 0 || v >= n_) {
    throw std::invalid_argument("vertex out of range");
  }
  if (excluded_[static_cast<size_t>(v)]) {
    throw std::invalid_argument("vertex already excluded");
  }
  excluded_[static_cast<size_t>(v)] = 1;
  --active_count_;
}

void Graph::restore_all() {
  std::fill(excluded_.begin(), excluded_.end(), 0);
  active_count_ = n_;
}

bool Graph::connected_on_active() const {
  if (active_count_ == 0) return false;
  int start = -1;
  for (int v = 0; v < n_; ++v) {
    if (!excluded_[static_cast<size_t>(v)]) {
      start = v;
      break;
    }
  }
  std::vector<char> seen(static_cast<size_t>(n_), 0);
  std::deque<int> queue{start};
  seen[static_cast<size_t>(start)] = 1;
  int reached = 1;
  while (!queue.empty()) {
    const int t = queue.front();
    queue.pop_front();
    for (int u : adj_[static_cast<size_t>(t)]) {
      if (excluded_[static_cast<size_t>(u)] || seen[static_cast<size_t>(u)]) {
        continue;
      }
      seen[static_cast<size_t>(u)] = 1;
      ++reached;
      queue.push_back(u);
    }
  }
  return reached == active_count_;
}

DistanceMatrix shortest_paths(const Graph& g) {
  const int n = g.vertex_count();
  const size_t nn = static_cast<size_t>(n) * static_cast<size_t>(n);
  std::vector<int> dist(nn, DistanceMatrix::kUnreachable);
  std::vector<int> pred(nn, -1);

  std::deque<int> queue;
  for (int src = 0; src < n; ++src) {
    if (g.excluded(src)) continue;
    const size_t row = static_cast<size_t>(src) * static_cast<size_t>(n);
    dist[row + static_cast<size_t>(src)] = 0;
    queue.clear();
    queue.push_back(src);
    while (!queue.empty()) {
      const int t = queue.front();
      queue.pop_front();
      for (int u : g.all_neighbors(t)) {
        if (g.excluded(u)) continue;
        if (dist[row + static_cast<size_t>(u)] != DistanceMatrix::kUnreachable)
          continue;
        dist[row + static_cast<size_t>(u)] =
            dist[row + static_cast<size_t>(t)] + 1;
        pred[row + static_cast<size_t>(u)] = t;
        queue.push_back(u);
      }
    }
  }
  return DistanceMatrix(n, std::move(dist), std::move(pred));
}

std::vector<int> get_shortest_path(const DistanceMatrix& dm, int v, int u) {
  if (v == u) return {};
  if (dm.dist(v, u) == DistanceMatrix::kUnreachable) {
    throw std::invalid_argument("vertices are not connected");
  }
  std::vector<int> path{u};
  int t = dm.pred(v, u);
  while (t != v) {
    path.push_back(t);
    t = dm.pred(v, t);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace qftsynth
