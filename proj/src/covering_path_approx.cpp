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

#include "qftsynth/covering_path_approx.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace qftsynth {

namespace {

enum Color : char { kWhite = 0, kGray = 1, kBlack = 2 };

CoveringSolution make_solution(const Graph& g, NonSimplePath path) {
  CoveringSolution sol;
  sol.path = std::move(path);
  std::vector<char> on_path(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : sol.path) on_path[static_cast<size_t>(v)] = 1;
  for (int v : g.active_vertices()) {
    if (on_path[static_cast<size_t>(v)]) {
      sol.visited.push_back(v);
    } else {
      for (int u : g.all_neighbors(v)) {
        if (on_path[static_cast<size_t>(u)]) {
          sol.boundary.push_back(v);
          break;
        }
      }
    }
  }
  const int len = static_cast<int>(sol.path.size()) - 1;
  sol.objective = 3 * len + 2 * static_cast<int>(sol.boundary.size());
  return sol;
}

// Farthest active member of `within` from `start`, walking only edges inside
// `within`; ties go to the lowest index.
int bfs_farthest(const Graph& g, const std::vector<char>& within, int start) {
  std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
  std::deque<int> queue{start};
  dist[static_cast<size_t>(start)] = 0;
  int best = start;
  while (!queue.empty()) {
    const int t = queue.front();
    queue.pop_front();
    if (dist[static_cast<size_t>(t)] > dist[static_cast<size_t>(best)] ||
        (dist[static_cast<size_t>(t)] == dist[static_cast<size_t>(best)] &&
         t < best)) {
      best = t;
    }
    for (int u : g.all_neighbors(t)) {
      if (g.excluded(u) || !within[static_cast<size_t>(u)]) continue;
      if (dist[static_cast<size_t>(u)] >= 0) continue;
      dist[static_cast<size_t>(u)] = dist[static_cast<size_t>(t)] + 1;
      queue.push_back(u);
    }
  }
  return best;
}

}  // namespace

std::vector<int> connected_dominating_set(const Graph& g) {
  if (!g.connected_on_active()) {
    throw std::invalid_argument(
        "active subgraph must be non-empty and connected");
  }
  const int n = g.vertex_count();
  std::vector<Color> color(static_cast<size_t>(n), kWhite);
  std::vector<int> white_degree(static_cast<size_t>(n), 0);

  int root = -1;
  int root_degree = -1;
  for (int v = 0; v < n; ++v) {
    if (g.excluded(v)) continue;
    int deg = 0;
    for (int u : g.all_neighbors(v)) {
      if (!g.excluded(u)) ++deg;
    }
    white_degree[static_cast<size_t>(v)] = deg;
    if (deg > root_degree) {
      root_degree = deg;
      root = v;
    }
  }

  std::vector<int> cds;
  int whites = g.active_count();

  auto blacken = [&](int v) {
    color[static_cast<size_t>(v)] = kBlack;
    cds.push_back(v);
    for (int u : g.all_neighbors(v)) {
      if (g.excluded(u) || color[static_cast<size_t>(u)] != kWhite) continue;
      color[static_cast<size_t>(u)] = kGray;
      --whites;
      for (int w : g.all_neighbors(u)) {
        if (!g.excluded(w)) --white_degree[static_cast<size_t>(w)];
      }
    }
  };

  color[static_cast<size_t>(root)] = kGray;
  --whites;
  for (int w : g.all_neighbors(root)) {
    if (!g.excluded(w)) --white_degree[static_cast<size_t>(w)];
  }
  blacken(root);

  while (whites > 0) {
    int pick = -1;
    int pick_gain = -1;
    for (int v = 0; v < n; ++v) {
      if (g.excluded(v) || color[static_cast<size_t>(v)] != kGray) continue;
      if (white_degree[static_cast<size_t>(v)] > pick_gain) {
        pick_gain = white_degree[static_cast<size_t>(v)];
        pick = v;
      }
    }
    if (pick < 0 || pick_gain <= 0) {
      throw std::logic_error(
          "dominating-set growth stalled on a connected graph");
    }
    blacken(pick);
  }
  std::sort(cds.begin(), cds.end());
  return cds;
}

NonSimplePath spanning_tree_euler_path(const Graph& g,
                                       const std::vector<int>& cds) {
  if (cds.empty()) {
    throw std::invalid_argument("dominating set must be non-empty");
  }
  if (cds.size() == 1) return {cds.front()};

  std::vector<char> member(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : cds) {
    if (g.excluded(v)) {
      throw std::invalid_argument("dominating set contains excluded vertex");
    }
    member[static_cast<size_t>(v)] = 1;
  }

  // Rooting the tree at an endpoint of (approximately) the induced
  // subgraph's diameter and descending into the deepest subtree last makes
  // the prunable suffix as long as possible.
  const int root = bfs_farthest(g, member, cds.front());

  std::vector<int> parent(static_cast<size_t>(g.vertex_count()), -2);
  std::vector<std::vector<int>> children(
      static_cast<size_t>(g.vertex_count()));
  std::vector<int> order;
  parent[static_cast<size_t>(root)] = -1;
  std::vector<int> stack{root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    // Push descending so children are discovered in ascending order.
    const auto& nbrs = g.all_neighbors(v);
    for (auto it = nbrs.rbegin(); it != nbrs.rend(); ++it) {
      const int u = *it;
      if (g.excluded(u) || !member[static_cast<size_t>(u)]) continue;
      if (parent[static_cast<size_t>(u)] != -2) continue;
      parent[static_cast<size_t>(u)] = v;
      children[static_cast<size_t>(v)].push_back(u);
      stack.push_back(u);
    }
  }
  if (order.size() != cds.size()) {
    throw std::invalid_argument("dominating set does not induce a connected "
                                "subgraph");
  }

  std::vector<int> height(static_cast<size_t>(g.vertex_count()), 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    for (int c : children[static_cast<size_t>(*it)]) {
      height[static_cast<size_t>(*it)] = std::max(
          height[static_cast<size_t>(*it)], height[static_cast<size_t>(c)] + 1);
    }
  }
  for (auto& kids : children) {
    std::stable_sort(kids.begin(), kids.end(), [&](int a, int b) {
      return height[static_cast<size_t>(a)] < height[static_cast<size_t>(b)];
    });
  }

  NonSimplePath tour;
  size_t last_discovery = 0;
  auto walk = [&](auto&& self, int v) -> void {
    tour.push_back(v);
    last_discovery = tour.size();
    for (int c : children[static_cast<size_t>(v)]) {
      self(self, c);
      tour.push_back(v);
    }
  };
  walk(walk, root);
  tour.resize(last_discovery);
  return tour;
}

CoveringSolution approx_cp(const Graph& g) {
  const std::vector<int> cds = connected_dominating_set(g);
  return make_solution(g, spanning_tree_euler_path(g, cds));
}

}  // namespace qftsynth
