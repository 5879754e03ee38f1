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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qftsynth/covering_path.hpp"
#include "qftsynth/covering_path_approx.hpp"
#include "qftsynth/graph.hpp"
#include "test_util.hpp"

using namespace qftsynth;

namespace {

bool dominates(const Graph& g, const std::vector<int>& s) {
  std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : s) in[static_cast<size_t>(v)] = 1;
  for (int v : g.active_vertices()) {
    if (in[static_cast<size_t>(v)]) continue;
    bool ok = false;
    for (int u : g.neighbors(v)) {
      if (in[static_cast<size_t>(u)]) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

bool induces_connected(const Graph& g, const std::vector<int>& s) {
  if (s.empty()) return false;
  std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : s) in[static_cast<size_t>(v)] = 1;
  std::vector<int> stack{s.front()};
  std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
  seen[static_cast<size_t>(s.front())] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : g.neighbors(v)) {
      if (!in[static_cast<size_t>(u)] || seen[static_cast<size_t>(u)]) {
        continue;
      }
      seen[static_cast<size_t>(u)] = 1;
      ++reached;
      stack.push_back(u);
    }
  }
  return reached == s.size();
}

int max_active_degree(const Graph& g) {
  int best = 0;
  for (int v : g.active_vertices()) {
    best = std::max(best, static_cast<int>(g.neighbors(v).size()));
  }
  return best;
}

}  // namespace

TEST_CASE("greedy dominating set on the worked examples") {
  CHECK(connected_dominating_set(testutil::star(4)) == std::vector<int>{0});
  CHECK(connected_dominating_set(testutil::complete(3)) ==
        std::vector<int>{0});
  CHECK(connected_dominating_set(testutil::chain(5)) ==
        std::vector<int>{1, 2, 3});
}

TEST_CASE("greedy dominating set is always valid and within ratio") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g = testutil::random_connected_graph(rng, n, n / 2);
    const auto s = connected_dominating_set(g);
    REQUIRE(dominates(g, s));
    REQUIRE(induces_connected(g, s));
    REQUIRE(static_cast<int>(s.size()) <= n);
    const int optimum = testutil::min_cds_size(g);
    const double ratio = std::log(std::max(2, max_active_degree(g))) + 3.0;
    REQUIRE(static_cast<double>(s.size()) <= ratio * optimum + 1e-9);
  }
}

TEST_CASE("tree tour visits the dominating set within the length bound") {
  const Graph chain5 = testutil::chain(5);
  const auto tour = spanning_tree_euler_path(chain5, {1, 2, 3});
  CHECK(tour.size() == 3);
  CHECK(testutil::is_covering_walk(chain5, tour));

  const Graph single(1, {});
  CHECK(spanning_tree_euler_path(single, {0}) == NonSimplePath{0});

  const Graph ring5 = testutil::cycle(5);
  const auto all = std::vector<int>{0, 1, 2, 3, 4};
  const auto walk = spanning_tree_euler_path(ring5, all);
  CHECK(static_cast<int>(walk.size()) - 1 <= 2 * 5 - 2);
  std::vector<char> seen(5, 0);
  for (int v : walk) seen[static_cast<size_t>(v)] = 1;
  for (int v = 0; v < 5; ++v) CHECK(seen[static_cast<size_t>(v)]);
}

TEST_CASE("tree tour rejects a disconnected set") {
  const Graph chain4 = testutil::chain(4);
  CHECK_THROWS_AS(spanning_tree_euler_path(chain4, {0, 3}),
                  std::invalid_argument);
}

TEST_CASE("tour stays inside the set and respects edges") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 8);
    Graph g = testutil::random_connected_graph(rng, n, n / 2);
    const auto s = connected_dominating_set(g);
    const auto tour = spanning_tree_euler_path(g, s);
    REQUIRE(static_cast<int>(tour.size()) - 1 <=
            std::max(0, 2 * static_cast<int>(s.size()) - 2));
    std::vector<char> member(static_cast<size_t>(n), 0);
    for (int v : s) member[static_cast<size_t>(v)] = 1;
    std::vector<char> hit(static_cast<size_t>(n), 0);
    for (size_t i = 0; i < tour.size(); ++i) {
      REQUIRE(member[static_cast<size_t>(tour[i])]);
      hit[static_cast<size_t>(tour[i])] = 1;
      if (i + 1 < tour.size()) REQUIRE(g.has_edge(tour[i], tour[i + 1]));
    }
    for (int v : s) REQUIRE(hit[static_cast<size_t>(v)]);
  }
}

TEST_CASE("approximate solver agrees with exact on the easy shapes") {
  const auto star = approx_cp(testutil::star(4));
  CHECK(star.path == NonSimplePath{0});
  CHECK(star.objective == 6);

  const auto tri = approx_cp(testutil::complete(3));
  CHECK(tri.path == NonSimplePath{0});
  CHECK(tri.objective == 4);
}

TEST_CASE("approximate solver is valid and within the stated factor") {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g = testutil::random_connected_graph(rng, n, n / 2);
    const auto approx = approx_cp(g);
    REQUIRE(testutil::is_covering_walk(g, approx.path));
    REQUIRE(static_cast<int>(approx.path.size()) - 1 <=
            std::max(0, 2 * n - 3));
    const auto exact = three_two_one_cp(g);
    const double factor =
        2.0 * (std::log(std::max(2, max_active_degree(g))) + 3.0);
    REQUIRE(approx.objective >= exact.objective);
    REQUIRE(approx.objective <= factor * exact.objective + 1e-9);
  }
}

TEST_CASE("approximate solver is fast on a large sparse graph") {
  std::mt19937 rng(20260810);
  Graph g = testutil::random_connected_graph(rng, 1000, 2000);
  const auto sol = approx_cp(g);
  CHECK(testutil::is_covering_walk(g, sol.path));
}
