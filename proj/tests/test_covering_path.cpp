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

#include <bit>
#include <random>

#include "qftsynth/covering_path.hpp"
#include "qftsynth/graph.hpp"
#include "test_util.hpp"

using namespace qftsynth;

TEST_CASE("singleton walks have length zero") {
  for (const Graph& g : {testutil::chain(4), testutil::star(5),
                         testutil::complete(3)}) {
    const auto dm = shortest_paths(g);
    const auto table = compute_d(g, dm);
    for (int i = 0; i < table.active_count(); ++i) {
      CHECK(table.length(uint32_t{1} << i, i) == 0);
      CHECK(table.pred_of(uint32_t{1} << i, i) == -1);
    }
  }
}

TEST_CASE("subset walk lengths on small graphs") {
  const Graph chain3 = testutil::chain(3);
  const auto dm = shortest_paths(chain3);
  const auto table = compute_d(chain3, dm);
  // visit {v0, v2} ending at v2 -> v0 v1 v2
  CHECK(table.length(0b101, 2) == 2);

  const Graph triangle = testutil::complete(3);
  const auto dmt = shortest_paths(triangle);
  const auto tt = compute_d(triangle, dmt);
  CHECK(tt.length(0b111, 2) == 2);
}

TEST_CASE("subset recurrence holds for every filled entry") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    Graph g = testutil::random_connected_graph(rng, n, n / 2);
    const auto dm = shortest_paths(g);
    const auto table = compute_d(g, dm);
    const auto& verts = table.vertices();
    const int na = table.active_count();
    for (uint32_t mask = 1; mask < (uint32_t{1} << na); ++mask) {
      if (std::popcount(mask) < 2) continue;
      for (int v = 0; v < na; ++v) {
        if (!(mask & (uint32_t{1} << v))) continue;
        int best = -1;
        const uint32_t rest = mask ^ (uint32_t{1} << v);
        for (int u = 0; u < na; ++u) {
          if (!(rest & (uint32_t{1} << u))) continue;
          const int sub = table.length(rest, u);
          if (sub < 0) continue;
          const int cand = sub + dm.dist(verts[static_cast<size_t>(u)],
                                         verts[static_cast<size_t>(v)]);
          if (best < 0 || cand < best) best = cand;
        }
        REQUIRE(table.length(mask, v) == best);
      }
    }
  }
}

TEST_CASE("coverage bits match the definition") {
  const Graph star4 = testutil::star(4);
  const auto cs = compute_c(star4);
  CHECK(cs[0b0001] == 1);  // the center dominates the leaves

  const Graph chain4 = testutil::chain(4);
  const auto cc = compute_c(chain4);
  CHECK(cc[0b0010] == 0);  // {v1} leaves v3 uncovered
  CHECK(cc[0b0110] == 1);  // {v1, v2}

  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 4);
    Graph g = testutil::random_connected_graph(rng, n, n / 2);
    const auto bits = compute_c(g);
    for (uint32_t mask = 0; mask < (uint32_t{1} << n); ++mask) {
      bool all = true;
      for (int v = 0; v < n && all; ++v) {
        if (mask & (uint32_t{1} << v)) continue;
        bool dominated = false;
        for (int u : g.all_neighbors(v)) {
          if (mask & (uint32_t{1} << u)) {
            dominated = true;
            break;
          }
        }
        all = dominated;
      }
      REQUIRE(static_cast<bool>(bits[mask]) == all);
    }
  }
}

TEST_CASE("walk reconstruction matches the table") {
  const Graph chain3 = testutil::chain(3);
  const auto dm = shortest_paths(chain3);
  const auto table = compute_d(chain3, dm);
  CHECK(get_ns_path(table, dm, 0b010, 1) == NonSimplePath{1});
  CHECK(get_ns_path(table, dm, 0b101, 2) == NonSimplePath{0, 1, 2});

  const Graph star4 = testutil::star(4);
  const auto dms = shortest_paths(star4);
  const auto ts = compute_d(star4, dms);
  CHECK(get_ns_path(ts, dms, 0b0110, 2) == NonSimplePath{1, 0, 2});
}

TEST_CASE("exact solver matches the worked examples") {
  const Graph triangle = testutil::complete(3);
  const auto st = three_two_one_cp(triangle);
  CHECK(st.path == NonSimplePath{0});
  CHECK(st.objective == 4);

  const Graph star4 = testutil::star(4);
  const auto ss = three_two_one_cp(star4);
  CHECK(ss.path == NonSimplePath{0});
  CHECK(ss.objective == 6);

  const Graph chain4 = testutil::chain(4);
  const auto sc = three_two_one_cp(chain4);
  CHECK(sc.objective == 7);
  CHECK(sc.visited == std::vector<int>{1, 2});
}

TEST_CASE("brute force handles the degenerate graphs") {
  const Graph single(1, {});
  const auto s1 = brute_force_cp(single);
  CHECK(s1.path == NonSimplePath{0});
  CHECK(s1.objective == 0);

  const Graph edge(2, {{0, 1}});
  const auto s2 = brute_force_cp(edge);
  CHECK(s2.path == NonSimplePath{0});
  CHECK(s2.objective == 2);

  const auto e1 = three_two_one_cp(single);
  CHECK(e1.objective == 0);
  const auto e2 = three_two_one_cp(edge);
  CHECK(e2.objective == 2);
}

TEST_CASE("exact solver equals brute force exhaustively for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    testutil::for_each_connected_graph(n, [&](const Graph& g) {
      const auto exact = three_two_one_cp(g);
      const auto brute = brute_force_cp(g);
      REQUIRE(exact.objective == brute.objective);
      REQUIRE(testutil::is_covering_walk(g, exact.path));
    });
  }
}

TEST_CASE("exact solver equals brute force on random graphs n <= 8") {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g = testutil::random_connected_graph(rng, n, n / 2);
    const auto exact = three_two_one_cp(g);
    const auto brute = brute_force_cp(g);
    REQUIRE(exact.objective == brute.objective);
  }
}

TEST_CASE("solution paths respect the length bound") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Graph g = testutil::random_connected_graph(rng, n, n / 2);
    const auto sol = three_two_one_cp(g);
    REQUIRE(static_cast<int>(sol.path.size()) - 1 <= 2 * n - 3);
    // A covering walk within the bound always exists.
    const auto witness = testutil::leaf_skipping_tour(g);
    REQUIRE(testutil::is_covering_walk(g, witness));
    REQUIRE(static_cast<int>(witness.size()) - 1 <= std::max(0, 2 * n - 3));
  }
}

TEST_CASE("objective recomputes from the returned path") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    Graph g = testutil::random_connected_graph(rng, n, n / 3);
    const auto sol = three_two_one_cp(g);
    REQUIRE(sol.objective ==
            3 * (static_cast<int>(sol.path.size()) - 1) +
                2 * static_cast<int>(sol.boundary.size()));
    REQUIRE(sol.visited.size() + sol.boundary.size() ==
            static_cast<size_t>(n));
  }
}

TEST_CASE("cap violations raise the dedicated error") {
  const Graph g = testutil::chain(6);
  CHECK_THROWS_AS(three_two_one_cp(g, 5), CapExceededError);
  CHECK_THROWS_AS(compute_d(g, shortest_paths(g), 5), CapExceededError);
  CHECK_THROWS_AS(brute_force_cp(g, 5), CapExceededError);
  CHECK_NOTHROW(three_two_one_cp(g, 6));
}

TEST_CASE("solver works on the induced subgraph after exclusions") {
  Graph g = testutil::chain(5);
  g.exclude(4);
  const auto sol = three_two_one_cp(g);
  CHECK(sol.visited == std::vector<int>{1, 2});
  CHECK(sol.objective == 7);
}
