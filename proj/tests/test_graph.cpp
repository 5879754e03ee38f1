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

#include <random>
#include <stdexcept>

#include "qftsynth/graph.hpp"
#include "test_util.hpp"

using namespace qftsynth;

TEST_CASE("edge-list loader accepts a chain") {
  const Graph g = Graph::parse_edge_list("3 2\n1 2\n2 3\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(0, 1));
  CHECK(g.has_edge(1, 2));
  CHECK_FALSE(g.has_edge(0, 2));
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
}

TEST_CASE("edge-list loader rejects bad input") {
  CHECK_THROWS_AS(Graph::parse_edge_list("2 1\n1 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse_edge_list("4 2\n1 2\n3 4\n"),
                  std::invalid_argument);  // disconnected
  CHECK_THROWS_AS(Graph::parse_edge_list("2 2\n1 2\n2 1\n"),
                  std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(Graph::parse_edge_list("2 1\n1 3\n"),
                  std::invalid_argument);  // out of range
  CHECK_THROWS_AS(Graph::parse_edge_list("2 1\nfoo bar\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(Graph::parse_edge_list("3 2\n1 2\n"),
                  std::invalid_argument);  // missing edge
  CHECK_THROWS_AS(Graph::parse_edge_list(""), std::invalid_argument);
}

TEST_CASE("loader tolerates comments and blank lines") {
  const Graph g =
      Graph::parse_edge_list("# a chain\n\n3 2\n1 2\n# middle\n2 3\n\n");
  CHECK(g.vertex_count() == 3);
}

TEST_CASE("shortest paths on the spec examples") {
  const Graph chain3 = testutil::chain(3);
  const auto dm = shortest_paths(chain3);
  CHECK(dm.dist(0, 2) == 2);
  CHECK(dm.pred(0, 2) == 1);

  const Graph triangle = testutil::complete(3);
  const auto dt = shortest_paths(triangle);
  for (int u = 0; u < 3; ++u) {
    for (int v = 0; v < 3; ++v) {
      CHECK(dt.dist(u, v) == (u == v ? 0 : 1));
    }
  }

  const Graph star4 = testutil::star(4);
  const auto ds = shortest_paths(star4);
  CHECK(ds.dist(1, 3) == 2);
  CHECK(ds.pred(1, 3) == 0);
}

TEST_CASE("shortest paths match Floyd-Warshall exhaustively for n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    testutil::for_each_connected_graph(n, [&](const Graph& g) {
      const auto dm = shortest_paths(g);
      const auto fw = testutil::floyd_warshall(g);
      for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
          REQUIRE(dm.dist(u, v) == fw[u][v]);
        }
      }
    });
  }
}

TEST_CASE("shortest paths match Floyd-Warshall on random graphs up to 64") {
  std::mt19937 rng(20260810);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 8 + static_cast<int>(rng() % 57);
    Graph g = testutil::random_connected_graph(rng, n, n / 2);
    const auto dm = shortest_paths(g);
    const auto fw = testutil::floyd_warshall(g);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        REQUIRE(dm.dist(u, v) == fw[u][v]);
      }
    }
  }
}

TEST_CASE("path reconstruction follows the predecessor matrix") {
  const Graph chain3 = testutil::chain(3);
  const auto dm = shortest_paths(chain3);
  CHECK(get_shortest_path(dm, 0, 2) == std::vector<int>{1, 2});
  CHECK(get_shortest_path(dm, 1, 1).empty());

  const Graph star4 = testutil::star(4);
  const auto ds = shortest_paths(star4);
  CHECK(get_shortest_path(ds, 1, 3) == std::vector<int>{0, 3});
}

TEST_CASE("reconstructed paths are shortest simple paths") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 10);
    Graph g = testutil::random_connected_graph(rng, n, n);
    const auto dm = shortest_paths(g);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v) continue;
        const auto path = get_shortest_path(dm, u, v);
        REQUIRE(static_cast<int>(path.size()) == dm.dist(u, v));
        int prev = u;
        std::vector<char> seen(static_cast<size_t>(n), 0);
        seen[static_cast<size_t>(u)] = 1;
        for (int w : path) {
          REQUIRE(g.has_edge(prev, w));
          REQUIRE_FALSE(seen[static_cast<size_t>(w)]);
          seen[static_cast<size_t>(w)] = 1;
          prev = w;
        }
        REQUIRE(prev == v);
      }
    }
  }
}

TEST_CASE("exclusion masks adjacency and recomputation works") {
  Graph g = testutil::chain(3);
  g.exclude(2);
  CHECK(g.neighbors(1) == std::vector<int>{0});
  CHECK(g.active_count() == 2);
  CHECK_THROWS_AS(g.exclude(2), std::invalid_argument);

  const auto dm = shortest_paths(g);
  CHECK(dm.dist(0, 1) == 1);
  CHECK(dm.dist(0, 2) == DistanceMatrix::kUnreachable);

  g.restore_all();
  CHECK(g.neighbors(1) == std::vector<int>{0, 2});
}

TEST_CASE("exclusion respects the induced-subgraph BFS oracle") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 6);
    Graph g = testutil::random_connected_graph(rng, n, n);
    // exclude a random non-cut vertex if possible
    for (int attempt = 0; attempt < n; ++attempt) {
      const int v = static_cast<int>(rng() % n);
      if (g.excluded(v)) continue;
      g.exclude(v);
      if (g.connected_on_active()) break;
      g.restore_all();
    }
    const auto dm = shortest_paths(g);
    const auto fw = testutil::floyd_warshall(g);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        REQUIRE(dm.dist(u, v) == fw[u][v]);
      }
    }
    g.restore_all();
    const auto dm2 = shortest_paths(g);
    const auto fw2 = testutil::floyd_warshall(g);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        REQUIRE(dm2.dist(u, v) == fw2[u][v]);
      }
    }
  }
}
