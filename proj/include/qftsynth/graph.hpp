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

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qftsynth {

/**
 * Undirected, unweighted qubit-connectivity graph.
 *
 * Vertices are 0-indexed in the API; all textual I/O (edge-list files, CLI
 * output, QASM comments) is 1-indexed. Vertices can be marked excluded, in
 * which case queries that honor the mask only see the induced subgraph on
 * the remaining ("active") vertices. The edge set itself never changes.
 */
class Graph {
 public:
  /// Builds a graph from 0-indexed edges. Throws std::invalid_argument on
  /// self-loops, duplicate edges, out-of-range endpoints or an empty vertex
  /// set. Connectivity is NOT required here; use parse_edge_list for the
  /// validating loader.
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  /// Parses the "n m" / "u v" edge-list format (1-indexed vertices).
  /// Blank lines and lines starting with '#' are ignored. Rejects malformed
  /// input, self-loops, duplicates, out-of-range vertices and disconnected
  /// graphs.
  static Graph parse_edge_list(std::string_view text);

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }
  int active_count() const { return active_count_; }

  bool has_edge(int u, int v) const;
  bool excluded(int v) const { return excluded_[static_cast<size_t>(v)] != 0; }

  /// All neighbors of v in ascending order, ignoring the exclusion mask.
  const std::vector<int>& all_neighbors(int v) const {
    return adj_[static_cast<size_t>(v)];
  }

  /// Non-excluded neighbors of v in ascending order.
  std::vector<int> neighbors(int v) const;

  /// Non-excluded vertices in ascending order.
  std::vector<int> active_vertices() const;

  int degree(int v) const {
    return static_cast<int>(adj_[static_cast<size_t>(v)].size());
  }

  /// Marks v excluded. Throws std::invalid_argument if already excluded.
  void exclude(int v);

  /// Clears the exclusion mask.
  void restore_all();

  /// True iff the subgraph induced on non-excluded vertices is connected
  /// (an empty active set counts as disconnected).
  bool connected_on_active() const;

 private:
  int n_ = 0;
  int m_ = 0;
  int active_count_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<char> excluded_;
};

/**
 * All-pairs shortest-path table for the active subgraph: hop counts plus a
 * predecessor matrix for path reconstruction. pred(v, u) is the last vertex
 * before u on a shortest v->u path (-1 on the diagonal and for unreachable
 * or excluded pairs).
 */
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix(int n, std::vector<int> dist, std::vector<int> pred)
      : n_(n), dist_(std::move(dist)), pred_(std::move(pred)) {}

  int size() const { return n_; }

  int dist(int v, int u) const {
    return dist_[static_cast<size_t>(v) * static_cast<size_t>(n_) +
                 static_cast<size_t>(u)];
  }

  int pred(int v, int u) const {
    return pred_[static_cast<size_t>(v) * static_cast<size_t>(n_) +
                 static_cast<size_t>(u)];
  }

 private:
  int n_;
  std::vector<int> dist_;
  std::vector<int> pred_;
};

/// One breadth-first search per active vertex; excluded vertices neither
/// appear as sources nor as intermediate hops.
DistanceMatrix shortest_paths(const Graph& g);

/// Shortest v->u path reconstructed from the predecessor matrix, WITHOUT
/// the first vertex v. Returns an empty path for v == u. Throws
/// std::invalid_argument if u is unreachable from v.
std::vector<int> get_shortest_path(const DistanceMatrix& dm, int v, int u);

}  // namespace qftsynth
