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

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "qftsynth/graph.hpp"

namespace qftsynth {

/// Walk in the graph: consecutive vertices are adjacent, duplicates allowed.
/// Its length is the number of edges, i.e. size() - 1.
using NonSimplePath = std::vector<int>;

/// Default limit on the number of active vertices the exact solver accepts
/// before the caller should fall back to the approximate one (the subset
/// tables grow as n * 2^n).
inline constexpr int kDefaultExactCap = 24;

/// Hard upper limit on the subset-table width; beyond this the tables do not
/// fit in memory on any reasonable machine.
inline constexpr int kMaxExactCap = 28;

/// Raised when a solve would exceed the configured active-vertex cap.
class CapExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * A walk whose visited vertices plus their one-edge neighborhood cover every
 * active vertex. `boundary` holds the vertices covered only by adjacency;
 * the objective is 3 * len(path) + 2 * |boundary|.
 */
struct CoveringSolution {
  NonSimplePath path;
  std::vector<int> visited;   // distinct path vertices, ascending
  std::vector<int> boundary;  // covered but not visited, ascending
  int objective = 0;
};

/**
 * Subset dynamic-programming table over the active vertices. Active vertices
 * are compacted to bit positions 0..k-1 in ascending vertex order; a subset
 * is the corresponding bitmask. length(S, i) is the shortest walk visiting
 * all vertices of S and ending at member i; pred_of(S, i) is the member of
 * S \ {i} preceding i on such a walk (-1 for singletons).
 */
class SubsetTable {
 public:
  static constexpr uint8_t kNone = 0xff;

  SubsetTable(std::vector<int> verts, std::vector<uint8_t> length,
              std::vector<uint8_t> pred);

  int active_count() const { return static_cast<int>(verts_.size()); }

  /// Compact index -> vertex id, ascending.
  const std::vector<int>& vertices() const { return verts_; }

  /// Vertex id -> compact index (-1 if the vertex is not active).
  int index_of(int vertex) const;

  /// Walk length, or -1 if no walk exists.
  int length(uint32_t subset, int index) const;

  /// Compact index of the predecessor, or -1.
  int pred_of(uint32_t subset, int index) const;

 private:
  std::vector<int> verts_;
  std::vector<int> inverse_;
  std::vector<uint8_t> length_;
  std::vector<uint8_t> pred_;
};

/// Fills the subset table for every (S, v) pair over the active vertices,
/// sweeping subsets in increasing numeric order (supersets always come
/// later). Throws CapExceededError when active_count > cap.
SubsetTable compute_d(const Graph& g, const DistanceMatrix& dm,
                      int cap = kDefaultExactCap);

/// covered[S] == 1 iff S together with its one-edge neighborhood equals the
/// active vertex set. Indexed by compact bitmask as in SubsetTable.
std::vector<char> compute_c(const Graph& g, int cap = kDefaultExactCap);

/// Reconstructs the walk behind table.length(S, v): visits all of S, ends at
/// v, and has exactly that length. `v` is a vertex id. Throws
/// std::invalid_argument when no walk exists.
NonSimplePath get_ns_path(const SubsetTable& table, const DistanceMatrix& dm,
                          uint32_t subset, int v);

/// Exact solver: minimizes 3 * len + 2 * |boundary| over all covering walks
/// of the active subgraph. Ties are broken toward larger visited sets, then
/// the numerically smallest subset mask, then the smallest end vertex.
/// Requires the active subgraph to be connected.
CoveringSolution three_two_one_cp(const Graph& g, int cap = kDefaultExactCap);

/// Exhaustive reference solver for cross-checking; enumerates every walk up
/// to the 2n-3 length bound with branch-and-bound pruning. Accepts at most
/// `cap` active vertices (default 8).
CoveringSolution brute_force_cp(const Graph& g, int cap = 8);

}  // namespace qftsynth
