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

#include <vector>

#include "qftsynth/covering_path.hpp"
#include "qftsynth/graph.hpp"

namespace qftsynth {

/**
 * Greedy connected dominating set of the active subgraph: grows from a
 * maximum-degree root, repeatedly scanning the dominated-but-unselected
 * vertex with the most undominated neighbors. All ties go to the lowest
 * vertex index. The result is returned in ascending order, induces a
 * connected subgraph, and dominates every active vertex.
 */
std::vector<int> connected_dominating_set(const Graph& g);

/**
 * Walk inside the subgraph induced on `cds` that visits every member at
 * least once, with length at most 2 * |cds| - 2. Built as the Euler tour of
 * a depth-first spanning tree, rooted so that the trailing return to the
 * root can be pruned as aggressively as possible (the walk stops at the last
 * newly discovered vertex). Throws std::invalid_argument when the induced
 * subgraph is not connected.
 */
NonSimplePath spanning_tree_euler_path(const Graph& g,
                                       const std::vector<int>& cds);

/// Approximate covering-path solver: connected dominating set first, then a
/// pruned spanning-tree tour of it. Always returns a valid covering solution
/// of the active subgraph.
CoveringSolution approx_cp(const Graph& g);

}  // namespace qftsynth
