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

#include "qftsynth/circuit.hpp"
#include "qftsynth/covering_path.hpp"
#include "qftsynth/graph.hpp"

namespace qftsynth {

enum class SolveMethod { kExact, kApprox, kAuto };

/**
 * Output of the placement pass: one covering path per cascade (the last two
 * are a single vertex and the empty path), the exit vertex each cascade
 * parks its target at, and the resulting vertex -> logical-qubit placement.
 */
struct CascadePlan {
  std::vector<NonSimplePath> paths;  // index r-1 holds cascade r's path
  std::vector<int> exits;            // cascade r -> exit vertex, -1 past n-2
  std::vector<int> placement;        // vertex -> logical qubit (0-based)
  bool used_approx = false;          // any cascade solved approximately
  bool approx_fallback = false;      // kAuto fell back past the exact cap
};

/**
 * Computes the qubit placement by simulating the cascade movements on the
 * covering paths: for each of the first n-2 cascades, solves the covering
 * path on the current active subgraph, records the placement at the path
 * head, replays the swaps, relocates the occupant of the exit vertex and
 * excludes that vertex. The two survivors take the two highest qubit
 * indices, the smaller vertex getting the lower one. The exclusion mask is
 * fully restored before returning. Requires n >= 2 and all vertices active.
 */
CascadePlan construct_s(Graph& g, SolveMethod method,
                        int exact_cap = kDefaultExactCap);

struct SynthesisResult {
  Circuit circuit;  // high-level form (H, CRd, SWAP) with layout metadata
  Circuit lowered;  // {H, Rz, CNOT} form
  CostReport report;
  CascadePlan plan;
};

/**
 * Full QFT synthesis: placement, per-cascade circuit generation with
 * hardware-legal gates only, lowering and cost accounting. The graph is
 * restored to fully-active on return.
 */
SynthesisResult synthesize_qft(Graph& g, SolveMethod method,
                               int exact_cap = kDefaultExactCap);

}  // namespace qftsynth
