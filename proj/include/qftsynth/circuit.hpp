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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qftsynth/graph.hpp"

namespace qftsynth {

enum class GateKind { kH, kX, kRz, kCnot, kCrd, kSwap, kBarrier };

/**
 * One gate over physical vertices (0-indexed wires). Two-qubit gates store
 * (q0, q1) = (control, target); for SWAP the order is cosmetic. CRd is the
 * controlled phase gate with phase pi / 2^(d-1).
 */
struct Gate {
  GateKind kind = GateKind::kBarrier;
  int q0 = -1;
  int q1 = -1;
  double angle = 0.0;  // Rz only
  int degree = 0;      // CRd only, d >= 1

  static Gate h(int q) { return {GateKind::kH, q, -1, 0.0, 0}; }
  static Gate x(int q) { return {GateKind::kX, q, -1, 0.0, 0}; }
  static Gate rz(int q, double theta) {
    return {GateKind::kRz, q, -1, theta, 0};
  }
  static Gate cnot(int control, int target) {
    return {GateKind::kCnot, control, target, 0.0, 0};
  }
  static Gate crd(int control, int target, int d) {
    return {GateKind::kCrd, control, target, 0.0, d};
  }
  static Gate swap(int a, int b) { return {GateKind::kSwap, a, b, 0.0, 0}; }
  static Gate barrier() { return {GateKind::kBarrier, -1, -1, 0.0, 0}; }

  bool is_two_qubit() const {
    return kind == GateKind::kCnot || kind == GateKind::kCrd ||
           kind == GateKind::kSwap;
  }
};

/// Gate-index interval [begin, end) belonging to one cascade (1-based r).
struct CascadeRange {
  int cascade = 0;
  size_t begin = 0;
  size_t end = 0;
};

/**
 * Ordered gate list over physical vertices. When a connectivity graph is
 * attached, appending a two-qubit gate on a non-edge throws. Layout maps
 * (logical qubit -> vertex, 0-indexed) and cascade ranges ride along as
 * metadata and survive lowering.
 */
class Circuit {
 public:
  explicit Circuit(int qubit_count);

  int qubit_count() const { return n_; }
  size_t size() const { return gates_.size(); }
  const std::vector<Gate>& gates() const { return gates_; }
  const Gate& gate(size_t i) const { return gates_[i]; }

  /// Copies the graph for edge-legality checks on subsequent appends.
  void attach_graph(const Graph& g);
  const std::optional<Graph>& attached_graph() const { return graph_; }

  void append(const Gate& g);

  std::vector<int> initial_layout;  // logical -> vertex; empty if unset
  std::vector<int> final_layout;
  std::vector<CascadeRange> cascades;

 private:
  int n_;
  std::vector<Gate> gates_;
  std::optional<Graph> graph_;
};

/**
 * Rewrites CRd and SWAP into the {H, Rz, CNOT} basis. A CRd immediately
 * followed by a SWAP on the same vertex pair (within one cascade range)
 * becomes a single 3-CNOT block; a bare CRd costs 2 CNOTs and a bare SWAP 3.
 * X becomes H Rz(pi) H. The unitary is preserved up to global phase.
 * Lowering an already-lowered circuit is the identity.
 */
Circuit lower(const Circuit& c, bool fuse_crd_swap = true);

/// Number of CNOT gates after lowering.
int cnot_cost(const Circuit& c);

/// Predicted CNOT count K + n^2 - n - 1 for per-cascade travel lengths
/// (len(P_1), ..., len(P_{n-1})).
long long predicted_cost(const std::vector<int>& path_lengths, int n);

/// OpenQASM 2.0 text for a lowered circuit (H/Rz/CNOT/Barrier only);
/// deterministic formatting, layouts emitted as header comments, vertex i
/// maps to wire q[i]. Throws std::invalid_argument on non-lowered gates.
std::string emit_qasm(const Circuit& c);

/// Per-cascade cost line: 1-based cascade number, charged travel length
/// (covering-path steps plus the exit hop) and lowered CNOT count.
struct CascadeCost {
  int cascade = 0;
  int length = 0;
  int cnots = 0;
};

struct CostReport {
  int n = 0;
  long long k_total = 0;    // sum of per-cascade travel lengths
  long long predicted = 0;  // k_total + n^2 - n - 1
  long long actual = 0;     // lowered CNOT count
  std::vector<CascadeCost> per_cascade;
};

/// Versioned JSON rendering of a report plus the circuit's layout maps
/// (1-indexed vertices, matching all other textual output).
std::string cost_report_json(const CostReport& report,
                             const std::vector<int>& initial_layout,
                             const std::vector<int>& final_layout,
                             const std::string& method);

}  // namespace qftsynth
