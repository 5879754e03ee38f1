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

#include "qftsynth/synthesizer.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "qftsynth/covering_path_approx.hpp"

namespace qftsynth {

namespace {

struct RestoreOnExit {
  Graph& g;
  ~RestoreOnExit() { g.restore_all(); }
};

CoveringSolution solve_cascade(const Graph& g, SolveMethod method,
                               int exact_cap, CascadePlan& plan) {
  switch (method) {
    case SolveMethod::kExact:
      return three_two_one_cp(g, exact_cap);
    case SolveMethod::kApprox:
      plan.used_approx = true;
      return approx_cp(g);
    case SolveMethod::kAuto:
      if (g.active_count() <= std::min(exact_cap, kMaxExactCap)) {
        return three_two_one_cp(g, exact_cap);
      }
      plan.used_approx = true;
      plan.approx_fallback = true;
      return approx_cp(g);
  }
  throw std::logic_error("unknown solve method");
}

// Largest-index active neighbor of the path's last vertex, excluding the
// penultimate path vertex.
int pick_exit(const Graph& g, const NonSimplePath& path) {
  const int last = path.back();
  const int pen = path.size() >= 2 ? path[path.size() - 2] : -1;
  int exit_vertex = -1;
  for (int t : g.neighbors(last)) {
    if (t != pen) exit_vertex = t;
  }
  if (exit_vertex < 0) {
    throw std::logic_error("covering path ends without an admissible exit");
  }
  return exit_vertex;
}

/**
 * Emits cascade r0+1 (1-based r) for a non-empty path: Hadamard on the
 * target's vertex, controlled phases from every not-yet-used neighbor while
 * the target walks the path (ascending neighbor order puts the largest
 * index last, right before the swap that lands on it), and finally the hop
 * onto the exit vertex. `occupant` / `position` are the mutually inverse
 * vertex<->logical maps, updated through every swap. `used` is keyed by
 * logical qubit: a qubit keeps riding the displaced wave of swaps, so vertex
 * identity would not survive the walk.
 */
void emit_cascade(Circuit& c, const Graph& g, const NonSimplePath& path,
                  int r0, int exit_vertex, std::vector<int>& occupant,
                  std::vector<int>& position) {
  if (occupant[static_cast<size_t>(path.front())] != r0) {
    throw std::logic_error("target qubit is not at the path head");
  }
  const int k = static_cast<int>(path.size());
  c.append(Gate::h(path.front()));
  std::vector<char> used(static_cast<size_t>(c.qubit_count()), 0);

  auto swap_wires = [&](int a, int b) {
    c.append(Gate::swap(a, b));
    const int qa = occupant[static_cast<size_t>(a)];
    const int qb = occupant[static_cast<size_t>(b)];
    std::swap(occupant[static_cast<size_t>(a)],
              occupant[static_cast<size_t>(b)]);
    position[static_cast<size_t>(qa)] = b;
    position[static_cast<size_t>(qb)] = a;
  };

  for (int j = 0; j < k; ++j) {
    const int here = path[static_cast<size_t>(j)];
    const int next = j + 1 < k ? path[static_cast<size_t>(j + 1)] : -1;
    for (int t : g.neighbors(here)) {
      if (t == next) continue;
      const int q = occupant[static_cast<size_t>(t)];
      if (used[static_cast<size_t>(q)]) continue;
      c.append(Gate::crd(t, here, q - r0 + 1));
      used[static_cast<size_t>(q)] = 1;
    }
    if (j + 1 < k) {
      const int q = occupant[static_cast<size_t>(next)];
      if (!used[static_cast<size_t>(q)]) {
        c.append(Gate::crd(next, here, q - r0 + 1));
        used[static_cast<size_t>(q)] = 1;
      }
      swap_wires(here, next);
    } else if (exit_vertex >= 0) {
      swap_wires(here, exit_vertex);
    }
  }
}

}  // namespace

CascadePlan construct_s(Graph& g, SolveMethod method, int exact_cap) {
  const int n = g.vertex_count();
  if (n < 2) {
    throw std::invalid_argument("synthesis needs at least two qubits");
  }
  if (g.active_count() != n) {
    throw std::invalid_argument("graph must be fully active");
  }
  if (!g.connected_on_active()) {
    throw std::invalid_argument("graph must be connected");
  }

  RestoreOnExit restore{g};
  CascadePlan plan;
  plan.paths.resize(static_cast<size_t>(n));
  plan.exits.assign(static_cast<size_t>(n), -1);
  plan.placement.assign(static_cast<size_t>(n), -1);

  std::vector<int> origin(static_cast<size_t>(n));
  std::iota(origin.begin(), origin.end(), 0);

  for (int r = 1; r <= n - 2; ++r) {
    CoveringSolution sol = solve_cascade(g, method, exact_cap, plan);
    NonSimplePath& path = plan.paths[static_cast<size_t>(r - 1)];
    path = std::move(sol.path);

    plan.placement[static_cast<size_t>(
        origin[static_cast<size_t>(path.front())])] = r - 1;
    for (size_t j = 0; j + 1 < path.size(); ++j) {
      std::swap(origin[static_cast<size_t>(path[j])],
                origin[static_cast<size_t>(path[j + 1])]);
    }
    const int exit_vertex = pick_exit(g, path);
    origin[static_cast<size_t>(path.back())] =
        origin[static_cast<size_t>(exit_vertex)];
    plan.exits[static_cast<size_t>(r - 1)] = exit_vertex;
    g.exclude(exit_vertex);
    if (!g.connected_on_active()) {
      throw std::logic_error("excluding the exit vertex disconnected the "
                             "remaining graph");
    }
  }

  const std::vector<int> survivors = g.active_vertices();
  if (survivors.size() != 2 || !g.has_edge(survivors[0], survivors[1])) {
    throw std::logic_error("expected two adjacent surviving vertices");
  }
  plan.placement[static_cast<size_t>(
      origin[static_cast<size_t>(survivors[0])])] = n - 2;
  plan.placement[static_cast<size_t>(
      origin[static_cast<size_t>(survivors[1])])] = n - 1;
  plan.paths[static_cast<size_t>(n - 2)] = {survivors[0]};
  plan.paths[static_cast<size_t>(n - 1)] = {};
  return plan;
}

SynthesisResult synthesize_qft(Graph& g, SolveMethod method, int exact_cap) {
  CascadePlan plan = construct_s(g, method, exact_cap);
  const int n = g.vertex_count();

  std::vector<int> occupant = plan.placement;
  std::vector<int> position(static_cast<size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    position[static_cast<size_t>(occupant[static_cast<size_t>(v)])] = v;
  }

  Circuit circuit(n);
  circuit.attach_graph(g);
  circuit.initial_layout = position;

  RestoreOnExit restore{g};
  for (int r = 1; r <= n; ++r) {
    const size_t begin = circuit.size();
    if (r <= n - 2) {
      const int exit_vertex = plan.exits[static_cast<size_t>(r - 1)];
      emit_cascade(circuit, g, plan.paths[static_cast<size_t>(r - 1)], r - 1,
                   exit_vertex, occupant, position);
      g.exclude(exit_vertex);
    } else if (r == n - 1) {
      emit_cascade(circuit, g, plan.paths[static_cast<size_t>(r - 1)], r - 1,
                   -1, occupant, position);
    } else {
      circuit.append(Gate::h(position[static_cast<size_t>(n - 1)]));
    }
    circuit.cascades.push_back({r, begin, circuit.size()});
  }
  circuit.final_layout = position;

  Circuit lowered = lower(circuit);

  CostReport report;
  report.n = n;
  for (int r = 1; r <= n; ++r) {
    CascadeCost cc;
    cc.cascade = r;
    cc.length =
        static_cast<int>(plan.paths[static_cast<size_t>(r - 1)].size());
    const CascadeRange& range = lowered.cascades[static_cast<size_t>(r - 1)];
    for (size_t i = range.begin; i < range.end; ++i) {
      if (lowered.gate(i).kind == GateKind::kCnot) ++cc.cnots;
    }
    report.per_cascade.push_back(cc);
    if (r <= n - 1) report.k_total += cc.length;
    report.actual += cc.cnots;
  }
  report.predicted = report.k_total + static_cast<long long>(n) * n - n - 1;

  return {std::move(circuit), std::move(lowered), std::move(report),
          std::move(plan)};
}

}  // namespace qftsynth
