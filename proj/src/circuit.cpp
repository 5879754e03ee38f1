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

#include "qftsynth/circuit.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qftsynth {

namespace {

double crd_phase(int d) {
  if (d < 1 || d > 62) {
    throw std::invalid_argument("controlled-phase degree out of range");
  }
  return std::numbers::pi / static_cast<double>(int64_t{1} << (d - 1));
}

// pi / 2^k angles get an exact symbolic spelling so golden files stay
// readable; everything else is printed with full precision.
std::string format_angle(double a) {
  if (a == 0.0) return "0";
  const double mag = std::abs(a);
  for (int k = 0; k <= 40; ++k) {
    const double ref = std::numbers::pi / static_cast<double>(int64_t{1} << k);
    if (std::abs(mag - ref) <= 1e-12 * ref) {
      std::string s = a < 0 ? "-pi" : "pi";
      if (k > 0) s += "/" + std::to_string(int64_t{1} << k);
      return s;
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", a);
  return buf;
}

}  // namespace

Circuit::Circuit(int qubit_count) : n_(qubit_count) {
  if (qubit_count <= 0) {
    throw std::invalid_argument("circuit must have at least one qubit");
  }
}

void Circuit::attach_graph(const Graph& g) {
  if (g.vertex_count() != n_) {
    throw std::invalid_argument("graph size does not match qubit count");
  }
  graph_ = g;
}

void Circuit::append(const Gate& g) {
  auto check_wire = [&](int q) {
    if (q < 0 || q >= n_) {
      throw std::invalid_argument("gate wire out of range");
    }
  };
  switch (g.kind) {
    case GateKind::kBarrier:
      break;
    case GateKind::kH:
    case GateKind::kX:
    case GateKind::kRz:
      check_wire(g.q0);
      break;
    case GateKind::kCnot:
    case GateKind::kCrd:
    case GateKind::kSwap:
      check_wire(g.q0);
      check_wire(g.q1);
      if (g.q0 == g.q1) {
        throw std::invalid_argument("two-qubit gate needs distinct wires");
      }
      if (g.kind == GateKind::kCrd) crd_phase(g.degree);  // validates d
      if (graph_ && !graph_->has_edge(g.q0, g.q1)) {
        throw std::invalid_argument(
            "two-qubit gate on non-adjacent vertices " +
            std::to_string(g.q0 + 1) + "," + std::to_string(g.q1 + 1));
      }
      break;
  }
  gates_.push_back(g);
}

Circuit lower(const Circuit& c, bool fuse_crd_swap) {
  Circuit out(c.qubit_count());
  if (c.attached_graph()) out.attach_graph(*c.attached_graph());
  out.initial_layout = c.initial_layout;
  out.final_layout = c.final_layout;

  // Cascade boundaries are translated as the gate stream is rewritten.
  const auto& ranges = c.cascades;
  size_t range_idx = 0;
  out.cascades = ranges;

  auto same_range = [&](size_t i, size_t j) {
    if (ranges.empty()) return true;
    for (const auto& r : ranges) {
      if (i >= r.begin && i < r.end) return j >= r.begin && j < r.end;
    }
    return false;
  };

  const auto& gates = c.gates();
  for (size_t i = 0; i < gates.size(); ++i) {
    while (range_idx < out.cascades.size() &&
           ranges[range_idx].begin == i) {
      out.cascades[range_idx].begin = out.size();
      ++range_idx;
    }
    const Gate& g = gates[i];
    switch (g.kind) {
      case GateKind::kH:
      case GateKind::kRz:
      case GateKind::kCnot:
      case GateKind::kBarrier:
        out.append(g);
        break;
      case GateKind::kX:
        out.append(Gate::h(g.q0));
        out.append(Gate::rz(g.q0, std::numbers::pi));
        out.append(Gate::h(g.q0));
        break;
      case GateKind::kSwap:
        out.append(Gate::cnot(g.q0, g.q1));
        out.append(Gate::cnot(g.q1, g.q0));
        out.append(Gate::cnot(g.q0, g.q1));
        break;
      case GateKind::kCrd: {
        const double phi = crd_phase(g.degree);
        const bool fuse =
            fuse_crd_swap && i + 1 < gates.size() &&
            gates[i + 1].kind == GateKind::kSwap &&
            ((gates[i + 1].q0 == g.q0 && gates[i + 1].q1 == g.q1) ||
             (gates[i + 1].q0 == g.q1 && gates[i + 1].q1 == g.q0)) &&
            same_range(i, i + 1);
        if (fuse) {
          out.append(Gate::cnot(g.q0, g.q1));
          out.append(Gate::rz(g.q0, -phi / 2));
          out.append(Gate::rz(g.q1, phi / 2));
          out.append(Gate::cnot(g.q1, g.q0));
          out.append(Gate::rz(g.q0, -phi / 2));
          out.append(Gate::cnot(g.q0, g.q1));
          ++i;  // the SWAP is absorbed
        } else {
          out.append(Gate::rz(g.q0, -phi / 2));
          out.append(Gate::cnot(g.q0, g.q1));
          out.append(Gate::rz(g.q1, phi / 2));
          out.append(Gate::cnot(g.q0, g.q1));
          out.append(Gate::rz(g.q1, -phi / 2));
        }
        break;
      }
    }
    for (size_t r = 0; r < ranges.size(); ++r) {
      if (ranges[r].end == i + 1) out.cascades[r].end = out.size();
    }
  }
  return out;
}

int cnot_cost(const Circuit& c) {
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::kX || g.kind == GateKind::kCrd ||
        g.kind == GateKind::kSwap) {
      return cnot_cost(lower(c));
    }
  }
  int count = 0;
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::kCnot) ++count;
  }
  return count;
}

long long predicted_cost(const std::vector<int>& path_lengths, int n) {
  long long k = 0;
  for (int len : path_lengths) k += len;
  return k + static_cast<long long>(n) * n - n - 1;
}

std::string emit_qasm(const Circuit& c) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  auto layout_comment = [&](const char* name, const std::vector<int>& map) {
    if (map.empty()) return;
    out << "// " << name << ":";
    for (size_t j = 0; j < map.size(); ++j) {
      out << " " << j + 1 << "->" << map[j] + 1;
    }
    out << "\n";
  };
  layout_comment("initial_layout", c.initial_layout);
  layout_comment("final_layout", c.final_layout);
  out << "qreg q[" << c.qubit_count() << "];\n";
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kH:
        out << "h q[" << g.q0 << "];\n";
        break;
      case GateKind::kRz:
        out << "rz(" << format_angle(g.angle) << ") q[" << g.q0 << "];\n";
        break;
      case GateKind::kCnot:
        out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      case GateKind::kBarrier:
        out << "barrier q;\n";
        break;
      default:
        throw std::invalid_argument(
            "emit_qasm requires a lowered circuit (H/Rz/CNOT only)");
    }
  }
  return out.str();
}

std::string cost_report_json(const CostReport& report,
                             const std::vector<int>& initial_layout,
                             const std::vector<int>& final_layout,
                             const std::string& method) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["n"] = report.n;
  j["method"] = method;
  j["K"] = report.k_total;
  j["predicted"] = report.predicted;
  j["actual"] = report.actual;
  j["per_cascade"] = nlohmann::ordered_json::array();
  for (const auto& cc : report.per_cascade) {
    j["per_cascade"].push_back(
        {{"r", cc.cascade}, {"len", cc.length}, {"cnots", cc.cnots}});
  }
  auto one_indexed = [](const std::vector<int>& v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (int x : v) out.push_back(x + 1);
    return out;
  };
  j["initial_layout"] = one_indexed(initial_layout);
  j["final_layout"] = one_indexed(final_layout);
  return j.dump(2) + "\n";
}

}  // namespace qftsynth
