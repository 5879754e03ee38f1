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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qftsynth/covering_path.hpp"
#include "qftsynth/covering_path_approx.hpp"
#include "qftsynth/simulator.hpp"
#include "qftsynth/synthesizer.hpp"
#include "qftsynth/topologies.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitCapExceeded = 2;
constexpr int kExitVerifyFailed = 3;

struct RunConfig {
  std::string graph_source;
  std::string method = "auto";
  std::string out_prefix = "out";
  bool verify_after = false;
  int seed = 0;  // accepted for interface stability; all passes are
                 // deterministic
};

qftsynth::SolveMethod parse_method(const std::string& name) {
  if (name == "exact") return qftsynth::SolveMethod::kExact;
  if (name == "approx") return qftsynth::SolveMethod::kApprox;
  return qftsynth::SolveMethod::kAuto;
}

int exact_cap_from_env() {
  const char* raw = std::getenv("QFTR_MAX_EXACT");
  if (raw == nullptr) return qftsynth::kDefaultExactCap;
  try {
    const int cap = std::stoi(raw);
    if (cap < 1 || cap > qftsynth::kMaxExactCap) {
      throw std::invalid_argument("QFTR_MAX_EXACT must be in 1.." +
                                  std::to_string(qftsynth::kMaxExactCap));
    }
    return cap;
  } catch (const std::out_of_range&) {
    throw std::invalid_argument("QFTR_MAX_EXACT is not a valid integer");
  }
}

void warn_if_fallback(const qftsynth::CascadePlan& plan, int cap) {
  if (plan.approx_fallback) {
    std::cerr << "warning: active vertices exceeded the exact-solver cap of "
              << cap << "; approximate solver used for the large cascades\n";
  }
}

std::string used_method_label(const RunConfig& cfg,
                              const qftsynth::CascadePlan& plan) {
  if (cfg.method != "auto") return cfg.method;
  return plan.used_approx ? "auto(approx)" : "auto(exact)";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write file: " + path);
  }
  out << content;
}

int cmd_synthesize(const RunConfig& cfg, bool files) {
  const int cap = exact_cap_from_env();
  qftsynth::Graph g = qftsynth::resolve_graph_source(cfg.graph_source);
  const auto result =
      qftsynth::synthesize_qft(g, parse_method(cfg.method), cap);
  warn_if_fallback(result.plan, cap);

  const std::string report_json = qftsynth::cost_report_json(
      result.report, result.circuit.initial_layout,
      result.circuit.final_layout, used_method_label(cfg, result.plan));

  if (files) {
    write_file(cfg.out_prefix + ".qasm", qftsynth::emit_qasm(result.lowered));
    write_file(cfg.out_prefix + ".report.json", report_json);
    std::cout << "n=" << result.report.n << " actual=" << result.report.actual
              << " predicted=" << result.report.predicted << " -> "
              << cfg.out_prefix << ".qasm, " << cfg.out_prefix
              << ".report.json\n";
  } else {
    std::cout << report_json;
  }

  if (cfg.verify_after) {
    const auto vr = qftsynth::verify_synthesis(result.lowered);
    std::cout << "verification: " << (vr.equivalent ? "PASS" : "FAIL")
              << " residual=" << vr.residual << "\n";
    if (!vr.equivalent) return kExitVerifyFailed;
  }
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
  const int cap = exact_cap_from_env();
  qftsynth::Graph g = qftsynth::resolve_graph_source(cfg.graph_source);
  if (g.vertex_count() > qftsynth::kVerifyQubitCap) {
    throw std::invalid_argument(
        "verify supports at most " +
        std::to_string(qftsynth::kVerifyQubitCap) +
        " qubits (dense reference comparison)");
  }
  const auto result =
      qftsynth::synthesize_qft(g, parse_method(cfg.method), cap);
  warn_if_fallback(result.plan, cap);
  const auto vr = qftsynth::verify_synthesis(result.lowered);
  std::cout << (vr.equivalent ? "PASS" : "FAIL") << " residual=" << vr.residual
            << " phase=" << vr.phase << " actual_cnots="
            << result.report.actual << "\n";
  return vr.equivalent ? kExitOk : kExitVerifyFailed;
}

int cmd_solve_path(const RunConfig& cfg) {
  const int cap = exact_cap_from_env();
  qftsynth::Graph g = qftsynth::resolve_graph_source(cfg.graph_source);

  qftsynth::CoveringSolution sol;
  std::string used = cfg.method;
  if (cfg.method == "exact") {
    sol = qftsynth::three_two_one_cp(g, cap);
  } else if (cfg.method == "approx") {
    sol = qftsynth::approx_cp(g);
  } else if (g.active_count() <= cap) {
    sol = qftsynth::three_two_one_cp(g, cap);
    used = "exact";
  } else {
    std::cerr << "warning: " << g.active_count()
              << " vertices exceed the exact-solver cap of " << cap
              << "; using the approximate solver\n";
    sol = qftsynth::approx_cp(g);
    used = "approx";
  }

  auto print_list = [](const char* name, const std::vector<int>& xs) {
    std::cout << name << ":";
    for (int x : xs) std::cout << " " << x + 1;
    std::cout << "\n";
  };
  std::cout << "method: " << used << "\n";
  print_list("path", sol.path);
  print_list("visited", sol.visited);
  print_list("boundary", sol.boundary);
  std::cout << "objective: " << sol.objective << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hardware-aware QFT circuit synthesizer for arbitrary "
               "connected qubit-connectivity graphs"};
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph_source,
                    "edge-list file, or lnn:<n> / sun16 / suns27")
        ->required();
    sub->add_option("--method", cfg.method, "exact|approx|auto")
        ->check(CLI::IsMember({"exact", "approx", "auto"}))
        ->capture_default_str();
    sub->add_option("--seed", cfg.seed,
                    "reserved; synthesis is deterministic");
  };

  CLI::App* synth = app.add_subcommand(
      "synthesize", "emit a lowered QASM circuit and a cost report");
  add_common(synth);
  synth->add_option("--out", cfg.out_prefix, "output file prefix")
      ->capture_default_str();
  synth->add_flag("--verify", cfg.verify_after,
                  "verify the circuit against the QFT reference");

  CLI::App* cost = app.add_subcommand(
      "cost", "synthesize and print the cost report to stdout");
  add_common(cost);

  CLI::App* verify = app.add_subcommand(
      "verify", "synthesize and check equivalence with the QFT reference");
  add_common(verify);

  CLI::App* solve = app.add_subcommand(
      "solve-path", "solve the covering-path problem for a graph");
  add_common(solve);

  CLI11_PARSE(app, argc, argv);

  try {
    if (synth->parsed()) return cmd_synthesize(cfg, /*files=*/true);
    if (cost->parsed()) return cmd_synthesize(cfg, /*files=*/false);
    if (verify->parsed()) return cmd_verify(cfg);
    if (solve->parsed()) return cmd_solve_path(cfg);
  } catch (const qftsynth::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
