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

#include "qftsynth/topologies.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace qftsynth {

namespace {

// 16-qubit heavy-hex device map: a 12-cycle with four one-edge tails.
constexpr const char* kSun16 =
    "# 16-qubit device coupling map: 12-cycle with 4 tails\n"
    "16 16\n"
    "1 2\n"
    "2 3\n"
    "2 5\n"
    "3 4\n"
    "4 6\n"
    "5 8\n"
    "6 9\n"
    "7 8\n"
    "8 11\n"
    "9 10\n"
    "9 12\n"
    "11 13\n"
    "12 15\n"
    "13 14\n"
    "13 16\n"
    "14 15\n";

// 27-qubit heavy-hex device map: two 12-cycles sharing a 2-edge segment,
// with six one-edge tails.
constexpr const char* kSuns27 =
    "# 27-qubit device coupling map: two joint 12-cycles with 6 tails\n"
    "27 28\n"
    "1 2\n"
    "2 3\n"
    "2 5\n"
    "3 4\n"
    "4 6\n"
    "5 8\n"
    "6 9\n"
    "7 8\n"
    "8 11\n"
    "9 10\n"
    "9 12\n"
    "11 13\n"
    "12 15\n"
    "13 14\n"
    "13 16\n"
    "14 15\n"
    "15 17\n"
    "16 19\n"
    "17 20\n"
    "18 19\n"
    "19 22\n"
    "20 21\n"
    "20 23\n"
    "22 24\n"
    "23 26\n"
    "24 25\n"
    "25 26\n"
    "26 27\n";

bool parse_lnn(const std::string& name, int& n) {
  if (name.rfind("lnn:", 0) != 0) return false;
  const std::string arg = name.substr(4);
  if (arg.empty()) return false;
  size_t pos = 0;
  try {
    n = std::stoi(arg, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == arg.size();
}

}  // namespace

bool is_named_topology(const std::string& name) {
  int n = 0;
  return name == "sun16" || name == "suns27" || parse_lnn(name, n);
}

std::string named_topology_text(const std::string& name) {
  if (name == "sun16") return kSun16;
  if (name == "suns27") return kSuns27;
  throw std::invalid_argument("unknown built-in topology: " + name);
}

Graph resolve_graph_source(const std::string& source) {
  int n = 0;
  if (parse_lnn(source, n)) {
    if (n < 1) {
      throw std::invalid_argument("lnn size must be positive");
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
  }
  if (source == "sun16" || source == "suns27") {
    return Graph::parse_edge_list(named_topology_text(source));
  }
  std::ifstream in(source);
  if (!in) {
    throw std::invalid_argument("cannot open graph file: " + source);
  }
  std::ostringstream text;
  text << in.rdbuf();
  return Graph::parse_edge_list(text.str());
}

}  // namespace qftsynth
