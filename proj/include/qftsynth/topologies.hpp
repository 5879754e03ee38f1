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

#include "qftsynth/graph.hpp"

namespace qftsynth {

/// True for names resolve_graph_source understands without touching the
/// filesystem: "lnn:<n>", "sun16", "suns27".
bool is_named_topology(const std::string& name);

/// Edge-list text of a built-in topology ("sun16" or "suns27"); identical to
/// the bundled data files. Throws std::invalid_argument for other names.
std::string named_topology_text(const std::string& name);

/// Builds a graph from a named topology or, failing that, from a file at the
/// given path in the edge-list format.
Graph resolve_graph_source(const std::string& source);

}  // namespace qftsynth
