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

#include "qftsynth/covering_path.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace qftsynth {

namespace {

constexpr uint8_t kInf = SubsetTable::kNone;

void require_connected_active(const Graph& g) {
  if (!g.connected_on_active()) {
    throw std::invalid_argument(
        "active subgraph must be non-empty and connected");
  }
}

int checked_cap(const Graph& g, int cap, const char* who) {
  const int na = g.active_count();
  const int limit = std::min(cap, kMaxExactCap);
  if (na > limit) {
    throw CapExceededError(std::string(who) + ": " + std::to_string(na) +
                           " active vertices exceed the exact-solver cap of " +
                           std::to_string(limit) +
                           "; use the approximate solver");
  }
  return na;
}

CoveringSolution make_solution(const Graph& g, NonSimplePath path) {
  CoveringSolution sol;
  sol.path = std::move(path);
  std::vector<char> on_path(static_cast<size_t>(g.vertex_count()), 0);
  for (int v : sol.path) on_path[static_cast<size_t>(v)] = 1;
  for (int v : g.active_vertices()) {
    if (on_path[static_cast<size_t>(v)]) {
      sol.visited.push_back(v);
    } else {
      bool adjacent = false;
      for (int u : g.all_neighbors(v)) {
        if (on_path[static_cast<size_t>(u)]) {
          adjacent = true;
          break;
        }
      }
      if (adjacent) sol.boundary.push_back(v);
    }
  }
  const int len = static_cast<int>(sol.path.size()) - 1;
  sol.objective = 3 * len + 2 * static_cast<int>(sol.boundary.size());
  return sol;
}

}  // namespace

SubsetTable::SubsetTable(std::vector<int> verts, std::vector<uint8_t> length,
                         std::vector<uint8_t> pred)
    : verts_(std::move(verts)),
      length_(std::move(length)),
      pred_(std::move(pred)) {
  const int max_vertex = verts_.empty() ? -1 : verts_.back();
  inverse_.assign(static_cast<size_t>(max_vertex) + 1, -1);
  for (size_t i = 0; i < verts_.size(); ++i) {
    inverse_[static_cast<size_t>(verts_[i])] = static_cast<int>(i);
  }
}

int SubsetTable::index_of(int vertex) const {
  if (vertex < 0 || static_cast<size_t>(vertex) >= inverse_.size()) return -1;
  return inverse_[static_cast<size_t>(vertex)];
}

int SubsetTable::length(uint32_t subset, int index) const {
  const uint8_t raw =
      length_[static_cast<size_t>(subset) * verts_.size() +
              static_cast<size_t>(index)];
  return raw == kInf ? -1 : raw;
}

int SubsetTable::pred_of(uint32_t subset, int index) const {
  const uint8_t raw =
      pred_[static_cast<size_t>(subset) * verts_.size() +
            static_cast<size_t>(index)];
  return raw == kNone ? -1 : raw;
}

SubsetTable compute_d(const Graph& g, const DistanceMatrix& dm, int cap) {
  require_connected_active(g);
  const int na = checked_cap(g, cap, "compute_d");
  const std::vector<int> verts = g.active_vertices();

  // Pairwise distances over compact indices. On a connected active subgraph
  // every entry is finite and at most n-1.
  std::vector<uint8_t> w(static_cast<size_t>(na) * static_cast<size_t>(na),
                         kInf);
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < na; ++j) {
      const int d = dm.dist(verts[static_cast<size_t>(i)],
                            verts[static_cast<size_t>(j)]);
      if (d != DistanceMatrix::kUnreachable) {
        w[static_cast<size_t>(i) * static_cast<size_t>(na) +
          static_cast<size_t>(j)] = static_cast<uint8_t>(d);
      }
    }
  }

  const size_t subsets = size_t{1} << na;
  std::vector<uint8_t> length(subsets * static_cast<size_t>(na), kInf);
  std::vector<uint8_t> pred(subsets * static_cast<size_t>(na),
                            SubsetTable::kNone);

  for (uint32_t mask = 1; mask < subsets; ++mask) {
    const size_t base = static_cast<size_t>(mask) * static_cast<size_t>(na);
    if (std::popcount(mask) == 1) {
      length[base + static_cast<size_t>(std::countr_zero(mask))] = 0;
      continue;
    }
    for (uint32_t vbits = mask; vbits != 0; vbits &= vbits - 1) {
      const int v = std::countr_zero(vbits);
      const uint32_t rest = mask ^ (uint32_t{1} << v);
      const size_t rest_base =
          static_cast<size_t>(rest) * static_cast<size_t>(na);
      uint8_t best = kInf;
      uint8_t best_u = SubsetTable::kNone;
      for (uint32_t ubits = rest; ubits != 0; ubits &= ubits - 1) {
        const int u = std::countr_zero(ubits);
        const uint8_t sub = length[rest_base + static_cast<size_t>(u)];
        const uint8_t hop =
            w[static_cast<size_t>(u) * static_cast<size_t>(na) +
              static_cast<size_t>(v)];
        if (sub == kInf || hop == kInf) continue;
        const int cand = sub + hop;
        if (cand < best) {
          best = static_cast<uint8_t>(cand);
          best_u = static_cast<uint8_t>(u);
        }
      }
      length[base + static_cast<size_t>(v)] = best;
      pred[base + static_cast<size_t>(v)] = best_u;
    }
  }
  return SubsetTable(verts, std::move(length), std::move(pred));
}

std::vector<char> compute_c(const Graph& g, int cap) {
  require_connected_active(g);
  const int na = checked_cap(g, cap, "compute_c");
  const std::vector<int> verts = g.active_vertices();

  std::vector<int> index(static_cast<size_t>(g.vertex_count()), -1);
  for (int i = 0; i < na; ++i) index[static_cast<size_t>(verts[i])] = i;

  std::vector<uint32_t> reach(static_cast<size_t>(na), 0);
  for (int i = 0; i < na; ++i) {
    uint32_t bits = uint32_t{1} << i;
    for (int u : g.all_neighbors(verts[static_cast<size_t>(i)])) {
      const int j = index[static_cast<size_t>(u)];
      if (j >= 0) bits |= uint32_t{1} << j;
    }
    reach[static_cast<size_t>(i)] = bits;
  }

  const uint32_t full =
      na == 32 ? ~uint32_t{0} : (uint32_t{1} << na) - 1;
  const size_t subsets = size_t{1} << na;
  std::vector<char> covered(subsets, 0);
  for (uint32_t mask = 0; mask < subsets; ++mask) {
    uint32_t closure = 0;
    for (uint32_t bits = mask; bits != 0; bits &= bits - 1) {
      closure |= reach[static_cast<size_t>(std::countr_zero(bits))];
    }
    covered[mask] = closure == full ? 1 : 0;
  }
  return covered;
}

NonSimplePath get_ns_path(const SubsetTable& table, const DistanceMatrix& dm,
                          uint32_t subset, int v) {
  int idx = table.index_of(v);
  if (idx < 0 || (subset & (uint32_t{1} << idx)) == 0) {
    throw std::invalid_argument("end vertex is not a member of the subset");
  }
  if (table.length(subset, idx) < 0) {
    throw std::invalid_argument("no walk exists for the requested subset");
  }
  const auto& verts = table.vertices();
  NonSimplePath path;
  uint32_t mask = subset;
  while (table.pred_of(mask, idx) >= 0) {
    const int prev = table.pred_of(mask, idx);
    mask ^= uint32_t{1} << idx;
    const std::vector<int> hop = get_shortest_path(
        dm, verts[static_cast<size_t>(prev)], verts[static_cast<size_t>(idx)]);
    path.insert(path.begin(), hop.begin(), hop.end());
    idx = prev;
  }
  path.insert(path.begin(), verts[static_cast<size_t>(idx)]);
  return path;
}

CoveringSolution three_two_one_cp(const Graph& g, int cap) {
  require_connected_active(g);
  const int na = checked_cap(g, cap, "three_two_one_cp");
  const DistanceMatrix dm = shortest_paths(g);
  const SubsetTable table = compute_d(g, dm, cap);
  const std::vector<char> covered = compute_c(g, cap);
  const auto& verts = table.vertices();

  int best_cost = std::numeric_limits<int>::max();
  int best_size = -1;
  uint32_t best_mask = 0;
  int best_end = -1;

  const size_t subsets = size_t{1} << na;
  for (uint32_t mask = 1; mask < subsets; ++mask) {
    if (!covered[mask]) continue;
    const int size = std::popcount(mask);
    for (uint32_t vbits = mask; vbits != 0; vbits &= vbits - 1) {
      const int v = std::countr_zero(vbits);
      const int len = table.length(mask, v);
      if (len < 0) continue;
      const int cost = 3 * len + 2 * (na - size);
      const bool better =
          cost < best_cost ||
          (cost == best_cost &&
           (size > best_size ||
            (size == best_size &&
             (mask < best_mask || (mask == best_mask && v < best_end)))));
      if (better) {
        best_cost = cost;
        best_size = size;
        best_mask = mask;
        best_end = v;
      }
    }
  }
  if (best_end < 0) {
    throw std::logic_error("no covering subset found on a connected graph");
  }
  return make_solution(
      g, get_ns_path(table, dm, best_mask,
                     verts[static_cast<size_t>(best_end)]));
}

CoveringSolution brute_force_cp(const Graph& g, int cap) {
  require_connected_active(g);
  const int na = g.active_count();
  if (na > cap) {
    throw CapExceededError("brute_force_cp: " + std::to_string(na) +
                           " active vertices exceed the cap of " +
                           std::to_string(cap));
  }
  const std::vector<int> verts = g.active_vertices();
  std::vector<int> index(static_cast<size_t>(g.vertex_count()), -1);
  for (int i = 0; i < na; ++i) index[static_cast<size_t>(verts[i])] = i;

  std::vector<uint32_t> reach(static_cast<size_t>(na), 0);
  for (int i = 0; i < na; ++i) {
    uint32_t bits = uint32_t{1} << i;
    for (int u : g.all_neighbors(verts[static_cast<size_t>(i)])) {
      const int j = index[static_cast<size_t>(u)];
      if (j >= 0) bits |= uint32_t{1} << j;
    }
    reach[static_cast<size_t>(i)] = bits;
  }
  const uint32_t full = (uint32_t{1} << na) - 1;
  const int max_len = std::max(0, 2 * na - 3);

  int best_obj = std::numeric_limits<int>::max();
  NonSimplePath best_path;
  NonSimplePath current;

  // Depth-first over all walks; a covering prefix is never extended since
  // every extra step costs 3 and frees at most 2.
  auto dfs = [&](auto&& self, int last, uint32_t visited, uint32_t coveredbits,
                 int len) -> void {
    if (coveredbits == full) {
      const int obj = 3 * len + 2 * (na - std::popcount(visited));
      if (obj < best_obj) {
        best_obj = obj;
        best_path = current;
      }
      return;
    }
    if (len >= max_len || 3 * (len + 1) >= best_obj) return;
    for (int u : g.all_neighbors(verts[static_cast<size_t>(last)])) {
      const int j = index[static_cast<size_t>(u)];
      if (j < 0) continue;
      current.push_back(u);
      self(self, j, visited | (uint32_t{1} << j),
           coveredbits | reach[static_cast<size_t>(j)], len + 1);
      current.pop_back();
    }
  };

  for (int i = 0; i < na; ++i) {
    current.assign(1, verts[static_cast<size_t>(i)]);
    dfs(dfs, i, uint32_t{1} << i, reach[static_cast<size_t>(i)], 0);
  }
  return make_solution(g, best_path);
}

}  // namespace qftsynth
