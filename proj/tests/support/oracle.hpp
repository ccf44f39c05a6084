// Copyright 2026 The flipdist Authors
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

#ifndef FLIPDIST_TESTS_SUPPORT_ORACLE_HPP_
#define FLIPDIST_TESTS_SUPPORT_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <utility>
#include <vector>

#include "flipdist/core/triangulation.hpp"

namespace flipdist::oracle {

// A triangulation as a plain edge set, flipped by scanning for the two
// vertices adjacent to both ends of a diagonal. Shares no code with the
// search module.
using EdgeSet = std::set<std::pair<int, int>>;

inline EdgeSet edges_of(const Triangulation& t) {
  EdgeSet e;
  for (Diagonal d : t.diagonals()) e.insert({d.a, d.b});
  return e;
}

inline std::vector<EdgeSet> neighbors(const EdgeSet& e, int n) {
  const int count = n + 2;
  auto adjacent = [&](int x, int y) {
    if (x > y) std::swap(x, y);
    return y - x == 1 || (x == 0 && y == count - 1) || e.count({x, y}) > 0;
  };
  std::vector<EdgeSet> out;
  for (auto [a, b] : e) {
    std::vector<int> common;
    for (int v = 0; v < count; ++v) {
      if (v != a && v != b && adjacent(a, v) && adjacent(b, v)) common.push_back(v);
    }
    // Exactly one common neighbor lies on each side of (a,b) in a triangulation;
    // keep the nearest on each side.
    int inside = -1, outside = -1;
    for (int v : common) {
      if (v > a && v < b) {
        if (inside < 0) inside = v;
      } else if (outside < 0) {
        outside = v;
      }
    }
    EdgeSet next = e;
    next.erase({a, b});
    next.insert({std::min(inside, outside), std::max(inside, outside)});
    out.push_back(std::move(next));
  }
  return out;
}

inline std::map<EdgeSet, int> bfs(const EdgeSet& start, int n) {
  std::map<EdgeSet, int> dist = {{start, 0}};
  std::queue<EdgeSet> q;
  q.push(start);
  while (!q.empty()) {
    EdgeSet u = q.front();
    q.pop();
    for (auto& v : neighbors(u, n)) {
      if (dist.emplace(v, dist[u] + 1).second) q.push(v);
    }
  }
  return dist;
}

// Fan from vertex 0.
inline EdgeSet fan(int n) {
  EdgeSet e;
  for (int v = 2; v <= n; ++v) e.insert({0, v});
  return e;
}

// Largest distance over all pairs, by one BFS per triangulation.
inline int diameter(int n) {
  int best = 0;
  for (const auto& [t, d] : bfs(fan(n), n)) {
    (void)d;
    for (const auto& [u, x] : bfs(t, n)) best = std::max(best, x);
  }
  return best;
}

inline std::uint64_t catalan(int n) {
  std::vector<std::uint64_t> c(n + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  }
  return c[n];
}

}  // namespace flipdist::oracle

#endif  // FLIPDIST_TESTS_SUPPORT_ORACLE_HPP_
