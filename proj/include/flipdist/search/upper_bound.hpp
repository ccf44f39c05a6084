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

#ifndef FLIPDIST_SEARCH_UPPER_BOUND_HPP_
#define FLIPDIST_SEARCH_UPPER_BOUND_HPP_

#include <algorithm>
#include <optional>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/triangulation.hpp"
#include "flipdist/search/flip_path.hpp"

namespace flipdist::search {

// Vertex with the most incident diagonals across both triangulations;
// smallest label on ties.
inline int fan_apex(const Triangulation& a, const Triangulation& b) {
  int best = 0, best_count = -1;
  for (int v = 0; v < a.vertex_count(); ++v) {
    const int count = a.diagonal_degree(v) + b.diagonal_degree(v);
    if (count > best_count) {
      best = v;
      best_count = count;
    }
  }
  return best;
}

// Flips turning t into the fan at v. Every flip adds a diagonal at v.
inline std::vector<Diagonal> moves_to_fan(Triangulation t, int v) {
  std::vector<Diagonal> moves;
  while (t.diagonal_degree(v) < t.n() - 1) {
    std::optional<Diagonal> pick;
    for (Diagonal d : t.diagonals()) {
      if (d.touches(v)) continue;
      auto [p, q] = apexes(t, d);
      if (p == v || q == v) {
        pick = d;
        break;
      }
    }
    if (!pick) throw InvalidTriangulation("no flip increases the fan degree");
    moves.push_back(*pick);
    t = flip(t, *pick);
  }
  return moves;
}

// Path from a to b through the fan at fan_apex(a, b). Its length is
// (n-1-e_a(v)) + (n-1-e_b(v)) <= 2n-2.
inline FlipPath upper_bound_path(const Triangulation& a, const Triangulation& b) {
  if (a.n() != b.n()) throw InvalidArgument("triangulations have different n");
  FlipPath path{a, {}};
  if (a == b) return path;
  const int v = fan_apex(a, b);
  path.moves = moves_to_fan(a, v);
  // Reverse b's path: undo each flip by flipping the diagonal it added.
  std::vector<Triangulation> seen = {b};
  std::vector<Diagonal> back = moves_to_fan(b, v);
  for (Diagonal d : back) seen.push_back(flip(seen.back(), d));
  for (std::size_t i = back.size(); i-- > 0;)
    path.moves.push_back(flipped_diagonal(seen[i], back[i]));
  return path;
}

}  // namespace flipdist::search

#endif  // FLIPDIST_SEARCH_UPPER_BOUND_HPP_
