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

#ifndef FLIPDIST_SPHERE_LATTICE_HPP_
#define FLIPDIST_SPHERE_LATTICE_HPP_

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

#include "flipdist/core/error.hpp"

namespace flipdist::sphere {

// Triangular lattice in axial coordinates; the six neighbors of (x,y) are
// (x±1,y), (x,y±1), (x+1,y-1), (x-1,y+1).
using LatticePoint = std::array<int, 2>;

inline constexpr std::array<LatticePoint, 6> kLatticeSteps = {
    {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}};

inline int lattice_distance(const LatticePoint& p, const LatticePoint& q) {
  const int dx = p[0] - q[0], dy = p[1] - q[1];
  return std::max({std::abs(dx), std::abs(dy), std::abs(dx + dy)});
}

// The lattice folded by the half-turn about the midpoint c of the edge
// (v1, v2): every point is identified with its mirror image. The result has
// one vertex of degree 5 next to one of degree 4; the lattice is its double
// cover.
class DefectLattice {
 public:
  // Demo patch: points within lattice distance `radius` of v1.
  DefectLattice(LatticePoint v1, LatticePoint v2, int radius)
      : v1_(v1), v2_(v2), radius_(radius) {
    if (lattice_distance(v1, v2) != 1) throw InvalidArgument("v1 and v2 must be adjacent");
    if (radius < 1) throw InvalidArgument("radius must be positive");
  }

  LatticePoint mirror(const LatticePoint& p) const {
    return {v1_[0] + v2_[0] - p[0], v1_[1] + v2_[1] - p[1]};
  }

  bool in_patch(const LatticePoint& p) const { return lattice_distance(p, v1_) <= radius_; }

  // min(d(x,y), d(x,y')) with y' the mirror image of y.
  int distance(const LatticePoint& x, const LatticePoint& y) const {
    if (!in_patch(x) || !in_patch(y)) throw InvalidArgument("point outside the demo patch");
    return std::min(lattice_distance(x, y), lattice_distance(x, mirror(y)));
  }

  // Breadth-first search on an explicit finite piece of the folded graph,
  // large enough to contain every shortest path between patch points.
  int patch_bfs_distance(const LatticePoint& x, const LatticePoint& y) const {
    if (!in_patch(x) || !in_patch(y)) throw InvalidArgument("point outside the demo patch");
    const int big = 3 * radius_ + 2;
    auto rep = [&](const LatticePoint& p) { return std::min(p, mirror(p)); };
    std::map<LatticePoint, int> dist = {{rep(x), 0}};
    std::vector<LatticePoint> queue = {rep(x)};
    const LatticePoint target = rep(y);
    for (std::size_t h = 0; h < queue.size(); ++h) {
      const LatticePoint p = queue[h];
      if (p == target) return dist[p];
      for (const LatticePoint& lift : {p, mirror(p)}) {
        for (const auto& step : kLatticeSteps) {
          LatticePoint q = {lift[0] + step[0], lift[1] + step[1]};
          if (lattice_distance(q, v1_) > big) continue;
          q = rep(q);
          if (q == p) continue;  // the edge through the center folds onto itself
          if (dist.emplace(q, dist[p] + 1).second) queue.push_back(q);
        }
      }
    }
    throw InvalidArgument("patch too small");
  }

  // Number of distinct neighbors of p in the folded graph.
  int degree(const LatticePoint& p) const {
    auto rep = [&](const LatticePoint& q) { return std::min(q, mirror(q)); };
    std::vector<LatticePoint> nb;
    for (const auto& step : kLatticeSteps) {
      LatticePoint q = rep({p[0] + step[0], p[1] + step[1]});
      if (q != rep(p)) nb.push_back(q);
    }
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    return static_cast<int>(nb.size());
  }

 private:
  LatticePoint v1_, v2_;
  int radius_;
};

}  // namespace flipdist::sphere

#endif  // FLIPDIST_SPHERE_LATTICE_HPP_
