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

#ifndef FLIPDIST_SPHERE_REGION_HPP_
#define FLIPDIST_SPHERE_REGION_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/oriented.hpp"
#include "flipdist/sphere/sphere.hpp"

namespace flipdist::sphere {

using Path = std::vector<int>;

// Every shortest path from x to y, in neighbor order.
inline std::vector<Path> shortest_paths(const SphereTriangulation& s, int x, int y) {
  std::vector<Path> out;
  Path p = {x};
  auto rec = [&](auto&& self) -> void {
    const int v = p.back();
    if (v == y) {
      out.push_back(p);
      return;
    }
    for (int u : s.neighbors(v)) {
      if (s.distance(u, y) == s.distance(v, y) - 1) {
        p.push_back(u);
        self(self);
        p.pop_back();
      }
    }
  };
  rec(rec);
  return out;
}

// +1 if u lies left of the walk prev -> v -> next at v, -1 if right.
inline int side(const SphereTriangulation& s, int v, int prev, int next, int u) {
  for (int w = s.succ(v, next);; w = s.succ(v, w)) {
    if (w == prev) return -1;
    if (w == u) return 1;
  }
}

// True if Q passes from one side of P to the other. Q may touch or run along
// P; only a contact run entered and left on different sides counts, and runs
// at an endpoint of either path never do.
inline bool crosses(const SphereTriangulation& s, const Path& P, const Path& Q) {
  std::vector<int> pos(s.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(P.size()); ++i) pos[P[i]] = i;
  const int last = static_cast<int>(Q.size()) - 1;
  const int plast = static_cast<int>(P.size()) - 1;
  int a = 0;
  while (a <= last) {
    if (pos[Q[a]] < 0) {
      ++a;
      continue;
    }
    int b = a;
    while (b + 1 <= last && pos[Q[b + 1]] >= 0 && std::abs(pos[Q[b + 1]] - pos[Q[b]]) == 1 &&
           (b == a || pos[Q[b + 1]] - pos[Q[b]] == pos[Q[b]] - pos[Q[b - 1]]))
      ++b;
    if (a > 0 && b < last) {
      const int ma = pos[Q[a]], mb = pos[Q[b]];
      if (ma > 0 && ma < plast && mb > 0 && mb < plast) {
        const int in = side(s, Q[a], P[ma - 1], P[ma + 1], Q[a - 1]);
        const int out = side(s, Q[b], P[mb - 1], P[mb + 1], Q[b + 1]);
        if (in != out) return true;
      }
    }
    a = b + 1;
  }
  return false;
}

// Winding number of a closed walk around each face, up to a constant; faces
// left of an edge of the walk sit one higher than faces right of it.
inline std::vector<int> winding_numbers(const SphereTriangulation& s, const Path& walk) {
  const int N = s.vertex_count();
  std::vector<int> count(N * N, 0);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) ++count[walk[i] * N + walk[i + 1]];
  std::vector<int> h(s.face_count(), 0);
  std::vector<char> seen(s.face_count(), 0);
  std::vector<int> queue = {0};
  seen[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const int f = queue[q];
    const Face& t = s.face(f);
    for (int e = 0; e < 3; ++e) {
      const int u = t[e], v = t[(e + 1) % 3];
      const int g = s.face_of(v, u);
      if (!seen[g]) {
        seen[g] = 1;
        h[g] = h[f] - (count[u * N + v] - count[v * N + u]);
        queue.push_back(g);
      }
    }
  }
  return h;
}

enum class RegionTag {
  kOk,        // oriented region, i, j, k on a simple boundary cycle
  kFlat,      // no cycle encloses any face
  kHuge,      // every enclosing cycle splits the sphere into equal halves
  kTie,       // some cycle splits the sphere into equal halves
  kWhole,     // the union covers the sphere
  kPinch,     // boundary touches itself at a vertex
  kMulti,     // boundary has several cycles
  kInterior,  // some of i, j, k lie off the boundary
};

inline const char* to_string(RegionTag t) {
  switch (t) {
    case RegionTag::kOk:
      return "ok";
    case RegionTag::kFlat:
      return "flat";
    case RegionTag::kHuge:
      return "huge";
    case RegionTag::kTie:
      return "tie";
    case RegionTag::kWhole:
      return "whole";
    case RegionTag::kPinch:
      return "pinch";
    case RegionTag::kMulti:
      return "multi";
    case RegionTag::kInterior:
      return "interior";
  }
  return "unknown";
}

struct RegionInfo {
  std::vector<int> faces;  // sorted face indices
  int orientation = 0;     // +1 counterclockwise, -1 clockwise, 0 degenerate
  RegionTag tag = RegionTag::kFlat;
  std::vector<int> boundary;  // boundary cycle, region on its left

  int area() const { return static_cast<int>(faces.size()); }
  bool degenerate() const { return orientation == 0; }
};

inline bool region_contains(const RegionInfo& outer, const RegionInfo& inner) {
  return std::includes(outer.faces.begin(), outer.faces.end(), inner.faces.begin(),
                       inner.faces.end());
}

namespace detail {

// Union of the smaller sides of the admissible closed walks.
struct RegionUnion {
  std::vector<char> in;
  bool tie = false;
  bool any = false;

  explicit RegionUnion(int faces) : in(faces, 0) {}

  void add_cycle(const SphereTriangulation& s, const Path& p, const Path& q, const Path& r) {
    Path walk = p;
    walk.insert(walk.end(), q.begin() + 1, q.end());
    walk.insert(walk.end(), r.begin() + 1, r.end());
    std::vector<int> h = winding_numbers(s, walk);
    auto [lo, hi] = std::minmax_element(h.begin(), h.end());
    if (*lo == *hi) return;
    int lo_count = 0, hi_count = 0;
    for (int x : h) {
      if (x == *lo) {
        ++lo_count;
      } else if (x == *hi) {
        ++hi_count;
      } else {
        return;  // the walk winds twice around something
      }
    }
    const int pick = hi_count < lo_count ? *hi : lo_count < hi_count ? *lo : 0;
    if (hi_count == lo_count) {
      tie = true;
      return;
    }
    any = true;
    for (std::size_t f = 0; f < h.size(); ++f) {
      if (h[f] == pick) in[f] = 1;
    }
  }
};

inline bool compatible(const SphereTriangulation& s, const Path& a, const Path& b) {
  return !crosses(s, a, b) && !crosses(s, b, a);
}

inline void union_over(const SphereTriangulation& s, const std::vector<Path>& P1,
                       const std::vector<Path>& P2, const std::vector<Path>& P3,
                       RegionUnion& u) {
  for (const Path& p : P1) {
    for (const Path& q : P2) {
      if (!compatible(s, p, q)) continue;
      for (const Path& r : P3) {
        if (!compatible(s, p, r) || !compatible(s, q, r)) continue;
        u.add_cycle(s, p, q, r);
      }
    }
  }
}

// Orientation and boundary of the union for the ordered triple (i,j,k).
inline RegionInfo analyze(const SphereTriangulation& s, const RegionUnion& u, int i, int j,
                          int k) {
  RegionInfo info;
  for (int f = 0; f < s.face_count(); ++f) {
    if (u.in[f]) info.faces.push_back(f);
  }
  if (info.faces.empty()) {
    info.tag = u.tie ? RegionTag::kHuge : RegionTag::kFlat;
    return info;
  }
  if (u.tie) {
    info.tag = RegionTag::kTie;
    return info;
  }
  const int N = s.vertex_count();
  std::vector<int> next(N, -1);
  int edges = 0;
  for (int f : info.faces) {
    const Face& t = s.face(f);
    for (int e = 0; e < 3; ++e) {
      const int x = t[e], y = t[(e + 1) % 3];
      if (u.in[s.face_of(y, x)]) continue;
      if (next[x] >= 0) {
        info.tag = RegionTag::kPinch;
        return info;
      }
      next[x] = y;
      ++edges;
    }
  }
  if (edges == 0) {
    info.tag = RegionTag::kWhole;
    return info;
  }
  int start = 0;
  while (next[start] < 0) ++start;
  info.boundary = {start};
  for (int x = next[start]; x != start; x = next[x]) info.boundary.push_back(x);
  if (static_cast<int>(info.boundary.size()) != edges) {
    info.tag = RegionTag::kMulti;
    info.boundary.clear();
    return info;
  }
  if (next[i] < 0 || next[j] < 0 || next[k] < 0) {
    info.tag = RegionTag::kInterior;
    return info;
  }
  const int L = static_cast<int>(info.boundary.size());
  std::vector<int> at(N, -1);
  for (int t = 0; t < L; ++t) at[info.boundary[t]] = t;
  const int a = at[i], b = at[j], c = at[k];
  info.tag = RegionTag::kOk;
  info.orientation = ((b - a + L) % L) < ((c - a + L) % L) ? 1 : -1;
  return info;
}

// Greedy geodesic from x to y that keeps turning to one side. `first` is
// the initial step; later steps take the continuation nearest the incoming
// edge on the chosen side.
inline Path extremal_geodesic(const SphereTriangulation& s, int x, int y, int first,
                              bool leftmost) {
  Path p = {x, first};
  while (p.back() != y) {
    const int v = p.back(), prev = p[p.size() - 2];
    int u = prev;
    do {
      u = leftmost ? s.pred(v, u) : s.succ(v, u);
    } while (s.distance(u, y) != s.distance(v, y) - 1);
    p.push_back(u);
  }
  return p;
}

// The extremal geodesics from x to y: for each maximal counterclockwise run
// of first steps, the leftmost path from its last step and the rightmost path
// from its first step.
inline std::vector<Path> extremal_geodesics(const SphereTriangulation& s, int x, int y) {
  if (x == y) return {Path{x}};
  auto ok = [&](int u) { return s.distance(u, y) == s.distance(x, y) - 1; };
  std::vector<Path> out;
  for (int c : s.neighbors(x)) {
    if (!ok(c)) continue;
    if (!ok(s.succ(x, c))) out.push_back(extremal_geodesic(s, x, y, c, true));
    if (!ok(s.pred(x, c))) out.push_back(extremal_geodesic(s, x, y, c, false));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

// Reference construction: every triple of shortest paths, pairwise
// non-crossing, with the smaller side of each cycle.
inline RegionInfo triangular_region_brute(const SphereTriangulation& s, int i, int j, int k) {
  if (i == j || j == k || i == k) throw InvalidArgument("region vertices must be distinct");
  detail::RegionUnion u(s.face_count());
  detail::union_over(s, shortest_paths(s, i, j), shortest_paths(s, j, k),
                     shortest_paths(s, k, i), u);
  return detail::analyze(s, u, i, j, k);
}

// Union over all geodesic triples, with pairwise compatibility computed
// once per pair of paths instead of once per triple.
inline RegionInfo triangular_region(const SphereTriangulation& s, int i, int j, int k) {
  if (i == j || j == k || i == k) throw InvalidArgument("region vertices must be distinct");
  const std::vector<Path> P1 = shortest_paths(s, i, j), P2 = shortest_paths(s, j, k),
                          P3 = shortest_paths(s, k, i);
  auto table = [&](const std::vector<Path>& A, const std::vector<Path>& B) {
    std::vector<char> ok(A.size() * B.size());
    for (std::size_t a = 0; a < A.size(); ++a) {
      for (std::size_t b = 0; b < B.size(); ++b) ok[a * B.size() + b] = detail::compatible(s, A[a], B[b]);
    }
    return ok;
  };
  const std::vector<char> c12 = table(P1, P2), c23 = table(P2, P3), c13 = table(P1, P3);
  detail::RegionUnion u(s.face_count());
  for (std::size_t a = 0; a < P1.size(); ++a) {
    for (std::size_t b = 0; b < P2.size(); ++b) {
      if (!c12[a * P2.size() + b]) continue;
      for (std::size_t c = 0; c < P3.size(); ++c) {
        if (c23[b * P3.size() + c] && c13[a * P3.size() + c]) u.add_cycle(s, P1[a], P2[b], P3[c]);
      }
    }
  }
  return detail::analyze(s, u, i, j, k);
}

// Union restricted to the extremal geodesics of each side. Cheaper, but it
// can miss cycles through interior geodesics, so it is not the default.
inline RegionInfo triangular_region_extremal(const SphereTriangulation& s, int i, int j, int k) {
  if (i == j || j == k || i == k) throw InvalidArgument("region vertices must be distinct");
  detail::RegionUnion u(s.face_count());
  detail::union_over(s, detail::extremal_geodesics(s, i, j), detail::extremal_geodesics(s, j, k),
                     detail::extremal_geodesics(s, k, i), u);
  return detail::analyze(s, u, i, j, k);
}

// Regions of all sorted triples, indexed by colex rank.
class RegionTable {
 public:
  enum class Method { kExact, kBrute, kExtremal };

  RegionTable(const SphereTriangulation& s, Method method = Method::kExact, int threads = 1)
      : count_(s.vertex_count()) {
    std::vector<TriangleKey> keys;
    for (int k = 2; k < count_; ++k) {
      for (int j = 1; j < k; ++j) {
        for (int i = 0; i < j; ++i) keys.push_back({i, j, k});
      }
    }
    regions_.resize(keys.size());
    threads = std::max(1, threads);
    auto work = [&](int t) {
      for (std::size_t x = t; x < keys.size(); x += threads) {
        const auto& [i, j, k] = keys[x];
        switch (method) {
          case Method::kExact:
            regions_[x] = triangular_region(s, i, j, k);
            break;
          case Method::kBrute:
            regions_[x] = triangular_region_brute(s, i, j, k);
            break;
          case Method::kExtremal:
            regions_[x] = triangular_region_extremal(s, i, j, k);
            break;
        }
      }
    };
    if (threads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
  }

  // Region of the sorted triple.
  const RegionInfo& at(const TriangleKey& key) const { return regions_[rank(key)]; }

  // Orientation of the ordered triple (i,j,k).
  int orientation(int i, int j, int k) const {
    auto t = OrientedTriangle::make(i, j, k);
    return t.sign * at(t.v).orientation;
  }

  int area(int i, int j, int k) const { return at(OrientedTriangle::make(i, j, k).v).area(); }

 private:
  static std::size_t rank(const TriangleKey& v) {
    return binomial(v[0], 1) + binomial(v[1], 2) + binomial(v[2], 3);
  }

  int count_;
  std::vector<RegionInfo> regions_;
};

}  // namespace flipdist::sphere

#endif  // FLIPDIST_SPHERE_REGION_HPP_
