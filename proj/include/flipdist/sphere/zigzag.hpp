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

#ifndef FLIPDIST_SPHERE_ZIGZAG_HPP_
#define FLIPDIST_SPHERE_ZIGZAG_HPP_

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/triangulation.hpp"
#include "flipdist/sphere/sphere.hpp"

namespace flipdist::sphere {

// Snake triangulation: the j-th diagonal is (k, n+2-k) for j=2k-1 and
// (k, n+1-k) for j=2k.
inline Triangulation zigzag(int n) {
  if (n < 3) throw InvalidArgument("zigzag needs n >= 3, got n=" + std::to_string(n));
  std::vector<Diagonal> d;
  for (int j = 1; j <= n - 1; ++j) {
    const int k = (j + 1) / 2;
    if (j % 2 == 1) {
      d.emplace_back(k, n + 2 - k);
    } else {
      d.emplace_back(k, n + 1 - k);
    }
  }
  return Triangulation(n, std::move(d));
}

inline int default_offset(int n) { return static_cast<int>(std::lround(std::sqrt(double(n)))); }

// zigzag(n) with every label shifted by r modulo n+2.
inline Triangulation rotated_zigzag(int n, int r) {
  if (n < 9) throw InvalidArgument("rotated zigzag needs n >= 9, got n=" + std::to_string(n));
  const int N = n + 2;
  r = ((r % N) + N) % N;
  const Triangulation base = zigzag(n);
  std::vector<Diagonal> d;
  for (Diagonal x : base.diagonals()) d.emplace_back((x.a + r) % N, (x.b + r) % N);
  return Triangulation(n, std::move(d));
}

inline SphereTriangulation zigzag_sphere(int n, int r) {
  return sphere_union(zigzag(n), rotated_zigzag(n, r));
}

// Vertices of degree other than 6.
inline std::vector<int> special_vertices(const SphereTriangulation& s) {
  std::vector<int> out;
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (s.degree(v) != 6) out.push_back(v);
  }
  return out;
}

// Histogram {4:4, 5:4, 6:n-6} with every degree-4 vertex next to a degree-5
// vertex.
inline bool has_expected_shape(const SphereTriangulation& s) {
  std::map<int, int> want = {{4, 4}, {5, 4}};
  if (s.n() > 6) want[6] = s.n() - 6;
  if (degree_histogram(s) != want) return false;
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (s.degree(v) != 4) continue;
    bool near5 = false;
    for (int u : s.neighbors(v)) near5 |= s.degree(u) == 5;
    if (!near5) return false;
  }
  return true;
}

// Smallest pairwise distance between degree-4 vertices.
inline int special_separation(const SphereTriangulation& s) {
  std::vector<int> four;
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (s.degree(v) == 4) four.push_back(v);
  }
  int best = s.vertex_count();
  for (std::size_t a = 0; a < four.size(); ++a) {
    for (std::size_t b = a + 1; b < four.size(); ++b)
      best = std::min(best, s.distance(four[a], four[b]));
  }
  return best;
}

inline int default_separation_threshold(int n) {
  return std::max(3, static_cast<int>(std::floor(std::sqrt(double(n)) / 2)));
}

struct OffsetChoice {
  int r = 0;
  int separation = 0;
  bool meets_threshold = false;
};

// Tries r = round(sqrt n), round(sqrt n)+1, ... up to n/2 and returns the
// first offset with the expected degree shape and separation >= threshold.
// When no offset reaches the threshold, returns the first one with the
// largest separation.
inline OffsetChoice choose_offset(int n, std::optional<int> threshold = std::nullopt) {
  const int need = threshold.value_or(default_separation_threshold(n));
  std::optional<OffsetChoice> fallback;
  for (int r = default_offset(n); r <= n / 2; ++r) {
    Triangulation a = zigzag(n), b = rotated_zigzag(n, r);
    bool shared = false;
    for (Diagonal d : a.diagonals()) shared |= b.contains(d);
    if (shared) continue;
    SphereTriangulation s = sphere_union(a, b);
    if (!has_expected_shape(s)) continue;
    const int sep = special_separation(s);
    if (sep >= need) return {r, sep, true};
    if (!fallback || sep > fallback->separation) fallback = OffsetChoice{r, sep, false};
  }
  if (!fallback) throw InvalidArgument("no rotation offset gives the expected degree shape");
  return *fallback;
}

}  // namespace flipdist::sphere

#endif  // FLIPDIST_SPHERE_ZIGZAG_HPP_
