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

#ifndef FLIPDIST_CORE_ORIENTED_HPP_
#define FLIPDIST_CORE_ORIENTED_HPP_

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/triangulation.hpp"

namespace flipdist {

namespace detail {

// Sorts `v` ascending in place and returns the parity of the permutation
// (+1 even, -1 odd).
template <std::size_t N>
constexpr int sort_with_parity(std::array<int, N>& v) {
  int sign = 1;
  for (std::size_t i = 1; i < N; ++i) {
    for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
      std::swap(v[j - 1], v[j]);
      sign = -sign;
    }
  }
  return sign;
}

}  // namespace detail

// Canonical key of an unoriented triangle: strictly increasing labels.
using TriangleKey = std::array<int, 3>;

// A triangle with one of its two orientations. Cyclic rotations of (i,j,k)
// denote the same oriented triangle, a transposition reverses it; stored as
// the sorted triple plus a sign.
struct OrientedTriangle {
  TriangleKey v{};
  int sign = 1;

  static OrientedTriangle make(int i, int j, int k) {
    if (i == j || j == k || i == k)
      throw InvalidArgument("triangle vertices must be distinct");
    OrientedTriangle t;
    t.v = {i, j, k};
    t.sign = detail::sort_with_parity(t.v);
    return t;
  }

  OrientedTriangle reversed() const { return {v, -sign}; }

  // Vertex order realizing this orientation.
  std::array<int, 3> ordered() const {
    return sign > 0 ? v : std::array<int, 3>{v[0], v[2], v[1]};
  }

  friend auto operator<=>(const OrientedTriangle&, const OrientedTriangle&) = default;
  friend bool operator==(const OrientedTriangle&, const OrientedTriangle&) = default;
};

inline std::string to_string(const OrientedTriangle& t) {
  return "(" + std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
         std::to_string(t.v[2]) + ")" + (t.sign > 0 ? "+" : "-");
}

// A vertex quadruple with a sign. The positive tetrahedron on sorted
// vertices i<j<k<l has boundary (ijl)+(jkl)+(kil)+(kji).
struct OrientedTetrahedron {
  std::array<int, 4> v{};
  int sign = 1;

  static OrientedTetrahedron make(int i, int j, int k, int l) {
    OrientedTetrahedron t;
    t.v = {i, j, k, l};
    t.sign = detail::sort_with_parity(t.v);
    if (t.v[0] == t.v[1] || t.v[1] == t.v[2] || t.v[2] == t.v[3])
      throw InvalidArgument("tetrahedron vertices must be distinct");
    return t;
  }

  OrientedTetrahedron reversed() const { return {v, -sign}; }

  // The four signed faces of the boundary.
  std::array<OrientedTriangle, 4> boundary_faces() const {
    const int i = v[0], j = v[1], k = v[2], l = v[3];
    std::array<OrientedTriangle, 4> f = {
        OrientedTriangle::make(i, j, l), OrientedTriangle::make(j, k, l),
        OrientedTriangle::make(k, i, l), OrientedTriangle::make(k, j, i)};
    if (sign < 0) {
      for (auto& x : f) x = x.reversed();
    }
    return f;
  }

  friend auto operator<=>(const OrientedTetrahedron&, const OrientedTetrahedron&) = default;
  friend bool operator==(const OrientedTetrahedron&, const OrientedTetrahedron&) = default;
};

inline std::string to_string(const OrientedTetrahedron& t) {
  return "{" + std::to_string(t.v[0]) + "," + std::to_string(t.v[1]) + "," +
         std::to_string(t.v[2]) + "," + std::to_string(t.v[3]) + "}" +
         (t.sign > 0 ? "+" : "-");
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// 2 * C(vertex_count, 4).
inline std::uint64_t oriented_tetrahedron_count(int vertex_count) {
  return 2 * binomial(vertex_count, 4);
}

// Faces of t, each counterclockwise in the standard convex embedding
// (labels increase counterclockwise, so every face is its sorted triple with
// sign +1). Ordered by canonical key.
inline std::vector<OrientedTriangle> triangles_of(const Triangulation& t) {
  std::vector<OrientedTriangle> out;
  if (t.n() < 1) return out;
  out.reserve(t.n());
  std::vector<std::pair<int, int>> stack = {{0, t.n() + 1}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    if (b - a < 2) continue;
    int apex = -1;
    for (int k = a + 1; k < b; ++k) {
      if (t.has_edge(a, k) && t.has_edge(k, b)) {
        apex = k;
        break;
      }
    }
    if (apex < 0) throw InvalidTriangulation("polygon piece has no triangle");
    out.push_back(OrientedTriangle{{a, apex, b}, 1});
    stack.push_back({a, apex});
    stack.push_back({apex, b});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace flipdist

#endif  // FLIPDIST_CORE_ORIENTED_HPP_
