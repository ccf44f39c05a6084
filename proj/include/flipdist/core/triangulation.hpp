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

#ifndef FLIPDIST_CORE_TRIANGULATION_HPP_
#define FLIPDIST_CORE_TRIANGULATION_HPP_

#include <algorithm>
#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "flipdist/core/error.hpp"

namespace flipdist {

// An unordered vertex pair, stored with a < b.
struct Diagonal {
  int a = 0;
  int b = 0;

  constexpr Diagonal() = default;
  constexpr Diagonal(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

  constexpr bool touches(int v) const { return a == v || b == v; }

  friend constexpr auto operator<=>(const Diagonal&, const Diagonal&) = default;
  friend constexpr bool operator==(const Diagonal&, const Diagonal&) = default;
};

inline std::string to_string(Diagonal d) {
  return "(" + std::to_string(d.a) + "," + std::to_string(d.b) + ")";
}

// Two diagonals of a convex polygon cross iff their endpoints interleave.
constexpr bool crosses(Diagonal x, Diagonal y) {
  return (x.a < y.a && y.a < x.b && x.b < y.b) ||
         (y.a < x.a && x.a < y.b && y.b < x.b);
}

// A set of diagonals of the convex (n+2)-gon with vertices 0..n+1 in
// counterclockwise order. Construction only canonicalizes (sorts and dedups);
// use validate() or Triangulation::checked() to enforce the invariants.
class Triangulation {
 public:
  Triangulation() = default;
  Triangulation(int n, std::vector<Diagonal> diagonals)
      : n_(n), diagonals_(std::move(diagonals)) {
    std::sort(diagonals_.begin(), diagonals_.end());
  }

  // Throws InvalidTriangulation describing the first violated invariant.
  static Triangulation checked(int n, std::vector<Diagonal> diagonals);

  int n() const { return n_; }
  int vertex_count() const { return n_ + 2; }
  std::span<const Diagonal> diagonals() const { return diagonals_; }

  bool contains(Diagonal d) const {
    return std::binary_search(diagonals_.begin(), diagonals_.end(), d);
  }

  bool is_polygon_edge(int x, int y) const {
    Diagonal d(x, y);
    return d.b == d.a + 1 || (d.a == 0 && d.b == n_ + 1);
  }

  // True for polygon sides and diagonals alike.
  bool has_edge(int x, int y) const {
    return is_polygon_edge(x, y) || contains(Diagonal(x, y));
  }

  // Number of diagonals incident to v.
  int diagonal_degree(int v) const {
    return static_cast<int>(std::count_if(
        diagonals_.begin(), diagonals_.end(),
        [v](Diagonal d) { return d.touches(v); }));
  }

  friend bool operator==(const Triangulation&, const Triangulation&) = default;
  friend auto operator<=>(const Triangulation& x, const Triangulation& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.diagonals_ <=> y.diagonals_;
  }

 private:
  int n_ = 0;
  std::vector<Diagonal> diagonals_;
};

// One failed invariant reported by validate().
struct Violation {
  enum class Kind {
    kSize,         // n < 1
    kCount,        // not exactly n-1 diagonals
    kOutOfRange,   // endpoint outside 0..n+1
    kPolygonEdge,  // a "diagonal" that is a polygon side (or a loop)
    kCrossing,     // two diagonals cross
  };
  Kind kind;
  std::string message;
  std::vector<Diagonal> diagonals;
};

inline std::vector<Violation> validate(const Triangulation& t) {
  std::vector<Violation> out;
  const int n = t.n();
  if (n < 1) {
    out.push_back({Violation::Kind::kSize,
                   "n must be at least 1, got " + std::to_string(n), {}});
    return out;
  }
  auto diags = t.diagonals();
  if (static_cast<int>(diags.size()) != n - 1) {
    out.push_back({Violation::Kind::kCount,
                   "expected " + std::to_string(n - 1) + " diagonals, found " +
                       std::to_string(diags.size()),
                   {}});
  }
  for (std::size_t i = 0; i + 1 < diags.size(); ++i) {
    if (diags[i] == diags[i + 1]) {
      out.push_back({Violation::Kind::kCount,
                     "duplicate diagonal " + to_string(diags[i]),
                     {diags[i]}});
    }
  }
  for (Diagonal d : diags) {
    if (d.a < 0 || d.b > n + 1) {
      out.push_back({Violation::Kind::kOutOfRange,
                     "diagonal " + to_string(d) + " out of range", {d}});
    } else if (d.a == d.b || t.is_polygon_edge(d.a, d.b)) {
      out.push_back({Violation::Kind::kPolygonEdge,
                     "diagonal " + to_string(d) + " collides with a polygon edge",
                     {d}});
    }
  }
  for (std::size_t i = 0; i < diags.size(); ++i) {
    for (std::size_t j = i + 1; j < diags.size(); ++j) {
      if (crosses(diags[i], diags[j])) {
        out.push_back({Violation::Kind::kCrossing,
                       "diagonals " + to_string(diags[i]) + " and " +
                           to_string(diags[j]) + " cross",
                       {diags[i], diags[j]}});
      }
    }
  }
  return out;
}

inline bool is_valid(const Triangulation& t) { return validate(t).empty(); }

inline Triangulation Triangulation::checked(int n, std::vector<Diagonal> diagonals) {
  Triangulation t(n, std::move(diagonals));
  auto v = validate(t);
  if (!v.empty()) throw InvalidTriangulation(v.front().message);
  return t;
}

// Apex vertices of the two triangles on either side of diagonal d.
// The first lies strictly between d.a and d.b, the second outside.
inline std::pair<int, int> apexes(const Triangulation& t, Diagonal d) {
  if (!t.contains(d)) throw NotADiagonal(to_string(d) + " is not a diagonal");
  int inner = -1, outer = -1;
  for (int k = d.a + 1; k < d.b; ++k) {
    if (t.has_edge(d.a, k) && t.has_edge(k, d.b)) {
      inner = k;
      break;
    }
  }
  const int count = t.vertex_count();
  for (int step = 1; d.b + step < count + d.a; ++step) {
    int k = (d.b + step) % count;
    if (t.has_edge(d.a, k) && t.has_edge(k, d.b)) {
      outer = k;
      break;
    }
  }
  if (inner < 0 || outer < 0)
    throw InvalidTriangulation("no triangle on both sides of " + to_string(d));
  return {inner, outer};
}

// Replaces d by the other diagonal of the quadrilateral formed by its two
// adjacent triangles. flip(flip(t, d), d') == t.
inline Triangulation flip(const Triangulation& t, Diagonal d) {
  auto [p, q] = apexes(t, d);
  std::vector<Diagonal> next(t.diagonals().begin(), t.diagonals().end());
  *std::find(next.begin(), next.end(), d) = Diagonal(p, q);
  return Triangulation(t.n(), std::move(next));
}

// The diagonal that replaces d under flip(t, d).
inline Diagonal flipped_diagonal(const Triangulation& t, Diagonal d) {
  auto [p, q] = apexes(t, d);
  return Diagonal(p, q);
}

}  // namespace flipdist

#endif  // FLIPDIST_CORE_TRIANGULATION_HPP_
