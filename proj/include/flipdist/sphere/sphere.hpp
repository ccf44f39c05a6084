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

#ifndef FLIPDIST_SPHERE_SPHERE_HPP_
#define FLIPDIST_SPHERE_SPHERE_HPP_

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/oriented.hpp"
#include "flipdist/core/triangulation.hpp"

namespace flipdist::sphere {

using Face = std::array<int, 3>;  // counterclockwise seen from outside

class SharedDiagonalError : public Error {
 public:
  using Error::Error;
};

// Closed triangulated sphere glued from two triangulations of one polygon:
// the first one's faces counterclockwise, the second one's reversed, so all
// faces point outward. On a simple sphere every directed edge lies on exactly
// one face, which gives the rotation system.
class SphereTriangulation {
 public:
  SphereTriangulation(int n, std::vector<Face> faces, bool simple)
      : n_(n), count_(n + 2), faces_(std::move(faces)), simple_(simple) {
    const int N = count_;
    adjacency_.resize(N);
    for (const Face& f : faces_) {
      for (int e = 0; e < 3; ++e) {
        int a = f[e], b = f[(e + 1) % 3];
        adjacency_[a].push_back(b);
        adjacency_[b].push_back(a);
      }
    }
    for (auto& nb : adjacency_) {
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    for (int v = 0; v < N; ++v) {
      for (int u : adjacency_[v]) {
        if (v < u) edges_.push_back({v, u});
      }
    }
    if (simple_) {
      succ_.assign(N * N, -1);
      face_of_.assign(N * N, -1);
      for (int fi = 0; fi < static_cast<int>(faces_.size()); ++fi) {
        const Face& f = faces_[fi];
        for (int e = 0; e < 3; ++e) {
          const int a = f[e], b = f[(e + 1) % 3], c = f[(e + 2) % 3];
          if (face_of_[a * N + b] >= 0) throw InvalidArgument("directed edge on two faces");
          face_of_[a * N + b] = fi;
          succ_[a * N + b] = c;
        }
      }
      for (const auto& [a, b] : edges_) {
        if (face_of_[a * N + b] < 0 || face_of_[b * N + a] < 0)
          throw InvalidArgument("edge with a single face");
      }
    }
    dist_.assign(N * N, -1);
    for (int s = 0; s < N; ++s) {
      std::vector<int> queue = {s};
      dist_[s * N + s] = 0;
      for (std::size_t h = 0; h < queue.size(); ++h) {
        const int x = queue[h];
        for (int y : adjacency_[x]) {
          if (dist_[s * N + y] < 0) {
            dist_[s * N + y] = dist_[s * N + x] + 1;
            queue.push_back(y);
          }
        }
      }
    }
  }

  int n() const { return n_; }
  int vertex_count() const { return count_; }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool simple() const { return simple_; }

  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const { return faces_[f]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

  bool has_edge(int a, int b) const {
    return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
  }

  // Face containing the directed edge a->b.
  int face_of(int a, int b) const {
    require_simple();
    return face_of_[a * count_ + b];
  }
  // Third vertex of the face containing a->b; the neighbor after b when
  // turning counterclockwise around a.
  int succ(int a, int b) const {
    require_simple();
    return succ_[a * count_ + b];
  }
  // Neighbor before b counterclockwise around a.
  int pred(int a, int b) const { return succ(b, a); }

  // Neighbors of v in counterclockwise order starting from the smallest.
  std::vector<int> rotation(int v) const {
    require_simple();
    std::vector<int> order = {adjacency_[v].front()};
    for (int u = succ(v, order[0]); u != order[0]; u = succ(v, u)) order.push_back(u);
    return order;
  }

  int distance(int a, int b) const { return dist_[a * count_ + b]; }

  // Index of the face whose vertex set is {a,b,c}, or -1.
  int find_face(int a, int b, int c) const {
    if (!simple_) {
      for (int f = 0; f < face_count(); ++f) {
        Face s = faces_[f];
        std::sort(s.begin(), s.end());
        Face q = {a, b, c};
        std::sort(q.begin(), q.end());
        if (s == q) return f;
      }
      return -1;
    }
    if (!has_edge(a, b)) return -1;
    int f = face_of(a, b);
    if (succ(a, b) == c) return f;
    f = face_of(b, a);
    return succ(b, a) == c ? f : -1;
  }

  // Number of triangle sides present as edges of the sphere.
  int sides_present(int a, int b, int c) const {
    return has_edge(a, b) + has_edge(b, c) + has_edge(a, c);
  }

 private:
  void require_simple() const {
    if (!simple_) throw InvalidArgument("operation needs a simple sphere");
  }

  int n_;
  int count_;
  std::vector<Face> faces_;
  bool simple_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> succ_;
  std::vector<int> face_of_;
  std::vector<int> dist_;
};

enum class UnionMode { kStrict, kRelaxed };

// Faces of `inner` counterclockwise and of `outer` reversed.
inline SphereTriangulation sphere_union(const Triangulation& inner, const Triangulation& outer,
                                        UnionMode mode = UnionMode::kStrict) {
  if (inner.n() != outer.n()) throw InvalidArgument("triangulations have different n");
  for (const Triangulation* t : {&inner, &outer}) {
    auto v = validate(*t);
    if (!v.empty()) throw InvalidTriangulation(v.front().message);
  }
  bool shared = false;
  for (Diagonal d : inner.diagonals()) {
    if (outer.contains(d)) {
      if (mode == UnionMode::kStrict)
        throw SharedDiagonalError("diagonal " + to_string(d) + " is in both triangulations");
      shared = true;
    }
  }
  std::vector<Face> faces;
  for (const auto& f : triangles_of(inner)) faces.push_back({f.v[0], f.v[1], f.v[2]});
  for (const auto& f : triangles_of(outer)) faces.push_back({f.v[0], f.v[2], f.v[1]});
  return SphereTriangulation(inner.n(), std::move(faces), !shared);
}

inline std::map<int, int> degree_histogram(const SphereTriangulation& s) {
  std::map<int, int> h;
  for (int v = 0; v < s.vertex_count(); ++v) ++h[s.degree(v)];
  return h;
}

inline int graph_distance(const SphereTriangulation& s, int x, int y) {
  if (x < 0 || y < 0 || x >= s.vertex_count() || y >= s.vertex_count())
    throw InvalidArgument("vertex out of range");
  return s.distance(x, y);
}

inline std::string histogram_to_string(const std::map<int, int>& h) {
  std::string out = "{";
  for (const auto& [d, c] : h) {
    if (out.size() > 1) out += ",";
    out += std::to_string(d) + ":" + std::to_string(c);
  }
  return out + "}";
}

// One "i j k s" line per face; s is '+' for faces of the inner
// triangulation (increasing labels counterclockwise) and '-' otherwise.
inline std::string faces_to_text(const SphereTriangulation& s) {
  std::string out;
  for (const Face& f : s.faces()) {
    auto t = OrientedTriangle::make(f[0], f[1], f[2]);
    out += std::to_string(t.v[0]) + " " + std::to_string(t.v[1]) + " " +
           std::to_string(t.v[2]) + " " + (t.sign > 0 ? "+" : "-") + "\n";
  }
  return out;
}

inline std::string sphere_to_dot(const SphereTriangulation& s) {
  std::string out = "graph sphere {\n";
  for (int v = 0; v < s.vertex_count(); ++v)
    out += "  " + std::to_string(v) + " [label=\"" + std::to_string(v) + " (" +
           std::to_string(s.degree(v)) + ")\"];\n";
  for (const auto& [a, b] : s.edges())
    out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
  return out + "}\n";
}

inline std::string distances_to_csv(const SphereTriangulation& s) {
  std::string out = "vertex";
  for (int v = 0; v < s.vertex_count(); ++v) out += "," + std::to_string(v);
  out += "\n";
  for (int u = 0; u < s.vertex_count(); ++u) {
    out += std::to_string(u);
    for (int v = 0; v < s.vertex_count(); ++v) out += "," + std::to_string(s.distance(u, v));
    out += "\n";
  }
  return out;
}

}  // namespace flipdist::sphere

#endif  // FLIPDIST_SPHERE_SPHERE_HPP_
