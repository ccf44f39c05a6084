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

#ifndef FLIPDIST_LP_CHAIN_HPP_
#define FLIPDIST_LP_CHAIN_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/oriented.hpp"
#include "flipdist/core/rational.hpp"
#include "flipdist/core/triangulation.hpp"

namespace flipdist::lp {

// Sparse rational combination of oriented triangles, keyed by the sorted
// triple. Zero coefficients are never stored.
class Chain {
 public:
  using Terms = std::map<TriangleKey, Rational>;

  Chain() = default;

  // Adds q times t; a negatively oriented t contributes -q to its key.
  void add(const OrientedTriangle& t, const Rational& q) {
    if (q == 0) return;
    auto [it, inserted] = terms_.try_emplace(t.v, 0);
    if (t.sign > 0) {
      it->second += q;
    } else {
      it->second -= q;
    }
    if (it->second == 0) terms_.erase(it);
  }

  void set(const OrientedTriangle& t, const Rational& q) {
    terms_.erase(t.v);
    add(t, q);
  }

  // Coefficient of t with its orientation, so coefficient(t.reversed()) is
  // the negative of coefficient(t).
  Rational coefficient(const OrientedTriangle& t) const {
    auto it = terms_.find(t.v);
    if (it == terms_.end()) return 0;
    return t.sign > 0 ? it->second : Rational(-it->second);
  }

  Rational operator()(int i, int j, int k) const {
    return coefficient(OrientedTriangle::make(i, j, k));
  }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Chain& operator+=(const Chain& o) {
    for (const auto& [k, q] : o.terms_) add({k, 1}, q);
    return *this;
  }
  Chain& operator-=(const Chain& o) {
    for (const auto& [k, q] : o.terms_) add({k, -1}, q);
    return *this;
  }
  Chain& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [k, q] : terms_) q *= s;
    }
    return *this;
  }
  friend Chain operator+(Chain a, const Chain& b) { return a += b; }
  friend Chain operator-(Chain a, const Chain& b) { return a -= b; }
  friend Chain operator-(Chain a) { return a *= Rational(-1); }

  // Pairing of two chains in the triangle basis.
  Rational dot(const Chain& o) const {
    const Chain& small = size() <= o.size() ? *this : o;
    const Chain& big = size() <= o.size() ? o : *this;
    Rational s = 0;
    for (const auto& [k, q] : small.terms_) {
      auto it = big.terms_.find(k);
      if (it != big.terms_.end()) s += q * it->second;
    }
    return s;
  }

  Rational coefficient_sum() const {
    Rational s = 0;
    for (const auto& [k, q] : terms_) s += q;
    return s;
  }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  Terms terms_;
};

// Dual vector of the flip LP. Antisymmetric because storage is canonical.
using WeightFunction = Chain;

inline std::string to_string(const Chain& c) {
  if (c.empty()) return "0";
  std::string out;
  for (const auto& [k, q] : c.terms()) {
    if (!out.empty()) out += " ";
    out += (q > 0 ? "+" : "") + flipdist::to_string(q) + "*" +
           flipdist::to_string(OrientedTriangle{k, 1});
  }
  return out;
}

// Sum of the counterclockwise faces of t.
inline Chain chain_of(const Triangulation& t) {
  Chain c;
  for (const auto& f : triangles_of(t)) c.add(f, 1);
  return c;
}

inline Chain boundary(const OrientedTetrahedron& t) {
  Chain c;
  for (const auto& f : t.boundary_faces()) c.add(f, 1);
  return c;
}

// Colexicographic ranks of sorted tuples; dense indices for matrix rows
// and columns.
inline std::uint64_t triangle_rank(const TriangleKey& v) {
  return binomial(v[0], 1) + binomial(v[1], 2) + binomial(v[2], 3);
}
inline std::uint64_t quadruple_rank(const std::array<int, 4>& v) {
  return binomial(v[0], 1) + binomial(v[1], 2) + binomial(v[2], 3) + binomial(v[3], 4);
}

inline constexpr int kDefaultLpMaxN = 12;

// The boundary operator as a sparse matrix. Rows are canonical triangles
// in colex order; column 2q is the positive tetrahedron with colex rank q and
// column 2q+1 its reverse.
struct BoundaryMatrix {
  struct Entry {
    int row;
    int value;
  };

  int vertex_count = 0;
  std::vector<TriangleKey> row_triangles;
  std::vector<OrientedTetrahedron> column_tetrahedra;
  std::vector<std::array<Entry, 4>> columns;

  int rows() const { return static_cast<int>(row_triangles.size()); }
  int cols() const { return static_cast<int>(columns.size()); }
};

inline BoundaryMatrix boundary_matrix(int n, int max_n = kDefaultLpMaxN) {
  if (n < 1) throw InvalidArgument("n must be at least 1");
  if (n > max_n)
    throw SizeLimitError("boundary matrix capped at n=" + std::to_string(max_n) +
                         ", got n=" + std::to_string(n));
  BoundaryMatrix m;
  const int count = n + 2;
  m.vertex_count = count;
  m.row_triangles.resize(binomial(count, 3));
  for (int k = 2; k < count; ++k) {
    for (int j = 1; j < k; ++j) {
      for (int i = 0; i < j; ++i) {
        TriangleKey key{i, j, k};
        m.row_triangles[triangle_rank(key)] = key;
      }
    }
  }
  const std::size_t quads = binomial(count, 4);
  m.column_tetrahedra.resize(2 * quads);
  m.columns.resize(2 * quads);
  for (int l = 3; l < count; ++l) {
    for (int k = 2; k < l; ++k) {
      for (int j = 1; j < k; ++j) {
        for (int i = 0; i < j; ++i) {
          const std::size_t q = quadruple_rank({i, j, k, l});
          auto pos = OrientedTetrahedron::make(i, j, k, l);
          auto faces = pos.boundary_faces();
          for (int s = 0; s < 2; ++s) {
            const std::size_t col = 2 * q + s;
            m.column_tetrahedra[col] = s == 0 ? pos : pos.reversed();
            for (int f = 0; f < 4; ++f) {
              m.columns[col][f] = {static_cast<int>(triangle_rank(faces[f].v)),
                                   s == 0 ? faces[f].sign : -faces[f].sign};
            }
          }
        }
      }
    }
  }
  return m;
}

}  // namespace flipdist::lp

#endif  // FLIPDIST_LP_CHAIN_HPP_
