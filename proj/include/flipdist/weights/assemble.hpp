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

#ifndef FLIPDIST_WEIGHTS_ASSEMBLE_HPP_
#define FLIPDIST_WEIGHTS_ASSEMBLE_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/oriented.hpp"
#include "flipdist/core/rational.hpp"
#include "flipdist/core/triangulation.hpp"
#include "flipdist/lp/chain.hpp"
#include "flipdist/sphere/region.hpp"
#include "flipdist/sphere/sphere.hpp"
#include "flipdist/sphere/zigzag.hpp"
#include "flipdist/weights/config.hpp"
#include "flipdist/weights/flow.hpp"

namespace flipdist::weights {

using sphere::SphereTriangulation;

enum class Provenance : std::uint8_t { kUnset, kFace, kTwoEdge, kOneEdgeFlow, kZeroEdge };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::kFace:
      return "face";
    case Provenance::kTwoEdge:
      return "two-edge";
    case Provenance::kOneEdgeFlow:
      return "one-edge-flow";
    case Provenance::kZeroEdge:
      return "zero-edge-inductive";
    case Provenance::kUnset:
      break;
  }
  return "unset";
}

// The zig-zag pair, its sphere and the region of every triple.
struct WeightInstance {
  int n = 0;
  int offset = 0;
  Triangulation first;   // zigzag(n), counterclockwise faces
  Triangulation second;  // rotated copy, faces reversed on the sphere
  SphereTriangulation sphere;
  sphere::RegionTable regions;

  int vertex_count() const { return sphere.vertex_count(); }
};

inline WeightInstance make_instance(int n, const VariantConfig& cfg) {
  cfg.validate();
  const int r = cfg.offset ? *cfg.offset : sphere::choose_offset(n, cfg.separation_threshold).r;
  Triangulation a = sphere::zigzag(n);
  Triangulation b = sphere::rotated_zigzag(n, r);
  SphereTriangulation s = sphere::sphere_union(a, b);
  sphere::RegionTable regions(s, sphere::RegionTable::Method::kExact, cfg.threads);
  return WeightInstance{n, r, std::move(a), std::move(b), std::move(s), std::move(regions)};
}

// Dense weights by colex rank of the sorted triple, stored for the sorted
// (positive) orientation.
class WeightTable {
 public:
  explicit WeightTable(int vertex_count)
      : count_(vertex_count),
        value_(binomial(vertex_count, 3), 0),
        provenance_(binomial(vertex_count, 3), Provenance::kUnset) {}

  int vertex_count() const { return count_; }
  std::size_t size() const { return value_.size(); }

  Rational get(int i, int j, int k) const {
    auto t = OrientedTriangle::make(i, j, k);
    const Rational& q = value_[lp::triangle_rank(t.v)];
    return t.sign > 0 ? q : Rational(-q);
  }

  Provenance provenance(int i, int j, int k) const {
    return provenance_[lp::triangle_rank(OrientedTriangle::make(i, j, k).v)];
  }
  bool assigned(int i, int j, int k) const { return provenance(i, j, k) != Provenance::kUnset; }

  // Each triangle is assigned exactly once.
  void set(int i, int j, int k, const Rational& q, Provenance p) {
    auto t = OrientedTriangle::make(i, j, k);
    const auto r = lp::triangle_rank(t.v);
    if (provenance_[r] != Provenance::kUnset)
      throw Error("triangle " + flipdist::to_string(t) + " assigned twice (" +
                  to_string(provenance_[r]) + ", " + to_string(p) + ")");
    value_[r] = t.sign > 0 ? q : Rational(-q);
    provenance_[r] = p;
  }

  // Overwrites a value, keeping the provenance. Used by mutation checks.
  void perturb(int i, int j, int k, const Rational& delta) {
    auto t = OrientedTriangle::make(i, j, k);
    value_[lp::triangle_rank(t.v)] += t.sign > 0 ? delta : Rational(-delta);
  }

  lp::WeightFunction to_chain() const {
    lp::WeightFunction w;
    for_each_key([&](const TriangleKey& key, std::size_t r) { w.add({key, 1}, value_[r]); });
    return w;
  }

  // Visits sorted triples in colex order.
  template <typename F>
  void for_each_key(F&& f) const {
    std::size_t r = 0;
    for (int k = 2; k < count_; ++k) {
      for (int j = 1; j < k; ++j) {
        for (int i = 0; i < j; ++i) f(TriangleKey{i, j, k}, r++);
      }
    }
  }

 private:
  int count_;
  std::vector<Rational> value_;
  std::vector<Provenance> provenance_;
};

inline int edges_in(const SphereTriangulation& s, int i, int j, int k) {
  return int(s.has_edge(i, j)) + int(s.has_edge(j, k)) + int(s.has_edge(i, k));
}

inline bool is_face(const SphereTriangulation& s, int i, int j, int k) {
  return s.find_face(i, j, k) >= 0;
}

// Face weights. Full-variant faces near degree-5 vertices come from the
// local solver; this gives its starting point.
inline std::vector<Rational> base_weights(const SphereTriangulation& s, const VariantConfig& cfg) {
  const auto special = sphere::special_vertices(s);
  std::vector<Rational> fw(s.face_count(), 1);
  if (cfg.variant == Variant::kSimplified) {
    std::vector<int> near(s.vertex_count(), 1 << 20);
    for (int v = 0; v < s.vertex_count(); ++v) {
      for (int x : special) near[v] = std::min(near[v], s.distance(v, x));
    }
    for (int f = 0; f < s.face_count(); ++f) {
      for (int v : s.face(f)) {
        if (near[v] < cfg.r0) fw[f] = 0;
      }
    }
    return fw;
  }
  for (int f = 0; f < s.face_count(); ++f) {
    for (int v : s.face(f)) {
      if (s.degree(v) == 4) fw[f] = Rational(3, 4);
    }
  }
  return fw;
}

// Oriented form of a two-edge triangle at its shared vertex b: the flip of
// b's edge to x turns faces (b,p,x), (b,x,q) into (b,p,q).
struct TwoEdgeShape {
  enum class Kind { kFlip, kFlat, kDegreeFour } kind = Kind::kFlat;
  int b = -1, p = -1, x = -1, q = -1;
};

inline TwoEdgeShape two_edge_shape(const SphereTriangulation& s, int i, int j, int k) {
  const std::array<int, 3> t = {i, j, k};
  int shared = -1;
  for (int m = 0; m < 3; ++m) {
    const int b = t[m], a = t[(m + 1) % 3], c = t[(m + 2) % 3];
    if (s.has_edge(b, a) && s.has_edge(b, c)) shared = m;
  }
  TwoEdgeShape out;
  out.b = t[shared];
  const int a = t[(shared + 1) % 3], c = t[(shared + 2) % 3];
  int matches = 0;
  for (auto [p, q] : {std::pair{a, c}, std::pair{c, a}}) {
    const int x = s.succ(out.b, p);
    if (s.succ(out.b, x) == q) {
      ++matches;
      out.p = p;
      out.x = x;
      out.q = q;
    }
  }
  out.kind = matches == 0   ? TwoEdgeShape::Kind::kFlat
             : matches == 2 ? TwoEdgeShape::Kind::kDegreeFour
                            : TwoEdgeShape::Kind::kFlip;
  return out;
}

// The flip of b's edge to x creates (b,p,q) and its partner (x,q,p). The
// two absorb the drop f1 + f2 - 1 together, split in quarters; a partner of
// degree-four shape is pinned at 0 and leaves the whole drop here. Of an
// uneven split the larger share goes to the shared vertex with the smaller
// label.
inline Rational default_near_magnitude(const SphereTriangulation& s, const std::vector<Rational>& fw,
                                       const TwoEdgeShape& sh) {
  const Rational drop = fw[s.face_of(sh.b, sh.p)] + fw[s.face_of(sh.b, sh.x)] - 1;
  if (drop <= 0) return 0;
  const TwoEdgeShape partner = two_edge_shape(s, sh.x, sh.q, sh.p);
  if (partner.kind != TwoEdgeShape::Kind::kFlip) return drop;
  Rational half = 0;
  while (half + Rational(1, 4) <= drop / 2) half += Rational(1, 4);
  return sh.b < partner.b ? Rational(drop - half) : half;
}

// Two-edge weight of (i,j,k) in that orientation. `near` overrides the
// magnitude for flips next to a face of weight below 1.
inline Rational two_edge_weight(const WeightInstance& inst, const std::vector<Rational>& fw,
                                int i, int j, int k, const VariantConfig& cfg,
                                const std::map<TriangleKey, Rational>* near = nullptr) {
  const SphereTriangulation& s = inst.sphere;
  if (edges_in(s, i, j, k) != 2 || is_face(s, i, j, k))
    throw InvalidArgument("triangle (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ") does not have exactly two edges");
  if (inst.regions.orientation(i, j, k) == 0) return 0;
  const TwoEdgeShape sh = two_edge_shape(s, i, j, k);
  if (sh.kind != TwoEdgeShape::Kind::kFlip) return 0;
  const Rational& f1 = fw[s.face_of(sh.b, sh.p)];
  const Rational& f2 = fw[s.face_of(sh.b, sh.x)];
  Rational mag = 0;
  if (f1 == 1 && f2 == 1) {
    mag = Rational(1, 2);
  } else if (cfg.variant == Variant::kFull) {
    auto key = OrientedTriangle::make(i, j, k).v;
    if (near && near->count(key)) {
      mag = near->at(key);
    } else {
      mag = default_near_magnitude(s, fw, sh);
    }
  }
  // (b,p,q) carries +mag.
  return OrientedTriangle::make(sh.b, sh.p, sh.q).sign * OrientedTriangle::make(i, j, k).sign *
         mag;
}

// Dual network for source vertex s with the flipped faces around s removed.
struct FlowInstance {
  int vertex = -1;
  FlowNetwork net;
  struct EdgeArc {
    int arc = -1;
    int a = -1, b = -1;  // sorted edge ab, arc runs between face_of(a,b) and face_of(b,a)
    int sign = 1;        // +1 if the arc runs face_of(a,b) -> face_of(b,a)
  };
  std::vector<EdgeArc> edge_arcs;
};

// Distance from each vertex to the nearest vertex of a face of weight < 1.
inline std::vector<int> sink_distance(const SphereTriangulation& s, const std::vector<Rational>& fw) {
  std::vector<int> d(s.vertex_count(), 1 << 20);
  for (int f = 0; f < s.face_count(); ++f) {
    if (fw[f] >= 1) continue;
    for (int x : s.face(f)) {
      for (int v = 0; v < s.vertex_count(); ++v) d[v] = std::min(d[v], s.distance(v, x));
    }
  }
  return d;
}

inline FlowInstance build_flow_instance(const WeightInstance& inst, const std::vector<Rational>& fw,
                                        const WeightTable& partial, int src,
                                        const VariantConfig& cfg) {
  const SphereTriangulation& s = inst.sphere;
  if (src < 0 || src >= s.vertex_count()) throw InvalidArgument("source vertex out of range");
  FlowInstance out;
  out.vertex = src;
  const auto& nb = s.neighbors(src);
  std::vector<char> removed(s.face_count(), 0);
  for (int v : nb) removed[s.face_of(src, v)] = 1;
  struct Outer {
    int f, v, u, vp;
  };
  std::vector<Outer> outer;
  for (int v : nb) {
    const int vp = s.succ(src, v);
    const int of = s.face_of(vp, v);
    outer.push_back({of, v, s.succ(vp, v), vp});
    removed[of] = 1;
  }
  std::vector<int> node(s.face_count(), -1);
  for (int f = 0; f < s.face_count(); ++f) {
    if (!removed[f]) node[f] = out.net.add_node("f" + std::to_string(f));
  }
  out.net.source_value = 0;
  for (const Outer& o : outer) {
    for (auto [x, y] : {std::pair{o.v, o.u}, std::pair{o.u, o.vp}}) {
      Rational q = partial.get(src, x, y);
      if (q == 0) continue;
      if (q < 0) throw Error("negative source weight at vertex " + std::to_string(src));
      const int g = s.face_of(y, x);
      if (node[g] < 0) throw Error("source arc into a flipped face at vertex " + std::to_string(src));
      out.net.add_arc(out.net.source, node[g], q, true);
      out.net.source_value += q;
    }
  }
  const std::vector<int> dsink =
      cfg.variant == Variant::kFull ? sink_distance(s, fw) : std::vector<int>(s.vertex_count(), 1 << 20);
  std::vector<char> is_nb(s.vertex_count(), 0);
  for (int v : nb) is_nb[v] = 1;
  for (const auto& [a, b] : s.edges()) {
    if (a == src || b == src || is_nb[a] || is_nb[b]) continue;
    const int F = s.face_of(a, b), G = s.face_of(b, a);
    if (node[F] < 0 || node[G] < 0) continue;
    const int dsrc = std::min(s.distance(src, a), s.distance(src, b));
    const int d = std::min(dsrc, std::min(dsink[a], dsink[b]));
    const Rational cap = d <= cfg.c ? Rational(1, 2) : Rational(1, 4);
    int o = d <= cfg.direction_radius() ? inst.regions.orientation(src, a, b) : 0;
    FlowInstance::EdgeArc e{static_cast<int>(out.net.arcs.size()), a, b, 1};
    if (o == -1) {
      out.net.add_arc(node[G], node[F], cap, true);
      e.sign = -1;
    } else {
      out.net.add_arc(node[F], node[G], cap, o == 1);
    }
    out.edge_arcs.push_back(e);
  }
  for (int f = 0; f < s.face_count(); ++f) {
    if (node[f] >= 0 && fw[f] < 1) out.net.add_arc(node[f], out.net.sink, 1 - fw[f], true);
  }
  return out;
}

struct FlowReport {
  int vertex = -1;
  Rational supply;
  Rational value;
  bool saturated = false;
  bool feasible = false;
  Rational cut_capacity;
  std::vector<std::string> cut;  // labels on the source side of a minimum cut
};

// Oriented one-edge weights of (s,a,b): the net flow from face_of(a,b) to
// face_of(b,a).
inline std::vector<std::pair<TriangleKey, Rational>> one_edge_weights(const FlowInstance& fi,
                                                                      const FlowResult& r) {
  std::vector<std::pair<TriangleKey, Rational>> out;
  for (const auto& e : fi.edge_arcs) out.push_back({{fi.vertex, e.a, e.b}, e.sign * r.arc_flow[e.arc]});
  return out;
}

struct AssembledWeights {
  int n = 0;
  int offset = 0;
  VariantConfig config;
  std::vector<Rational> face_weights;
  WeightTable table{3};
  std::vector<FlowReport> flows;
  int three_edge_nonfaces = 0;  // classified with the zero-edge triangles

  Rational get(int i, int j, int k) const { return table.get(i, j, k); }
  lp::WeightFunction weight_function() const { return table.to_chain(); }
};

// Zero-edge weight of the positively oriented (i,j,k); every sub-triangle
// of strictly smaller area must already be in `w`.
inline Rational zero_edge_weight(const WeightInstance& inst, const WeightTable& w, int i, int j,
                                 int k, std::optional<int>* witness = nullptr) {
  const auto& reg = inst.regions.at(OrientedTriangle::make(i, j, k).v);
  if (reg.degenerate()) return 0;
  const int A = reg.area();
  std::set<int> verts;
  for (int f : reg.faces) {
    for (int v : inst.sphere.face(f)) verts.insert(v);
  }
  Rational best = 0;
  for (int l : verts) {
    if (l == i || l == j || l == k) continue;
    const auto& R = inst.regions;
    if (R.area(i, j, l) >= A || R.area(j, k, l) >= A || R.area(k, i, l) >= A) continue;
    for (auto [x, y] : {std::pair{i, j}, std::pair{j, k}, std::pair{k, i}}) {
      if (!w.assigned(x, y, l))
        throw Error("induction order: (" + std::to_string(x) + "," + std::to_string(y) + "," +
                    std::to_string(l) + ") is not yet assigned");
    }
    Rational f = w.get(i, j, l) + w.get(j, k, l) + w.get(k, i, l) - 1;
    if (f > best) {
      best = f;
      if (witness) *witness = l;
    }
  }
  return best;
}

namespace detail {

template <typename F>
void parallel_for(int count, int threads, F&& f) {
  threads = std::max(1, std::min(threads, count));
  if (threads == 1) {
    for (int i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (int i = t; i < count; i += threads) f(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

// Four-class assembly with given face weights and near-special two-edge
// magnitudes.
inline AssembledWeights assemble_with(const WeightInstance& inst, const VariantConfig& cfg,
                                      std::vector<Rational> fw,
                                      const std::map<TriangleKey, Rational>* near = nullptr) {
  const SphereTriangulation& s = inst.sphere;
  const int N = s.vertex_count();
  AssembledWeights out;
  out.n = inst.n;
  out.offset = inst.offset;
  out.config = cfg;
  out.table = WeightTable(N);
  WeightTable& w = out.table;

  for (int f = 0; f < s.face_count(); ++f) {
    const auto& [a, b, c] = s.face(f);
    w.set(a, b, c, fw[f], Provenance::kFace);
  }
  w.for_each_key([&](const TriangleKey& t, std::size_t) {
    const auto [i, j, k] = t;
    if (edges_in(s, i, j, k) == 2)
      w.set(i, j, k, two_edge_weight(inst, fw, i, j, k, cfg, near), Provenance::kTwoEdge);
  });

  std::vector<FlowInstance> nets(N);
  std::vector<FlowResult> results(N);
  detail::parallel_for(N, cfg.threads, [&](int v) {
    nets[v] = build_flow_instance(inst, fw, w, v, cfg);
    results[v] = max_flow(nets[v].net);
  });
  for (int v = 0; v < N; ++v) {
    FlowReport rep;
    rep.vertex = v;
    rep.supply = nets[v].net.source_value;
    rep.value = results[v].value;
    rep.saturated = results[v].saturates(nets[v].net);
    rep.feasible = is_feasible(nets[v].net, results[v]);
    rep.cut_capacity = results[v].cut_capacity;
    for (int x : results[v].cut) rep.cut.push_back(nets[v].net.labels[x]);
    out.flows.push_back(std::move(rep));
    for (const auto& [t, q] : one_edge_weights(nets[v], results[v]))
      w.set(t[0], t[1], t[2], q, Provenance::kOneEdgeFlow);
  }

  // Remaining triples by increasing area, ties in colex order.
  std::vector<std::pair<int, TriangleKey>> rest;
  w.for_each_key([&](const TriangleKey& t, std::size_t) {
    if (w.assigned(t[0], t[1], t[2])) return;
    if (edges_in(s, t[0], t[1], t[2]) == 3) ++out.three_edge_nonfaces;
    rest.push_back({inst.regions.at(t).area(), t});
  });
  std::stable_sort(rest.begin(), rest.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::size_t lo = 0;
  while (lo < rest.size()) {
    std::size_t hi = lo;
    while (hi < rest.size() && rest[hi].first == rest[lo].first) ++hi;
    // Same-area triangles never depend on each other.
    std::vector<Rational> val(hi - lo);
    detail::parallel_for(static_cast<int>(hi - lo), cfg.threads, [&](int x) {
      auto [i, j, k] = rest[lo + x].second;
      const int o = inst.regions.orientation(i, j, k);
      if (o == -1) std::swap(j, k);
      val[x] = o == 0 ? Rational(0) : zero_edge_weight(inst, w, i, j, k);
    });
    for (std::size_t x = lo; x < hi; ++x) {
      auto [i, j, k] = rest[x].second;
      if (inst.regions.orientation(i, j, k) == -1) std::swap(j, k);
      w.set(i, j, k, val[x - lo], Provenance::kZeroEdge);
    }
    lo = hi;
  }
  out.face_weights = std::move(fw);
  return out;
}

}  // namespace flipdist::weights

#endif  // FLIPDIST_WEIGHTS_ASSEMBLE_HPP_
