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

#ifndef FLIPDIST_WEIGHTS_FULL_HPP_
#define FLIPDIST_WEIGHTS_FULL_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/rational.hpp"
#include "flipdist/weights/assemble.hpp"
#include "flipdist/weights/checks.hpp"

namespace flipdist::weights {

class SolverFailure : public Error {
 public:
  using Error::Error;
};

inline constexpr int kTargetReducedFaces = 24;

struct SolverOptions {
  int max_face_choices = 1000;  // subsets of degree-5 faces tried
  int descent_seeds = 2;        // best face choices refined by descent
  int max_passes = 3;           // coordinate-descent sweeps per seed
};

// Score of one candidate; lower is better, compared lexicographically.
struct SolverScore {
  std::size_t violations = 0;
  Rational shortfall = 0;  // summed source value not carried by max flow

  friend bool operator<(const SolverScore& a, const SolverScore& b) {
    if (a.violations != b.violations) return a.violations < b.violations;
    return a.shortfall < b.shortfall;
  }
};

struct SolverResult {
  bool success = false;
  std::vector<Rational> face_weights;
  std::map<TriangleKey, Rational> near;  // two-edge magnitudes next to reduced faces
  SolverScore score;
  int reduced_faces = 0;
  Rational total;
  std::vector<TetraViolation> violated;  // of the best candidate
  std::uint64_t evaluations = 0;
};

// Degree-4-adjacent faces at 3/4 plus, at every degree-5 vertex, an equal
// number of its remaining faces, to reach 24 reduced faces. Choices are
// listed with the per-vertex subsets in lexicographic order.
inline std::vector<std::vector<Rational>> face_choices(const SphereTriangulation& s,
                                                       const VariantConfig& cfg, int limit) {
  std::vector<Rational> base = base_weights(s, cfg);
  int reduced = 0;
  for (const auto& q : base) reduced += q < 1;
  std::vector<std::vector<int>> groups;
  for (int v = 0; v < s.vertex_count(); ++v) {
    if (s.degree(v) != 5) continue;
    std::vector<int> g;
    for (int u : s.rotation(v)) {
      const int f = s.face_of(v, u);
      if (base[f] == 1) g.push_back(f);
    }
    std::sort(g.begin(), g.end());
    groups.push_back(std::move(g));
  }
  const int need = kTargetReducedFaces - reduced;
  if (groups.empty() || need < 0 || need % static_cast<int>(groups.size()) != 0)
    throw SolverFailure("cannot split " + std::to_string(need) + " reduced faces over " +
                        std::to_string(groups.size()) + " degree-5 vertices");
  const int each = need / static_cast<int>(groups.size());
  std::vector<std::vector<std::vector<int>>> subsets;
  std::uint64_t total = 1;
  for (const auto& g : groups) {
    if (each > static_cast<int>(g.size())) throw SolverFailure("degree-5 vertex has too few faces");
    std::vector<std::vector<int>> list;
    std::vector<char> pick(g.size(), 0);
    std::fill(pick.begin(), pick.begin() + each, 1);
    do {
      std::vector<int> sub;
      for (std::size_t x = 0; x < g.size(); ++x) {
        if (pick[x]) sub.push_back(g[x]);
      }
      list.push_back(std::move(sub));
    } while (std::prev_permutation(pick.begin(), pick.end()));
    total *= list.size();
    if (total > static_cast<std::uint64_t>(limit)) throw SolverFailure("too many face assignments");
    subsets.push_back(std::move(list));
  }
  std::vector<std::vector<Rational>> out;
  std::vector<std::size_t> at(subsets.size(), 0);
  for (;;) {
    std::vector<Rational> fw = base;
    bool clash = false;
    for (std::size_t g = 0; g < subsets.size(); ++g) {
      for (int f : subsets[g][at[g]]) {
        clash |= fw[f] < 1;
        fw[f] = Rational(3, 4);
      }
    }
    if (!clash) out.push_back(std::move(fw));
    std::size_t g = subsets.size();
    while (g > 0 && ++at[g - 1] == subsets[g - 1].size()) at[--g] = 0;
    if (g == 0) break;
  }
  if (out.empty()) throw SolverFailure("no face assignment reaches 24 reduced faces");
  return out;
}

// Two-edge flips with a supporting face below weight 1, keyed by sorted triple.
inline std::vector<TriangleKey> near_two_edge(const WeightInstance& inst,
                                              const std::vector<Rational>& fw) {
  const SphereTriangulation& s = inst.sphere;
  std::vector<TriangleKey> out;
  WeightTable(s.vertex_count()).for_each_key([&](const TriangleKey& t, std::size_t) {
    if (edges_in(s, t[0], t[1], t[2]) != 2) return;
    if (inst.regions.at(t).degenerate()) return;
    const TwoEdgeShape sh = two_edge_shape(s, t[0], t[1], t[2]);
    if (sh.kind != TwoEdgeShape::Kind::kFlip) return;
    if (fw[s.face_of(sh.b, sh.p)] < 1 || fw[s.face_of(sh.b, sh.x)] < 1) out.push_back(t);
  });
  return out;
}

inline SolverScore score_of(const AssembledWeights& aw, const SweepReport& sw) {
  SolverScore sc;
  sc.violations = sw.violations.size();
  for (const auto& f : aw.flows) sc.shortfall += f.supply - f.value;
  return sc;
}

// Face weights near degree-5 vertices and two-edge weights next to reduced
// faces for the full variant: every face assignment is scored with default
// two-edge values, then the best few are refined by coordinate descent over
// {0, 1/4, 1/2, 3/4, 1}. Deterministic.
inline SolverResult solve_near_special(const WeightInstance& inst, const VariantConfig& cfg,
                                       const SolverOptions& opt = {}) {
  const std::vector<Rational> grid = {0, Rational(1, 4), Rational(1, 2), Rational(3, 4), 1};
  SolverResult best;
  bool have = false;
  auto evaluate = [&](const std::vector<Rational>& fw, const std::map<TriangleKey, Rational>& near,
                      SweepReport* keep = nullptr) {
    AssembledWeights aw = assemble_with(inst, cfg, fw, &near);
    SweepReport sw = check_tetrahedral_constraints(aw.table, cfg.threads);
    ++best.evaluations;
    SolverScore sc = score_of(aw, sw);
    if (keep) *keep = std::move(sw);
    return sc;
  };
  auto defaults = [&](const std::vector<Rational>& fw) {
    std::map<TriangleKey, Rational> near;
    for (const auto& t : near_two_edge(inst, fw)) {
      const TwoEdgeShape sh = two_edge_shape(inst.sphere, t[0], t[1], t[2]);
      const Rational w = two_edge_weight(inst, fw, sh.b, sh.p, sh.q, cfg);
      near[t] = w;
    }
    return near;
  };

  std::vector<std::pair<SolverScore, int>> ranked;
  const auto choices = face_choices(inst.sphere, cfg, opt.max_face_choices);
  for (int x = 0; x < static_cast<int>(choices.size()); ++x)
    ranked.push_back({evaluate(choices[x], defaults(choices[x])), x});
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  const int seeds = std::min<int>(opt.descent_seeds, static_cast<int>(ranked.size()));
  for (int sd = 0; sd < seeds; ++sd) {
    const auto& fw = choices[ranked[sd].second];
    auto near = defaults(fw);
    SolverScore cur = ranked[sd].first;
    for (int pass = 0; pass < opt.max_passes && cur.violations > 0; ++pass) {
      bool moved = false;
      for (auto& [key, val] : near) {
        for (const Rational& g : grid) {
          if (g == val) continue;
          const Rational old = val;
          val = g;
          SolverScore sc = evaluate(fw, near);
          if (sc < cur) {
            cur = sc;
            moved = true;
          } else {
            val = old;
          }
        }
      }
      if (!moved) break;
    }
    if (!have || cur < best.score) {
      have = true;
      best.score = cur;
      best.face_weights = fw;
      best.near = near;
    }
  }
  SweepReport sw;
  evaluate(best.face_weights, best.near, &sw);
  best.violated = std::move(sw.violations);
  best.reduced_faces = 0;
  best.total = 0;
  for (const auto& q : best.face_weights) {
    best.reduced_faces += q < 1;
    best.total += q;
  }
  best.success = best.score.violations == 0 && best.reduced_faces == kTargetReducedFaces &&
                 best.total == 2 * inst.n - 6;
  return best;
}

struct AssemblyOutcome {
  AssembledWeights weights;
  std::optional<SolverResult> solver;  // full variant only
  bool fell_back = false;              // full variant failed, simplified weights returned
};

// Four-class assembly for the configured variant. A failed full-variant
// solve falls back to the simplified weights and says so.
inline AssemblyOutcome assemble_weight_function(const WeightInstance& inst, const VariantConfig& cfg,
                                                const SolverOptions& opt = {}) {
  cfg.validate();
  AssemblyOutcome out;
  if (cfg.variant == Variant::kSimplified) {
    out.weights = assemble_with(inst, cfg, base_weights(inst.sphere, cfg));
    return out;
  }
  out.solver = solve_near_special(inst, cfg, opt);
  if (out.solver->success) {
    out.weights = assemble_with(inst, cfg, out.solver->face_weights, &out.solver->near);
    return out;
  }
  VariantConfig simple = cfg;
  simple.variant = Variant::kSimplified;
  out.weights = assemble_with(inst, simple, base_weights(inst.sphere, simple));
  out.fell_back = true;
  return out;
}

}  // namespace flipdist::weights

#endif  // FLIPDIST_WEIGHTS_FULL_HPP_
