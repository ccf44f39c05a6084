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

#ifndef FLIPDIST_WEIGHTS_CHECKS_HPP_
#define FLIPDIST_WEIGHTS_CHECKS_HPP_

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "flipdist/core/rational.hpp"
#include "flipdist/lp/certificate.hpp"
#include "flipdist/weights/assemble.hpp"

namespace flipdist::weights {

// Sum of face weights with the sphere's outward orientation.
inline Rational total_weight(const WeightInstance& inst, const WeightTable& w) {
  Rational t = 0;
  for (const auto& [a, b, c] : inst.sphere.faces()) t += w.get(a, b, c);
  return t;
}

struct TetraViolation {
  std::array<int, 4> quadruple{};
  Rational sum;
  std::array<Provenance, 4> classes{};  // of (ijl), (jkl), (kil), (kji)
};

struct SweepReport {
  std::uint64_t checked = 0;
  std::vector<TetraViolation> violations;
  // Tetrahedra with exactly one face on the sphere whose sum exceeds 1.
  std::uint64_t one_face_excess = 0;

  bool ok() const { return violations.empty(); }
};

// Every quadruple i<j<k<l, exactly; violations in lexicographic order.
inline SweepReport check_tetrahedral_constraints(const WeightTable& w, int threads = 1,
                                                 const SphereTriangulation* s = nullptr) {
  const int N = w.vertex_count();
  // Ordered-triple cache to keep the sweep cheap.
  std::vector<Rational> d(static_cast<std::size_t>(N) * N * N, 0);
  auto at = [N](int i, int j, int k) { return (static_cast<std::size_t>(i) * N + j) * N + k; };
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) {
      for (int k = 0; k < N; ++k) {
        if (i != j && j != k && i != k) d[at(i, j, k)] = w.get(i, j, k);
      }
    }
  }
  threads = std::max(1, std::min(threads, N));
  std::vector<SweepReport> part(threads);
  detail::parallel_for(threads, threads, [&](int t) {
    SweepReport& rep = part[t];
    Rational sum;
    for (int i = t; i < N; i += threads) {
      for (int j = i + 1; j < N; ++j) {
        for (int k = j + 1; k < N; ++k) {
          for (int l = k + 1; l < N; ++l) {
            ++rep.checked;
            sum = d[at(i, j, l)];
            sum += d[at(j, k, l)];
            sum += d[at(k, i, l)];
            sum += d[at(k, j, i)];
            if (sum <= 1 && sum >= -1) continue;
            rep.violations.push_back({{i, j, k, l},
                                      sum,
                                      {w.provenance(i, j, l), w.provenance(j, k, l),
                                       w.provenance(k, i, l), w.provenance(k, j, i)}});
            if (s) {
              int faces = int(is_face(*s, i, j, l)) + int(is_face(*s, j, k, l)) +
                          int(is_face(*s, k, i, l)) + int(is_face(*s, k, j, i));
              if (faces == 1) ++rep.one_face_excess;
            }
          }
        }
      }
    }
  });
  SweepReport out;
  for (auto& p : part) {
    out.checked += p.checked;
    out.one_face_excess += p.one_face_excess;
    out.violations.insert(out.violations.end(), p.violations.begin(), p.violations.end());
  }
  std::sort(out.violations.begin(), out.violations.end(),
            [](const auto& x, const auto& y) { return x.quadruple < y.quadruple; });
  return out;
}

struct LemmaCheck {
  std::string name;
  std::uint64_t hypotheses = 0;  // triangles meeting the hypothesis
  std::vector<TriangleKey> counterexamples;

  bool ok() const { return counterexamples.empty(); }
};

struct LemmaReport {
  LemmaCheck flows;     // every flow saturates
  LemmaCheck small;     // non-faces |w| <= 1/2
  LemmaCheck far;       // d(i,j) > c+2, i,j farther than c from the sink: |w| <= 1/4
  LemmaCheck large;     // all sides > 10c: w = 0
  LemmaCheck flat;      // area-0 regions, two-edge and zero-edge classes: w = 0
  LemmaCheck flat_flow; // area-0 one-edge triangles with nonzero flow; reported only

  bool ok() const { return flows.ok() && small.ok() && far.ok() && large.ok() && flat.ok(); }
  std::vector<const LemmaCheck*> all() const {
    return {&flows, &small, &far, &large, &flat, &flat_flow};
  }
};

inline LemmaReport check_lemmas(const AssembledWeights& aw, const WeightInstance& inst) {
  const SphereTriangulation& s = inst.sphere;
  const WeightTable& w = aw.table;
  const int c = aw.config.c;
  LemmaReport rep;
  rep.flows.name = "lemma1-flow";
  rep.small.name = "lemma2-nonface-half";
  rep.far.name = "lemma3-far-quarter";
  rep.large.name = "lemma4-large-zero";
  rep.flat.name = "flat-zero";
  rep.flat_flow.name = "flat-one-edge-flow";
  for (const FlowReport& f : aw.flows) {
    ++rep.flows.hypotheses;
    if (!f.saturated) rep.flows.counterexamples.push_back({f.vertex, f.vertex, f.vertex});
  }
  const std::vector<int> dsink = sink_distance(s, aw.face_weights);
  w.for_each_key([&](const TriangleKey& t, std::size_t) {
    const auto [i, j, k] = t;
    const Rational q = abs(w.get(i, j, k));
    if (!is_face(s, i, j, k)) {
      ++rep.small.hypotheses;
      if (q > Rational(1, 2)) rep.small.counterexamples.push_back(t);
    }
    // Some side (x,y) far apart with both ends far from the sink.
    bool far = false;
    for (auto [x, y] : {std::pair{i, j}, std::pair{j, k}, std::pair{i, k}}) {
      far |= s.distance(x, y) > c + 2 && dsink[x] > c && dsink[y] > c;
    }
    if (far) {
      ++rep.far.hypotheses;
      if (q > Rational(1, 4)) rep.far.counterexamples.push_back(t);
    }
    if (s.distance(i, j) > 10 * c && s.distance(j, k) > 10 * c && s.distance(i, k) > 10 * c) {
      ++rep.large.hypotheses;
      if (q != 0) rep.large.counterexamples.push_back(t);
    }
    if (inst.regions.at(t).tag == sphere::RegionTag::kFlat) {
      LemmaCheck& c =
          w.provenance(i, j, k) == Provenance::kOneEdgeFlow ? rep.flat_flow : rep.flat;
      ++c.hypotheses;
      if (q != 0) c.counterexamples.push_back(t);
    }
  });
  return rep;
}

inline lp::Certificate to_certificate(const AssembledWeights& aw) {
  return lp::Certificate{aw.n, aw.weight_function()};
}

// "i j k class" per sorted triple.
inline std::string provenance_to_text(const WeightTable& w) {
  std::string out;
  w.for_each_key([&](const TriangleKey& t, std::size_t) {
    out += std::to_string(t[0]) + " " + std::to_string(t[1]) + " " + std::to_string(t[2]) + " " +
           to_string(w.provenance(t[0], t[1], t[2])) + "\n";
  });
  return out;
}

inline std::string violations_to_csv(const SweepReport& r) {
  std::string out = "i,j,k,l,sum,bound\n";
  for (const auto& v : r.violations) {
    for (int x : v.quadruple) out += std::to_string(x) + ",";
    out += to_string(v.sum) + ",1\n";
  }
  return out;
}

inline std::string flows_to_csv(const std::vector<FlowReport>& flows) {
  std::string out = "vertex,supply,max_flow,saturated,cut_capacity\n";
  for (const auto& f : flows) {
    out += std::to_string(f.vertex) + "," + to_string(f.supply) + "," + to_string(f.value) + "," +
           (f.saturated ? "1" : "0") + "," + to_string(f.cut_capacity) + "\n";
  }
  return out;
}

inline std::string lemmas_to_csv(const LemmaReport& r) {
  std::string out = "check,hypotheses,counterexamples\n";
  for (const LemmaCheck* c : r.all())
    out += c->name + "," + std::to_string(c->hypotheses) + "," +
           std::to_string(c->counterexamples.size()) + "\n";
  return out;
}

}  // namespace flipdist::weights

#endif  // FLIPDIST_WEIGHTS_CHECKS_HPP_
