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

// One PASS/FAIL line per acceptance criterion. All comparisons are exact;
// the only tolerances are the wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "flipdist/core/bijection.hpp"
#include "flipdist/core/binary_tree.hpp"
#include "flipdist/lp/certificate.hpp"
#include "flipdist/lp/chain.hpp"
#include "flipdist/lp/duality.hpp"
#include "flipdist/search/diameter.hpp"
#include "flipdist/search/distance.hpp"
#include "flipdist/search/enumerate.hpp"
#include "flipdist/sphere/zigzag.hpp"
#include "flipdist/weights/checks.hpp"
#include "flipdist/weights/full.hpp"
#include "support/oracle.hpp"

namespace {

using namespace flipdist;

constexpr double kLimitBijection = 30;
constexpr double kLimitCounting = 60;
constexpr double kLimitDistance = 300;
constexpr double kLimitDiameter = 600;
constexpr double kLimitDuality = 600;
constexpr double kLimitShape = 60;
constexpr double kLimitLemma1 = 300;
constexpr double kLimitCertificate = 600;
constexpr std::uint64_t kSeed = 20260101;

int threads = 1;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void run(int id, const char* name, double limit, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit > 0 && dt > limit) {
    o.pass = false;
    o.detail += "; over time limit " + std::to_string(int(limit)) + " s";
  }
  failures += !o.pass;
  std::printf("%s %2d %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), dt);
  std::fflush(stdout);
}

std::vector<std::string> all_trees(int internal) {
  if (internal == 0) return {"L"};
  std::vector<std::string> out;
  for (int left = 0; left < internal; ++left) {
    for (const auto& l : all_trees(left)) {
      for (const auto& r : all_trees(internal - 1 - left)) out.push_back("(" + l + r + ")");
    }
  }
  return out;
}

Outcome bijection() {
  std::uint64_t checked = 0;
  for (int n = 1; n <= 10; ++n) {
    std::set<Triangulation> images;
    for (const auto& text : all_trees(n)) {
      BinaryTree t = tree_from_text(text);
      Triangulation tri = tree_to_triangulation(t);
      if (!is_valid(tri) || tree_to_text(triangulation_to_tree(tri)) != text)
        return {false, "round trip broke at n=" + std::to_string(n) + " tree " + text};
      images.insert(tri);
      ++checked;
    }
    if (images.size() != oracle::catalan(n))
      return {false, "images not distinct at n=" + std::to_string(n)};
  }
  return {true, std::to_string(checked) + " trees, n<=10"};
}

Outcome counting() {
  std::string d;
  for (int n = 1; n <= 12; ++n) {
    const auto c = search::count_triangulations(n);
    if (c != oracle::catalan(n)) return {false, "n=" + std::to_string(n) + " counted " + std::to_string(c)};
  }
  return {true, "Catalan for n<=12, C(12)=" + std::to_string(oracle::catalan(12))};
}

Outcome distances() {
  std::uint64_t pairs = 0;
  for (int n = 1; n <= 6; ++n) {
    auto all = search::enumerate_triangulations(n);
    for (const auto& a : all) {
      auto ref = oracle::bfs(oracle::edges_of(a), n);
      for (const auto& b : all) {
        const int d = search::exact_distance(a, b).distance;
        if (d != ref.at(oracle::edges_of(b)))
          return {false, "mismatch at n=" + std::to_string(n)};
        ++pairs;
      }
    }
  }
  std::mt19937_64 rng(kSeed);
  std::map<int, std::vector<Triangulation>> pool;
  for (int n = 3; n <= 9; ++n) pool[n] = search::enumerate_triangulations(n);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const auto& all = pool[n];
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    const auto& c = all[rng() % all.size()];
    auto d = [](const Triangulation& x, const Triangulation& y) {
      return search::exact_distance(x, y).distance;
    };
    const int ab = d(a, b), ba = d(b, a), bc = d(b, c), ac = d(a, c);
    if (d(a, a) != 0 || ab != ba || ac > ab + bc || (ab == 0) != (a == b))
      return {false, "metric axiom failed at n=" + std::to_string(n)};
  }
  return {true, std::to_string(pairs) + " oracle pairs n<=6, 1000 metric triples n<=9"};
}

Outcome diameters() {
  std::ifstream in(FLIPDIST_DIAMETER_FIXTURES);
  if (!in) return {false, "missing fixture table"};
  std::string detail;
  int n = 0, want = 0, rows = 0;
  while (in >> n >> want) {
    const int got = search::diameter(n, threads).value;
    if (got != want)
      return {false, "n=" + std::to_string(n) + " got " + std::to_string(got) + " want " +
                         std::to_string(want)};
    detail += (detail.empty() ? "" : ",") + std::to_string(got);
    ++rows;
  }
  if (rows != 7) return {false, "fixture table has " + std::to_string(rows) + " rows"};
  return {true, "n=2..8 -> " + detail};
}

Outcome duality() {
  std::uint64_t pairs = 0;
  auto check = [&](const Triangulation& a, const Triangulation& b) -> std::string {
    lp::LPReport r = lp::solve_flip_lp(a, b);
    if (r.status != lp::LpStatus::kOptimal) return "LP not optimal";
    if (r.optimum != r.dual_optimum) return "m* != M*";
    if (r.optimum > search::exact_distance(a, b).distance) return "m* above distance";
    ++pairs;
    return "";
  };
  for (int n = 1; n <= 5; ++n) {
    auto all = search::enumerate_triangulations(n);
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (auto e = check(a, b); !e.empty()) return {false, e + " at n=" + std::to_string(n)};
      }
    }
  }
  std::mt19937_64 rng(kSeed + 1);
  std::map<int, std::vector<Triangulation>> pool;
  for (int n = 6; n <= 8; ++n) pool[n] = search::enumerate_triangulations(n);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 3);
    const auto& all = pool[n];
    const auto& a = all[rng() % all.size()];
    const auto& b = all[rng() % all.size()];
    if (auto e = check(a, b); !e.empty()) return {false, e + " at n=" + std::to_string(n)};
  }
  return {true, std::to_string(pairs) + " pairs, m* = M* <= d"};
}

Outcome square() {
  Triangulation ti(2, {{0, 2}}), tf(2, {{1, 3}});
  const lp::Chain diff = lp::chain_of(tf) - lp::chain_of(ti);
  if (diff != lp::boundary(OrientedTetrahedron::make(0, 1, 2, 3)))
    return {false, "chain difference is not the boundary of {0,1,2,3}+"};
  lp::LPReport r = lp::solve_flip_lp(ti, tf);
  if (r.optimum != 1 || r.dual_optimum != 1) return {false, "m*=" + to_string(r.optimum)};
  return {true, "chain(Tf)-chain(Ti) = boundary({0,1,2,3},+), m*=M*=1"};
}

Outcome shape() {
  std::string detail;
  for (int n : {16, 25, 36, 49}) {
    const int r = sphere::choose_offset(n).r;
    auto s = sphere::zigzag_sphere(n, r);
    if (s.vertex_count() != n + 2 || s.face_count() != 2 * n || s.edge_count() != 3 * n)
      return {false, "counts at n=" + std::to_string(n)};
    if (!sphere::has_expected_shape(s)) return {false, "histogram at n=" + std::to_string(n)};
    detail += (detail.empty() ? "" : " ") + std::to_string(n) + ":" +
              sphere::histogram_to_string(sphere::degree_histogram(s));
  }
  return {true, detail};
}

struct Simplified {
  weights::WeightInstance inst;
  weights::AssembledWeights aw;
};

const Simplified& simplified(int n) {
  static std::map<int, Simplified> cache;
  auto it = cache.find(n);
  if (it == cache.end()) {
    auto cfg = weights::default_config(weights::Variant::kSimplified);
    cfg.threads = threads;
    auto inst = weights::make_instance(n, cfg);
    auto aw = weights::assemble_weight_function(inst, cfg).weights;
    it = cache.emplace(n, Simplified{std::move(inst), std::move(aw)}).first;
  }
  return it->second;
}

Outcome lemma1() {
  std::string detail;
  for (int n : {16, 25}) {
    const auto& f = simplified(n);
    for (int v = 0; v < f.inst.vertex_count(); ++v) {
      auto fi = weights::build_flow_instance(f.inst, f.aw.face_weights, f.aw.table, v, f.aw.config);
      auto r = weights::max_flow(fi.net);
      if (r.value != fi.net.source_value || !weights::is_feasible(fi.net, r) ||
          r.cut_capacity != r.value)
        return {false, "n=" + std::to_string(n) + " vertex " + std::to_string(v) + " carries " +
                           to_string(r.value) + " of " + to_string(fi.net.source_value)};
    }
    detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": " +
              std::to_string(f.inst.vertex_count()) + "/" + std::to_string(f.inst.vertex_count()) +
              " sources saturate";
  }
  return {true, detail};
}

Outcome certificate() {
  std::string detail;
  std::optional<Rational> K;
  for (int n : {16, 25}) {
    const auto& f = simplified(n);
    auto sweep = weights::check_tetrahedral_constraints(f.aw.table, threads, &f.inst.sphere);
    if (!sweep.ok())
      return {false, std::to_string(sweep.violations.size()) + " violations at n=" + std::to_string(n)};
    const Rational k = Rational(2 * n) - weights::total_weight(f.inst, f.aw.table);
    if (K && *K != k) return {false, "K differs: " + to_string(*K) + " vs " + to_string(k)};
    K = k;
    detail += "n=" + std::to_string(n) + " total " + to_string(2 * n - k) + " (" +
              std::to_string(sweep.checked) + " quadruples, 0 violations); ";
  }
  return {true, detail + "K=" + to_string(*K)};
}

Outcome full_variant() {
  auto cfg = weights::default_config(weights::Variant::kFull);
  cfg.threads = threads;
  auto inst = weights::make_instance(25, cfg);
  auto res = weights::solve_near_special(inst, cfg);
  if (res.success)
    return {true, "solver found 24 faces at 3/4, total " + to_string(res.total) + ", 0 violations"};
  // The documented alternative: the smallest violated set found.
  if (res.violated.empty()) return {false, "solver failed without a violated set"};
  std::string q;
  for (std::size_t i = 0; i < res.violated.size() && i < 3; ++i) {
    const auto& v = res.violated[i].quadruple;
    q += " {" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) +
         "," + std::to_string(v[3]) + "}";
  }
  return {true, "stretch target not met; documented best: reduced faces " +
                    std::to_string(res.reduced_faces) + ", face total " + to_string(res.total) +
                    ", " + std::to_string(res.score.violations) + " violations (first" + q +
                    "), flow shortfall " + to_string(res.score.shortfall)};
}

Outcome cross_verifier() {
  std::string detail;
  for (int n : {16, 25}) {
    const auto& f = simplified(n);
    auto text = lp::certificate_to_text(weights::to_certificate(f.aw));
    auto cert = lp::certificate_from_text(text);
    const Rational a = lp::verify_certificate(cert.weights, f.inst.second, f.inst.first, threads);
    const Rational b = weights::total_weight(f.inst, f.aw.table);
    if (a != b) return {false, "n=" + std::to_string(n) + ": " + to_string(a) + " vs " + to_string(b)};
    detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + " bound " +
              to_string(a);
  }
  return {true, detail};
}

// +1 on the positively oriented weight of every sorted triple.
Outcome mutation() {
  const auto& f = simplified(16);
  std::uint64_t total = 0, caught = 0, nonzero = 0, nonzero_caught = 0;
  std::string first_missed;
  f.aw.table.for_each_key([&](const TriangleKey& t, std::size_t) {
    weights::WeightTable w = f.aw.table;
    w.perturb(t[0], t[1], t[2], 1);
    const bool hit = !weights::check_tetrahedral_constraints(w, threads).ok();
    ++total;
    caught += hit;
    if (f.aw.get(t[0], t[1], t[2]) != 0) {
      ++nonzero;
      nonzero_caught += hit;
    }
    if (!hit && first_missed.empty())
      first_missed = "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                     std::to_string(t[2]) + ")";
  });
  return {caught == total, std::to_string(caught) + "/" + std::to_string(total) +
                               " mutations reported (nonzero weights " +
                               std::to_string(nonzero_caught) + "/" + std::to_string(nonzero) + ")" +
                               (first_missed.empty() ? "" : "; first missed " + first_missed)};
}

}  // namespace

int main(int argc, char** argv) {
  threads = std::max(1u, std::thread::hardware_concurrency());
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--threads") threads = std::max(1, std::atoi(argv[i + 1]));
  }
  run(1, "bijection", kLimitBijection, bijection);
  run(2, "counting", kLimitCounting, counting);
  run(3, "exact distance", kLimitDistance, distances);
  run(4, "diameter regression", kLimitDiameter, diameters);
  run(5, "LP duality", kLimitDuality, duality);
  run(6, "square example", 0, square);
  run(7, "construction shape", kLimitShape, shape);
  run(8, "flow saturation", kLimitLemma1, lemma1);
  run(9, "simplified certificate", kLimitCertificate, certificate);
  run(10, "full variant", 0, full_variant);
  run(11, "cross-verifier", 0, cross_verifier);
  run(12, "mutation sensitivity", 0, mutation);
  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
