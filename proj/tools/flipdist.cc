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

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flipdist/core/bijection.hpp"
#include "flipdist/core/binary_tree.hpp"
#include "flipdist/core/error.hpp"
#include "flipdist/core/io.hpp"
#include "flipdist/lp/certificate.hpp"
#include "flipdist/lp/duality.hpp"
#include "flipdist/search/diameter.hpp"
#include "flipdist/search/distance.hpp"
#include "flipdist/search/flip_path.hpp"
#include "flipdist/sphere/sphere.hpp"
#include "flipdist/sphere/zigzag.hpp"
#include "flipdist/weights/checks.hpp"
#include "flipdist/weights/full.hpp"

namespace {

using namespace flipdist;

enum Exit { kOk = 0, kInput = 2, kBudget = 3, kVerify = 4 };


struct Common {
  int threads = 1;
  std::string format = "text";
  std::string output;
};

Common common;

void emit(const std::string& text) {
  if (common.output.empty()) {
    std::cout << text;
  } else {
    write_file(common.output, text);
  }
}

bool looks_like_tree(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (text[p] == '(' || text[p] == 'L');
}

Triangulation load(const std::string& path, bool trees) {
  std::string text = read_file(path);
  Triangulation t;
  if (trees) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    t = tree_to_triangulation(tree_from_text(text));
  } else {
    t = triangulation_from_text(text);
  }
  auto v = validate(t);
  if (!v.empty()) throw InvalidTriangulation(path + ": " + v.front().message);
  return t;
}

// ---- distance

struct DistanceArgs {
  std::string a, b;
  bool trees = false;
  bool path = false;
  std::size_t budget = 10'000'000;
  std::string strategy = "auto";
  bool split = false;
};

int run_distance(const DistanceArgs& args) {
  Triangulation a = load(args.a, args.trees), b = load(args.b, args.trees);
  search::SearchOptions opt;
  opt.node_budget = args.budget;
  opt.split_common = args.split;
  opt.strategy = args.strategy == "bidirectional" ? search::Strategy::kBidirectional
                 : args.strategy == "ida"         ? search::Strategy::kIdaStar
                                                  : search::Strategy::kAuto;
  auto r = search::exact_distance(a, b, opt);
  std::string out;
  if (common.format == "csv") {
    out = "n,distance\n" + std::to_string(a.n()) + "," + std::to_string(r.distance) + "\n";
  } else {
    out = "distance=" + std::to_string(r.distance) + "\n";
  }
  if (args.path) out += search::path_to_text(r.path);
  emit(out);
  return kOk;
}

// ---- bound

struct BoundArgs {
  std::string a, b;
  bool trees = false;
  std::string certificate;  // write the dual weights here
  std::string verify;       // check this certificate instead of solving
  int max_n = lp::kDefaultLpMaxN;
  std::int64_t pivot_cap = 1'000'000;
};

int run_bound(const BoundArgs& args) {
  Triangulation a = load(args.a, args.trees), b = load(args.b, args.trees);
  if (!args.verify.empty()) {
    lp::Certificate c = lp::certificate_from_text(read_file(args.verify));
    if (c.n != a.n()) throw InvalidArgument("certificate is for n=" + std::to_string(c.n));
    try {
      Rational bound = lp::verify_certificate(c.weights, a, b, common.threads);
      emit("bound=" + to_string(bound) + "\n");
      return kOk;
    } catch (const lp::CertificateViolation& e) {
      std::cerr << "flipdist: " << e.what() << "\n";
      return kInput;
    }
  }
  lp::LpOptions opt;
  opt.max_n = args.max_n;
  opt.pivot_cap = args.pivot_cap;
  lp::LPReport r = lp::solve_flip_lp(a, b, opt);
  if (r.status == lp::LpStatus::kBudgetExceeded) {
    std::cerr << "flipdist: pivot cap reached\n";
    return kBudget;
  }
  if (r.status != lp::LpStatus::kOptimal) {
    std::cerr << "flipdist: LP " << lp::to_string(r.status) << "\n";
    return kVerify;
  }
  if (!args.certificate.empty())
    write_file(args.certificate, lp::certificate_to_text({a.n(), r.dual}));
  if (common.format == "csv") {
    emit(lp::report_to_csv(r));
  } else {
    std::string out = "m*=" + to_string(r.optimum) + " M*=" + to_string(r.dual_optimum) + "\n";
    if (!args.certificate.empty()) out += "certificate=" + args.certificate + "\n";
    emit(out);
  }
  return kOk;
}

// ---- construct

struct ConstructArgs {
  int n = 16;
  std::optional<int> r;
  bool single = false;
  bool relaxed = false;
  std::string dir = ".";
};

int run_construct(const ConstructArgs& args) {
  namespace fs = std::filesystem;
  fs::create_directories(args.dir);
  auto path = [&](const std::string& name) { return (fs::path(args.dir) / name).string(); };
  Triangulation z = sphere::zigzag(args.n);
  write_file(path("zigzag.tri"), triangulation_to_text(z));
  std::string out = "zigzag=" + path("zigzag.tri") + "\n";
  if (args.single) {
    emit(common.format == "dot" ? std::string() : out);
    return kOk;
  }
  const int r = args.r ? *args.r : sphere::choose_offset(args.n).r;
  Triangulation rz = sphere::rotated_zigzag(args.n, r);
  auto s = sphere::sphere_union(z, rz, args.relaxed ? sphere::UnionMode::kRelaxed
                                                    : sphere::UnionMode::kStrict);
  write_file(path("rotated.tri"), triangulation_to_text(rz));
  write_file(path("sphere.faces"), sphere::faces_to_text(s));
  write_file(path("sphere.dot"), sphere::sphere_to_dot(s));
  write_file(path("distances.csv"), sphere::distances_to_csv(s));
  const std::string hist = sphere::histogram_to_string(sphere::degree_histogram(s));
  write_file(path("histogram.txt"), hist + "\n");
  if (common.format == "dot") {
    emit(sphere::sphere_to_dot(s));
    return kOk;
  }
  out += "rotated=" + path("rotated.tri") + "\nr=" + std::to_string(r) +
         "\nvertices=" + std::to_string(s.vertex_count()) +
         "\nfaces=" + std::to_string(s.face_count()) + "\nedges=" + std::to_string(s.edge_count()) +
         "\nhistogram=" + hist + "\n";
  emit(out);
  return kOk;
}

// ---- verify-weights

struct WeightsArgs {
  int n = 16;
  std::string variant = "simplified";
  int c = weights::kDefaultC;
  std::optional<int> c_outer;
  int r0 = 1;
  std::optional<int> r;
  int max_n = 40;
  std::string certificate;
  std::string provenance;
  std::string verify;
  std::optional<int> flow_dot;
};

int run_verify_weights(const WeightsArgs& args) {
  if (args.n < 9 || args.n > args.max_n)
    throw SizeLimitError("verify-weights supports 9 <= n <= " + std::to_string(args.max_n));
  weights::VariantConfig cfg = weights::default_config(weights::parse_variant(args.variant), args.c);
  if (args.c_outer) cfg.c_outer = *args.c_outer;
  cfg.r0 = args.r0;
  cfg.offset = args.r;
  cfg.threads = common.threads;
  cfg.validate();
  weights::WeightInstance inst = weights::make_instance(args.n, cfg);

  if (!args.verify.empty()) {
    lp::Certificate c = lp::certificate_from_text(read_file(args.verify));
    if (c.n != args.n) throw InvalidArgument("certificate is for n=" + std::to_string(c.n));
    if (auto v = lp::first_violation(c.weights, inst.vertex_count(), common.threads)) {
      std::string q;
      for (int x : v->quadruple) q += (q.empty() ? "" : ",") + std::to_string(x);
      emit("violation={" + q + "} sum=" + to_string(v->sum) + "\n");
      return kVerify;
    }
    emit("bound=" + to_string(lp::verify_certificate(c.weights, inst.second, inst.first)) + "\n");
    return kOk;
  }

  weights::AssemblyOutcome res = weights::assemble_weight_function(inst, cfg);
  const auto& aw = res.weights;
  weights::SweepReport sweep =
      weights::check_tetrahedral_constraints(aw.table, common.threads, &inst.sphere);
  weights::LemmaReport lemmas = weights::check_lemmas(aw, inst);
  const Rational total = weights::total_weight(inst, aw.table);
  bool saturated = true;
  for (const auto& f : aw.flows) saturated &= f.saturated;

  if (!args.certificate.empty())
    write_file(args.certificate, lp::certificate_to_text(weights::to_certificate(aw)));
  if (!args.provenance.empty()) write_file(args.provenance, weights::provenance_to_text(aw.table));

  if (args.flow_dot) {
    weights::FlowInstance fi =
        weights::build_flow_instance(inst, aw.face_weights, aw.table, *args.flow_dot, aw.config);
    weights::FlowResult fr = weights::max_flow(fi.net);
    emit(weights::network_to_dot(fi.net, &fr));
  } else if (common.format == "csv") {
    emit(weights::violations_to_csv(sweep) + "\n" + weights::flows_to_csv(aw.flows) + "\n" +
         weights::lemmas_to_csv(lemmas));
  } else {
    std::string out;
    out += "n=" + std::to_string(args.n) + "\nr=" + std::to_string(inst.offset) + "\n";
    out += std::string("variant=") + weights::to_string(aw.config.variant) + "\n";
    if (res.solver) {
      const auto& s = *res.solver;
      out += std::string("full_solver=") + (s.success ? "ok" : "failed") +
             " reduced_faces=" + std::to_string(s.reduced_faces) + " face_total=" +
             to_string(s.total) + " best_violations=" + std::to_string(s.score.violations) +
             " best_shortfall=" + to_string(s.score.shortfall) +
             " evaluations=" + std::to_string(s.evaluations) + "\n";
      for (std::size_t i = 0; i < s.violated.size() && i < 10; ++i) {
        const auto& v = s.violated[i];
        out += "full_violation={" + std::to_string(v.quadruple[0]) + "," +
               std::to_string(v.quadruple[1]) + "," + std::to_string(v.quadruple[2]) + "," +
               std::to_string(v.quadruple[3]) + "} sum=" + to_string(v.sum) + "\n";
      }
      if (res.fell_back) out += "fallback=simplified\n";
    }
    out += "c=" + std::to_string(aw.config.c) + " c'=" + std::to_string(aw.config.c_outer) +
           " r0=" + std::to_string(aw.config.r0) + "\n";
    out += "total_weight=" + to_string(total) + "\nK=" + to_string(Rational(2 * args.n) - total) +
           "\n";
    out += "quadruples=" + std::to_string(sweep.checked) +
           "\nviolations=" + std::to_string(sweep.violations.size()) + "\n";
    for (std::size_t i = 0; i < sweep.violations.size() && i < 10; ++i) {
      const auto& v = sweep.violations[i];
      out += "violation={" + std::to_string(v.quadruple[0]) + "," + std::to_string(v.quadruple[1]) +
             "," + std::to_string(v.quadruple[2]) + "," + std::to_string(v.quadruple[3]) +
             "} sum=" + to_string(v.sum) + "\n";
    }
    int short_count = 0;
    for (const auto& f : aw.flows) {
      if (f.saturated) continue;
      ++short_count;
      out += "shortfall vertex=" + std::to_string(f.vertex) + " supply=" + to_string(f.supply) +
             " max_flow=" + to_string(f.value) + " cut_size=" + std::to_string(f.cut.size()) + "\n";
    }
    out += "flows_saturated=" + std::to_string(aw.flows.size() - short_count) + "/" +
           std::to_string(aw.flows.size()) + "\n";
    for (const weights::LemmaCheck* c : lemmas.all())
      out += c->name + " hypotheses=" + std::to_string(c->hypotheses) +
             " counterexamples=" + std::to_string(c->counterexamples.size()) + "\n";
    if (!args.certificate.empty()) out += "certificate=" + args.certificate + "\n";
    emit(out);
  }
  return sweep.ok() && saturated ? kOk : kVerify;
}

// ---- diameter

struct DiameterArgs {
  int n = 5;
  bool sweep = false;
};

int run_diameter(const DiameterArgs& args) {
  std::string out = common.format == "csv" ? "n,diameter\n" : "";
  const int lo = args.sweep ? 2 : args.n;
  for (int n = lo; n <= args.n; ++n) {
    search::DiameterResult d = search::diameter(n, common.threads);
    if (common.format == "csv") {
      out += std::to_string(n) + "," + std::to_string(d.value) + "\n";
    } else if (args.sweep) {
      out += "n=" + std::to_string(n) + " diameter=" + std::to_string(d.value) + "\n";
    } else {
      out += "diameter=" + std::to_string(d.value) + "\nfirst=" +
             tree_to_text(triangulation_to_tree(d.first)) + "\nsecond=" +
             tree_to_text(triangulation_to_tree(d.second)) + "\n";
    }
  }
  emit(out);
  return kOk;
}

// ---- convert

struct ConvertArgs {
  std::string input;
};

int run_convert(const ConvertArgs& args) {
  std::string text = read_file(args.input);
  if (looks_like_tree(text)) {
    emit(triangulation_to_text(load(args.input, true)));
  } else {
    emit(tree_to_text(triangulation_to_tree(load(args.input, false))) + "\n");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flip distance tools for triangulations and binary trees"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "key=value configuration file; flags override it");
  app.add_option("--threads", common.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "dot"}));
  app.add_option("-o,--output", common.output, "Write the report here instead of stdout");

  int status = kOk;
  auto guard = [&](auto fn) {
    return [&status, fn] { status = fn(); };
  };

  DistanceArgs da;
  auto* dist = app.add_subcommand("distance", "Exact flip distance");
  dist->add_option("first", da.a)->required()->check(CLI::ExistingFile);
  dist->add_option("second", da.b)->required()->check(CLI::ExistingFile);
  dist->add_flag("--trees", da.trees, "Inputs are binary trees");
  dist->add_flag("--path", da.path, "Print a shortest flip sequence");
  dist->add_option("--budget", da.budget, "Search node budget");
  dist->add_option("--strategy", da.strategy)
      ->check(CLI::IsMember({"auto", "bidirectional", "ida"}));
  dist->add_flag("--split", da.split, "Split at common diagonals");
  dist->callback(guard([&] { return run_distance(da); }));

  BoundArgs ba;
  auto* bound = app.add_subcommand("bound", "LP lower bound or certificate check");
  bound->add_option("first", ba.a)->required()->check(CLI::ExistingFile);
  bound->add_option("second", ba.b)->required()->check(CLI::ExistingFile);
  bound->add_flag("--trees", ba.trees, "Inputs are binary trees");
  bound->add_option("--certificate", ba.certificate, "Write the dual weights here");
  bound->add_option("--verify", ba.verify, "Check this certificate")->check(CLI::ExistingFile);
  bound->add_option("--max-n", ba.max_n, "Largest n the LP accepts");
  bound->add_option("--pivot-cap", ba.pivot_cap, "Simplex pivot budget");
  bound->callback(guard([&] { return run_bound(ba); }));

  ConstructArgs ca;
  auto* cons = app.add_subcommand("construct", "Zig-zag pair and its sphere");
  cons->add_option("-n", ca.n, "Polygon size n (n+2 vertices)")->required();
  cons->add_option("-r", ca.r, "Rotation offset");
  cons->add_flag("--single", ca.single, "Only the zig-zag triangulation");
  cons->add_flag("--relaxed", ca.relaxed, "Allow shared diagonals");
  cons->add_option("--dir", ca.dir, "Output directory");
  cons->callback(guard([&] { return run_construct(ca); }));

  WeightsArgs wa;
  auto* wt = app.add_subcommand("verify-weights", "Build and check the weight certificate");
  wt->add_option("-n", wa.n, "Polygon size n")->required();
  wt->add_option("--variant", wa.variant)->check(CLI::IsMember({"simplified", "full"}));
  wt->add_option("-c", wa.c, "Inner capacity radius");
  wt->add_option("--c-prime", wa.c_outer, "Directed-arc radius (default 10c+1)");
  wt->add_option("--r0", wa.r0, "Zeroed neighborhood radius");
  wt->add_option("-r", wa.r, "Rotation offset");
  wt->add_option("--max-n", wa.max_n, "Largest n accepted");
  wt->add_option("--certificate", wa.certificate, "Write the certificate here");
  wt->add_option("--provenance", wa.provenance, "Write the per-triangle class here");
  wt->add_option("--verify", wa.verify, "Check this certificate instead")->check(CLI::ExistingFile);
  wt->add_option("--flow-dot", wa.flow_dot, "Print the flow network of this vertex as DOT");
  wt->callback(guard([&] { return run_verify_weights(wa); }));

  DiameterArgs dd;
  auto* diam = app.add_subcommand("diameter", "Flip graph diameter");
  diam->add_option("-n", dd.n, "Polygon size n")->required();
  diam->add_flag("--sweep", dd.sweep, "Table for 2..n");
  diam->callback(guard([&] { return run_diameter(dd); }));

  ConvertArgs cv;
  auto* conv = app.add_subcommand("convert", "Tree <-> triangulation");
  conv->add_option("input", cv.input)->required()->check(CLI::ExistingFile);
  conv->callback(guard([&] { return run_convert(cv); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "flipdist: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "flipdist: " << e.what() << "\n";
    return kInput;
  }
  return status;
}
