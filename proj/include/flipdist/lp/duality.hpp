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

#ifndef FLIPDIST_LP_DUALITY_HPP_
#define FLIPDIST_LP_DUALITY_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/oriented.hpp"
#include "flipdist/core/rational.hpp"
#include "flipdist/core/triangulation.hpp"
#include "flipdist/lp/chain.hpp"
#include "flipdist/lp/simplex.hpp"

namespace flipdist::lp {

enum class LpStatus { kOptimal, kInfeasible, kBudgetExceeded };

inline const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

struct LpOptions {
  int max_n = kDefaultLpMaxN;
  std::int64_t pivot_cap = 1'000'000;
};

struct LPReport {
  LpStatus status = LpStatus::kInfeasible;
  Rational optimum = 0;       // primal m*
  Rational dual_optimum = 0;  // dual M*
  std::vector<std::pair<OrientedTetrahedron, Rational>> primal;  // nonzero entries
  WeightFunction dual;
  std::int64_t pivots = 0;
};

// Solves min sum(x) s.t. boundary(x) = chain_of(to) - chain_of(from), x >= 0,
// and reads the dual weights off the optimal basis.
inline LPReport solve_flip_lp(const Triangulation& from, const Triangulation& to,
                              const LpOptions& opt = {}) {
  if (from.n() != to.n()) throw InvalidArgument("triangulations have different n");
  for (const Triangulation* t : {&from, &to}) {
    auto v = validate(*t);
    if (!v.empty()) throw InvalidTriangulation(v.front().message);
  }
  BoundaryMatrix m = boundary_matrix(from.n(), opt.max_n);
  EqualityLp lp;
  lp.rows = m.rows();
  lp.columns.resize(m.cols());
  lp.cost.assign(m.cols(), 1);
  lp.rhs.assign(m.rows(), 0);
  for (int j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.columns[j]) lp.columns[j].push_back({e.row, e.value});
  }
  const Chain target = chain_of(to) - chain_of(from);
  for (const auto& [key, q] : target.terms()) lp.rhs[triangle_rank(key)] = q;

  SimplexResult r = solve_equality_lp(lp, opt.pivot_cap);
  LPReport out;
  out.pivots = r.pivots;
  if (r.status == SimplexStatus::kBudgetExceeded) {
    out.status = LpStatus::kBudgetExceeded;
    return out;
  }
  if (r.status != SimplexStatus::kOptimal) {
    out.status = LpStatus::kInfeasible;
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.optimum = r.objective;
  for (int j = 0; j < m.cols(); ++j) {
    if (r.x[j] != 0) out.primal.push_back({m.column_tetrahedra[j], r.x[j]});
  }
  for (int i = 0; i < m.rows(); ++i) out.dual.add({m.row_triangles[i], 1}, r.y[i]);
  out.dual_optimum = target.dot(out.dual);
  return out;
}

inline LPReport primal_lower_bound(const Triangulation& from, const Triangulation& to,
                                   const LpOptions& opt = {}) {
  return solve_flip_lp(from, to, opt);
}

inline LPReport dual_optimal_weights(const Triangulation& from, const Triangulation& to,
                                     const LpOptions& opt = {}) {
  return solve_flip_lp(from, to, opt);
}

// Header line plus one summary row.
inline std::string report_to_csv(const LPReport& r) {
  std::string out = "status,m_star,M_star,pivots,primal_support,dual_support\n";
  out += std::string(to_string(r.status)) + "," + flipdist::to_string(r.optimum) + "," +
         flipdist::to_string(r.dual_optimum) + "," + std::to_string(r.pivots) + "," +
         std::to_string(r.primal.size()) + "," + std::to_string(r.dual.size()) + "\n";
  return out;
}

}  // namespace flipdist::lp

#endif  // FLIPDIST_LP_DUALITY_HPP_
