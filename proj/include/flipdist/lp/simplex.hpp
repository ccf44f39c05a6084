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

#ifndef FLIPDIST_LP_SIMPLEX_HPP_
#define FLIPDIST_LP_SIMPLEX_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/rational.hpp"

namespace flipdist::lp {

// min cost.x subject to A x = rhs, x >= 0, with A given by sparse integer
// columns.
struct EqualityLp {
  using Column = std::vector<std::pair<int, int>>;  // (row, coefficient)

  int rows = 0;
  std::vector<Column> columns;
  std::vector<Rational> cost;
  std::vector<Rational> rhs;
};

enum class SimplexStatus { kOptimal, kInfeasible, kUnbounded, kBudgetExceeded };

struct SimplexResult {
  SimplexStatus status = SimplexStatus::kInfeasible;
  Rational objective = 0;
  std::vector<Rational> x;  // one per column
  std::vector<Rational> y;  // one per row; y.A_j <= cost_j at optimality
  std::vector<int> basis;   // column per row; values >= columns are artificial
  std::int64_t pivots = 0;
};

// Two-phase revised simplex over exact rationals with an explicit basis
// inverse. Bland's rule picks both the entering and the leaving variable, so
// the method terminates on degenerate problems. Rows left with a zero
// artificial after phase one are linearly dependent on the others; their
// artificial stays basic and never moves.
class RevisedSimplex {
 public:
  RevisedSimplex(const EqualityLp& lp, std::int64_t pivot_cap)
      : lp_(lp), m_(lp.rows), ncols_(static_cast<int>(lp.columns.size())), cap_(pivot_cap) {
    if (static_cast<int>(lp.cost.size()) != ncols_ || static_cast<int>(lp.rhs.size()) != m_)
      throw InvalidArgument("LP dimensions disagree");
    sigma_.assign(m_, 1);
    xb_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      if (lp.rhs[i] < 0) sigma_[i] = -1;
      xb_[i] = sigma_[i] > 0 ? lp.rhs[i] : Rational(-lp.rhs[i]);
    }
    binv_.assign(m_, std::vector<Rational>(m_));
    basis_.resize(m_);
    in_basis_.assign(ncols_ + m_, -1);
    for (int i = 0; i < m_; ++i) {
      binv_[i][i] = 1;
      basis_[i] = ncols_ + i;
      in_basis_[ncols_ + i] = i;
    }
  }

  SimplexResult solve() {
    SimplexResult out;
    // Phase one: minimize the sum of artificials.
    std::vector<Rational> phase1(ncols_ + m_);
    for (int i = 0; i < m_; ++i) phase1[ncols_ + i] = 1;
    SimplexStatus s = iterate(phase1);
    out.pivots = pivots_;
    if (s == SimplexStatus::kBudgetExceeded) {
      out.status = s;
      return out;
    }
    Rational infeasibility = 0;
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] >= ncols_) infeasibility += xb_[i];
    }
    if (infeasibility != 0) {
      out.status = SimplexStatus::kInfeasible;
      return out;
    }
    drive_out_artificials();
    std::vector<Rational> phase2(ncols_ + m_);
    for (int j = 0; j < ncols_; ++j) phase2[j] = lp_.cost[j];
    s = iterate(phase2);
    out.pivots = pivots_;
    out.status = s;
    if (s != SimplexStatus::kOptimal) return out;

    out.x.assign(ncols_, 0);
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < ncols_) {
        out.x[basis_[i]] = xb_[i];
        out.objective += lp_.cost[basis_[i]] * xb_[i];
      }
    }
    std::vector<Rational> y = duals(phase2);
    out.y.resize(m_);
    for (int i = 0; i < m_; ++i) out.y[i] = sigma_[i] > 0 ? y[i] : Rational(-y[i]);
    out.basis = basis_;
    return out;
  }

 private:
  // Entry (row, value) of column j after the row sign normalization.
  template <typename F>
  void for_column(int j, F&& f) const {
    if (j >= ncols_) {
      f(j - ncols_, 1);
      return;
    }
    for (auto [r, a] : lp_.columns[j]) f(r, sigma_[r] * a);
  }

  std::vector<Rational> duals(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_);
    for (int r = 0; r < m_; ++r) {
      const Rational& c = cost[basis_[r]];
      if (c == 0) continue;
      for (int i = 0; i < m_; ++i) {
        if (binv_[r][i] != 0) y[i] += c * binv_[r][i];
      }
    }
    return y;
  }

  std::vector<Rational> ftran(int j) const {
    std::vector<Rational> u(m_);
    for_column(j, [&](int row, int a) {
      for (int r = 0; r < m_; ++r) {
        if (binv_[r][row] != 0) u[r] += binv_[r][row] * a;
      }
    });
    return u;
  }

  void pivot(int leave_row, int enter, const std::vector<Rational>& u) {
    const Rational p = u[leave_row];
    auto& prow = binv_[leave_row];
    for (auto& v : prow) {
      if (v != 0) v /= p;
    }
    xb_[leave_row] /= p;
    for (int r = 0; r < m_; ++r) {
      if (r == leave_row || u[r] == 0) continue;
      const Rational f = u[r];
      auto& row = binv_[r];
      for (int i = 0; i < m_; ++i) {
        if (prow[i] != 0) row[i] -= f * prow[i];
      }
      xb_[r] -= f * xb_[leave_row];
    }
    in_basis_[basis_[leave_row]] = -1;
    basis_[leave_row] = enter;
    in_basis_[enter] = leave_row;
    ++pivots_;
  }

  SimplexStatus iterate(const std::vector<Rational>& cost) {
    while (true) {
      if (pivots_ >= cap_) return SimplexStatus::kBudgetExceeded;
      std::vector<Rational> y = duals(cost);
      int enter = -1;
      for (int j = 0; j < ncols_; ++j) {
        if (in_basis_[j] >= 0) continue;
        Rational d = cost[j];
        for_column(j, [&](int row, int a) {
          if (y[row] != 0) d -= y[row] * a;
        });
        if (d < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return SimplexStatus::kOptimal;
      std::vector<Rational> u = ftran(enter);
      int leave = -1;
      Rational best;
      for (int r = 0; r < m_; ++r) {
        if (u[r] <= 0) continue;
        Rational ratio = xb_[r] / u[r];
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return SimplexStatus::kUnbounded;
      pivot(leave, enter, u);
    }
  }

  // Replaces zero-valued basic artificials by structural columns where the
  // row allows it.
  void drive_out_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[r] < ncols_) continue;
      for (int j = 0; j < ncols_; ++j) {
        if (in_basis_[j] >= 0) continue;
        Rational v = 0;
        for_column(j, [&](int row, int a) {
          if (binv_[r][row] != 0) v += binv_[r][row] * a;
        });
        if (v != 0) {
          pivot(r, j, ftran(j));
          break;
        }
      }
    }
  }

  const EqualityLp& lp_;
  int m_;
  int ncols_;
  std::int64_t cap_;
  std::int64_t pivots_ = 0;
  std::vector<int> sigma_;
  std::vector<Rational> xb_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<int> basis_;
  std::vector<int> in_basis_;
};

inline SimplexResult solve_equality_lp(const EqualityLp& lp, std::int64_t pivot_cap = 1'000'000) {
  return RevisedSimplex(lp, pivot_cap).solve();
}

}  // namespace flipdist::lp

#endif  // FLIPDIST_LP_SIMPLEX_HPP_
