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

#ifndef FLIPDIST_SEARCH_DISTANCE_HPP_
#define FLIPDIST_SEARCH_DISTANCE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/triangulation.hpp"
#include "flipdist/search/flip_path.hpp"
#include "flipdist/search/state.hpp"

namespace flipdist::search {

enum class Strategy {
  kAuto,           // bidirectional BFS, IDA* once the node budget is spent
  kBidirectional,  // bidirectional BFS only
  kIdaStar,        // IDA* only
};

struct SearchOptions {
  std::size_t node_budget = 10'000'000;
  Strategy strategy = Strategy::kAuto;
  // Solve the pieces cut out by diagonals common to both inputs separately.
  bool split_common = false;
};

struct DistanceResult {
  int distance = 0;
  FlipPath path;
};

// Admissible lower bound: diagonals of `from` missing from `to`. Each flip
// removes one diagonal, so at least this many flips are needed.
inline int diagonal_gap(const Triangulation& from, const Triangulation& to) {
  int gap = 0;
  for (Diagonal d : from.diagonals()) gap += to.contains(d) ? 0 : 1;
  return gap;
}

namespace detail {

inline int state_gap(const State& from, const State& to) {
  State common = from & to;
  return from.popcount() - common.popcount();
}

struct Parent {
  State prev;
  Diagonal removed;  // diagonal flipped in prev
  Diagonal added;
  int depth;
};

using ParentMap = std::unordered_map<State, Parent, StateHash>;

// Moves from `root` to `s` by following parent links.
inline std::vector<std::pair<Diagonal, Diagonal>> unwind(const ParentMap& parents,
                                                         const State& root, State s) {
  std::vector<std::pair<Diagonal, Diagonal>> moves;
  while (!(s == root)) {
    const Parent& p = parents.at(s);
    moves.push_back({p.removed, p.added});
    s = p.prev;
  }
  std::reverse(moves.begin(), moves.end());
  return moves;
}

// Returns std::nullopt when the node budget runs out.
inline std::optional<std::vector<Diagonal>> bidirectional(const State& src, const State& dst,
                                                          int n, std::size_t budget) {
  if (src == dst) return std::vector<Diagonal>{};
  ParentMap fwd, bwd;
  fwd.emplace(src, Parent{src, {}, {}, 0});
  bwd.emplace(dst, Parent{dst, {}, {}, 0});
  std::vector<State> ffront = {src}, bfront = {dst};
  while (!ffront.empty() && !bfront.empty()) {
    const bool forward = ffront.size() <= bfront.size();
    ParentMap& mine = forward ? fwd : bwd;
    ParentMap& other = forward ? bwd : fwd;
    std::vector<State>& front = forward ? ffront : bfront;
    std::vector<State> next;
    std::optional<State> meet;
    for (const State& s : front) {
      const int depth = mine.at(s).depth;
      for_each_flip(s, n, [&](Diagonal removed, Diagonal added, const State& t) {
        if (meet || mine.count(t)) return;
        mine.emplace(t, Parent{s, removed, added, depth + 1});
        if (other.count(t)) {
          meet = t;
          return;
        }
        next.push_back(t);
      });
      if (meet) break;
      if (fwd.size() + bwd.size() > budget) return std::nullopt;
    }
    if (meet) {
      std::vector<Diagonal> moves;
      for (auto [removed, added] : unwind(fwd, src, *meet)) moves.push_back(removed);
      // The backward tree records flips from dst toward meet; undo them in
      // reverse, flipping the diagonal each one added.
      auto back = unwind(bwd, dst, *meet);
      for (auto it = back.rbegin(); it != back.rend(); ++it) moves.push_back(it->second);
      return moves;
    }
    front = std::move(next);
  }
  throw InvalidTriangulation("flip graph is disconnected; inputs are not triangulations");
}

class IdaStar {
 public:
  IdaStar(const State& dst, int n, std::size_t budget) : dst_(dst), n_(n), budget_(budget) {}

  std::optional<std::vector<Diagonal>> run(const State& src) {
    int bound = state_gap(src, dst_);
    while (true) {
      path_.clear();
      const int next = dfs(src, 0, bound, Diagonal(-1, -1));
      if (next == kFound) return path_;
      if (next == kOverBudget) return std::nullopt;
      bound = next;
    }
  }

 private:
  static constexpr int kFound = -1;
  static constexpr int kOverBudget = -2;

  int dfs(const State& s, int g, int bound, Diagonal last_added) {
    const int f = g + state_gap(s, dst_);
    if (f > bound) return f;
    if (s == dst_) return kFound;
    if (++expanded_ > budget_) return kOverBudget;
    int best = std::numeric_limits<int>::max();
    struct Child {
      Diagonal removed, added;
      State next;
    };
    std::vector<Child> children;
    for_each_flip(s, n_, [&](Diagonal removed, Diagonal added, const State& t) {
      if (removed != last_added) children.push_back({removed, added, t});
    });
    for (const Child& c : children) {
      path_.push_back(c.removed);
      const int r = dfs(c.next, g + 1, bound, c.added);
      if (r == kFound || r == kOverBudget) return r;
      path_.pop_back();
      best = std::min(best, r);
    }
    return best;
  }

  State dst_;
  int n_;
  std::size_t budget_;
  std::size_t expanded_ = 0;
  std::vector<Diagonal> path_;
};

inline std::vector<Diagonal> solve_moves(const Triangulation& a, const Triangulation& b,
                                         const SearchOptions& opt) {
  const State src = encode(a), dst = encode(b);
  if (opt.strategy != Strategy::kIdaStar) {
    if (auto moves = bidirectional(src, dst, a.n(), opt.node_budget)) return *moves;
    if (opt.strategy == Strategy::kBidirectional)
      throw BudgetExceeded("bidirectional search exceeded " +
                           std::to_string(opt.node_budget) + " states");
  }
  IdaStar ida(dst, a.n(), opt.node_budget);
  if (auto moves = ida.run(src)) return *moves;
  throw BudgetExceeded("IDA* exceeded " + std::to_string(opt.node_budget) + " expansions");
}

// Sub-polygons cut out by the diagonals common to both triangulations,
// each as a sorted list of original labels.
inline std::vector<std::vector<int>> common_pieces(const Triangulation& a,
                                                   const Triangulation& b) {
  std::vector<Diagonal> common;
  for (Diagonal d : a.diagonals()) {
    if (b.contains(d)) common.push_back(d);
  }
  std::vector<int> all(a.vertex_count());
  for (int i = 0; i < a.vertex_count(); ++i) all[i] = i;
  std::vector<std::vector<int>> pieces = {all};
  for (Diagonal d : common) {
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      auto& p = pieces[i];
      auto ia = std::find(p.begin(), p.end(), d.a);
      auto ib = std::find(p.begin(), p.end(), d.b);
      if (ia == p.end() || ib == p.end()) continue;
      std::vector<int> inside(ia, ib + 1);
      std::vector<int> outside(p.begin(), ia + 1);
      outside.insert(outside.end(), ib, p.end());
      p = std::move(inside);
      pieces.push_back(std::move(outside));
      break;
    }
  }
  return pieces;
}

inline Triangulation restrict_to(const Triangulation& t, const std::vector<int>& piece) {
  std::vector<Diagonal> diags;
  auto local = [&](int v) {
    return static_cast<int>(std::lower_bound(piece.begin(), piece.end(), v) - piece.begin());
  };
  for (Diagonal d : t.diagonals()) {
    if (!std::binary_search(piece.begin(), piece.end(), d.a) ||
        !std::binary_search(piece.begin(), piece.end(), d.b))
      continue;
    Diagonal m(local(d.a), local(d.b));
    const int size = static_cast<int>(piece.size());
    if (m.b - m.a == 1 || (m.a == 0 && m.b == size - 1)) continue;
    diags.push_back(m);
  }
  return Triangulation(static_cast<int>(piece.size()) - 2, std::move(diags));
}

}  // namespace detail

// Exact flip distance with a shortest witness path. Flips are tried in
// increasing diagonal order, so results are deterministic.
inline DistanceResult exact_distance(const Triangulation& a, const Triangulation& b,
                                     const SearchOptions& opt = {}) {
  if (a.n() != b.n()) throw InvalidArgument("triangulations have different n");
  for (const Triangulation* t : {&a, &b}) {
    auto v = validate(*t);
    if (!v.empty()) throw InvalidTriangulation(v.front().message);
  }
  check_mask_size(a.n());
  DistanceResult out;
  out.path.start = a;
  if (!opt.split_common) {
    out.path.moves = detail::solve_moves(a, b, opt);
  } else {
    for (const auto& piece : detail::common_pieces(a, b)) {
      if (piece.size() < 4) continue;
      Triangulation pa = detail::restrict_to(a, piece);
      Triangulation pb = detail::restrict_to(b, piece);
      for (Diagonal d : detail::solve_moves(pa, pb, opt))
        out.path.moves.emplace_back(piece[d.a], piece[d.b]);
    }
  }
  out.distance = out.path.length();
  return out;
}

}  // namespace flipdist::search

#endif  // FLIPDIST_SEARCH_DISTANCE_HPP_
