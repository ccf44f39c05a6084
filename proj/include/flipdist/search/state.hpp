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

#ifndef FLIPDIST_SEARCH_STATE_HPP_
#define FLIPDIST_SEARCH_STATE_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/triangulation.hpp"

namespace flipdist::search {

// Largest n whose vertex pairs fit in a 128-bit diagonal mask (16-gon).
inline constexpr int kMaxMaskN = 14;

// Bit index of the pair a<b.
constexpr int pair_index(int a, int b) { return b * (b - 1) / 2 + a; }

// Triangulation packed as a bitmask over vertex pairs; the search key.
struct State {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  bool test(int bit) const {
    return bit < 64 ? (lo >> bit) & 1U : (hi >> (bit - 64)) & 1U;
  }
  void toggle(int bit) {
    if (bit < 64) {
      lo ^= std::uint64_t{1} << bit;
    } else {
      hi ^= std::uint64_t{1} << (bit - 64);
    }
  }
  int popcount() const { return std::popcount(lo) + std::popcount(hi); }

  friend auto operator<=>(const State&, const State&) = default;
  friend bool operator==(const State&, const State&) = default;
};

inline State operator&(State x, State y) { return {x.lo & y.lo, x.hi & y.hi}; }
inline State operator^(State x, State y) { return {x.lo ^ y.lo, x.hi ^ y.hi}; }

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::uint64_t h = s.lo * 0x9E3779B97F4A7C15ULL;
    h ^= (s.hi + 0x632BE59BD9B4E019ULL) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

inline void check_mask_size(int n) {
  if (n < 1 || n > kMaxMaskN)
    throw SizeLimitError("search supports 1 <= n <= " + std::to_string(kMaxMaskN) +
                         ", got n=" + std::to_string(n));
}

inline State encode(const Triangulation& t) {
  check_mask_size(t.n());
  State s;
  for (Diagonal d : t.diagonals()) s.toggle(pair_index(d.a, d.b));
  return s;
}

inline Triangulation decode(const State& s, int n) {
  std::vector<Diagonal> diags;
  const int count = n + 2;
  for (int b = 1; b < count; ++b) {
    for (int a = 0; a < b; ++a) {
      if (s.test(pair_index(a, b))) diags.emplace_back(a, b);
    }
  }
  return Triangulation(n, std::move(diags));
}

// Read-only view answering adjacency queries on a packed triangulation.
class StateView {
 public:
  StateView(const State& s, int n) : s_(s), count_(n + 2) {}

  bool has_edge(int x, int y) const {
    if (x > y) std::swap(x, y);
    if (y == x + 1 || (x == 0 && y == count_ - 1)) return true;
    return s_.test(pair_index(x, y));
  }

  // Apexes of the two triangles on either side of the diagonal (a,b).
  std::pair<int, int> apexes(int a, int b) const {
    int inner = -1, outer = -1;
    for (int k = a + 1; k < b; ++k) {
      if (has_edge(a, k) && has_edge(k, b)) {
        inner = k;
        break;
      }
    }
    for (int k = b + 1; k < count_ + a; ++k) {
      int v = k % count_;
      if (has_edge(a, v) && has_edge(v, b)) {
        outer = v;
        break;
      }
    }
    return {inner, outer};
  }

 private:
  const State& s_;
  int count_;
};

// Calls visit(removed, added, next) for every flip of s, in increasing
// order of the removed diagonal.
template <typename Visit>
void for_each_flip(const State& s, int n, Visit&& visit) {
  StateView view(s, n);
  const int count = n + 2;
  for (int a = 0; a < count; ++a) {
    for (int b = a + 2; b < count; ++b) {
      if (a == 0 && b == count - 1) continue;
      if (!s.test(pair_index(a, b))) continue;
      auto [p, q] = view.apexes(a, b);
      Diagonal added(p, q);
      State next = s;
      next.toggle(pair_index(a, b));
      next.toggle(pair_index(added.a, added.b));
      visit(Diagonal(a, b), added, next);
    }
  }
}

}  // namespace flipdist::search

#endif  // FLIPDIST_SEARCH_STATE_HPP_
