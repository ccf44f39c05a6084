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

#ifndef FLIPDIST_SEARCH_ENUMERATE_HPP_
#define FLIPDIST_SEARCH_ENUMERATE_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/triangulation.hpp"

namespace flipdist::search {

inline constexpr int kMaxEnumerateN = 14;

namespace detail {

// Triangulates the pending intervals depth-first, choosing the apex of the
// most recently pushed interval at each level.
template <typename Visit>
void enumerate_rec(int n, std::vector<std::pair<int, int>>& pending,
                   std::vector<Diagonal>& diags, Visit& visit) {
  if (pending.empty()) {
    visit(Triangulation(n, diags));
    return;
  }
  auto [a, b] = pending.back();
  pending.pop_back();
  if (b - a < 2) {
    enumerate_rec(n, pending, diags, visit);
  } else {
    for (int k = a + 1; k < b; ++k) {
      const std::size_t mark = diags.size();
      if (k - a >= 2) diags.emplace_back(a, k);
      if (b - k >= 2) diags.emplace_back(k, b);
      pending.push_back({k, b});
      pending.push_back({a, k});
      enumerate_rec(n, pending, diags, visit);
      pending.pop_back();
      pending.pop_back();
      diags.resize(mark);
    }
  }
  pending.push_back({a, b});
}

}  // namespace detail

// Streams every triangulation of the (n+2)-gon exactly once to visit().
template <typename Visit>
void for_each_triangulation(int n, Visit&& visit) {
  if (n < 1 || n > kMaxEnumerateN)
    throw SizeLimitError("enumeration supports 1 <= n <= " +
                         std::to_string(kMaxEnumerateN) + ", got n=" + std::to_string(n));
  std::vector<std::pair<int, int>> pending = {{0, n + 1}};
  std::vector<Diagonal> diags;
  diags.reserve(n);
  detail::enumerate_rec(n, pending, diags, visit);
}

inline std::vector<Triangulation> enumerate_triangulations(int n) {
  std::vector<Triangulation> out;
  for_each_triangulation(n, [&](Triangulation t) { out.push_back(std::move(t)); });
  return out;
}

inline std::uint64_t count_triangulations(int n) {
  std::uint64_t count = 0;
  for_each_triangulation(n, [&](const Triangulation&) { ++count; });
  return count;
}

}  // namespace flipdist::search

#endif  // FLIPDIST_SEARCH_ENUMERATE_HPP_
