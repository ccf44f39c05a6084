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

#ifndef FLIPDIST_SEARCH_DIAMETER_HPP_
#define FLIPDIST_SEARCH_DIAMETER_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/triangulation.hpp"
#include "flipdist/search/enumerate.hpp"
#include "flipdist/search/state.hpp"

namespace flipdist::search {

inline constexpr int kMaxDiameterN = 9;
inline constexpr int kMaxSampledDiameterN = 12;

// The flip graph as an adjacency list. Nodes are sorted by packed state.
struct FlipGraph {
  int n = 0;
  std::vector<State> states;
  std::vector<std::vector<int>> adjacency;

  int size() const { return static_cast<int>(states.size()); }
  int index_of(const State& s) const {
    auto it = std::lower_bound(states.begin(), states.end(), s);
    if (it == states.end() || !(*it == s)) return -1;
    return static_cast<int>(it - states.begin());
  }
  Triangulation triangulation(int i) const { return decode(states[i], n); }
};

inline FlipGraph build_flip_graph(int n) {
  check_mask_size(n);
  FlipGraph g;
  g.n = n;
  for_each_triangulation(n, [&](const Triangulation& t) { g.states.push_back(encode(t)); });
  std::sort(g.states.begin(), g.states.end());
  g.adjacency.resize(g.states.size());
  for (int i = 0; i < g.size(); ++i) {
    for_each_flip(g.states[i], n, [&](Diagonal, Diagonal, const State& t) {
      g.adjacency[i].push_back(g.index_of(t));
    });
  }
  return g;
}

inline std::vector<int> bfs_distances(const FlipGraph& g, int source) {
  std::vector<int> dist(g.size(), -1);
  std::vector<int> queue = {source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int u = queue[head];
    for (int v : g.adjacency[u]) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

struct DiameterResult {
  int value = 0;
  Triangulation first;
  Triangulation second;
  bool exact = true;
  int sources = 0;  // BFS runs performed
};

namespace detail {

struct Best {
  int value = -1;
  int i = 0, j = 0;

  // Larger distance wins; the lexicographically smaller pair breaks ties.
  void offer(int d, int a, int b) {
    if (d > value || (d == value && std::pair(a, b) < std::pair(i, j))) {
      value = d;
      i = a;
      j = b;
    }
  }
};

inline DiameterResult eccentricity_max(const FlipGraph& g, const std::vector<int>& sources,
                                       int threads) {
  threads = std::max(1, std::min<int>(threads, static_cast<int>(sources.size())));
  std::vector<Best> partial(threads);
  auto work = [&](int t) {
    for (std::size_t k = t; k < sources.size(); k += threads) {
      const int s = sources[k];
      std::vector<int> dist = bfs_distances(g, s);
      for (int v = 0; v < g.size(); ++v) partial[t].offer(dist[v], std::min(s, v), std::max(s, v));
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  Best best;
  for (const Best& b : partial) {
    if (b.value >= 0) best.offer(b.value, b.i, b.j);
  }
  DiameterResult out;
  out.value = best.value;
  out.first = g.triangulation(best.i);
  out.second = g.triangulation(best.j);
  out.sources = static_cast<int>(sources.size());
  return out;
}

}  // namespace detail

// Exact diameter of the flip graph by BFS from every node. The witness pair
// does not depend on the thread count.
inline DiameterResult diameter(int n, int threads = 1) {
  if (n < 1 || n > kMaxDiameterN)
    throw SizeLimitError("exact diameter supports 1 <= n <= " + std::to_string(kMaxDiameterN) +
                         ", got n=" + std::to_string(n));
  FlipGraph g = build_flip_graph(n);
  std::vector<int> sources(g.size());
  for (int i = 0; i < g.size(); ++i) sources[i] = i;
  return detail::eccentricity_max(g, sources, threads);
}

// Largest eccentricity among `samples` random sources; a lower bound on the
// diameter.
inline DiameterResult diameter_sampled(int n, int samples, std::uint64_t seed, int threads = 1) {
  if (n < 1 || n > kMaxSampledDiameterN)
    throw SizeLimitError("sampled diameter supports 1 <= n <= " +
                         std::to_string(kMaxSampledDiameterN) + ", got n=" + std::to_string(n));
  if (samples < 1) throw InvalidArgument("samples must be positive");
  FlipGraph g = build_flip_graph(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, g.size() - 1);
  std::vector<int> sources(samples);
  for (int& s : sources) s = pick(rng);
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  DiameterResult out = detail::eccentricity_max(g, sources, threads);
  out.exact = static_cast<int>(sources.size()) == g.size();
  return out;
}

}  // namespace flipdist::search

#endif  // FLIPDIST_SEARCH_DIAMETER_HPP_
