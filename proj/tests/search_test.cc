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

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "flipdist/core/bijection.hpp"
#include "flipdist/core/triangulation.hpp"
#include "flipdist/search/diameter.hpp"
#include "flipdist/search/distance.hpp"
#include "flipdist/search/enumerate.hpp"
#include "flipdist/search/flip_path.hpp"
#include "flipdist/search/upper_bound.hpp"
#include "support/oracle.hpp"

namespace flipdist::search {
namespace {

using oracle::catalan;
using oracle::EdgeSet;
using oracle::edges_of;

std::vector<EdgeSet> oracle_neighbors(const EdgeSet& e, int n) { return oracle::neighbors(e, n); }
std::map<EdgeSet, int> oracle_bfs(const EdgeSet& start, int n) { return oracle::bfs(start, n); }

Triangulation tri(int n, std::vector<Diagonal> d) { return Triangulation(n, std::move(d)); }

TEST(Enumerate, MatchesCatalan) {
  EXPECT_EQ(count_triangulations(1), 1U);
  EXPECT_EQ(count_triangulations(3), 5U);
  for (int n = 1; n <= 10; ++n) EXPECT_EQ(count_triangulations(n), catalan(n)) << n;
}

TEST(Enumerate, DistinctAndValid) {
  auto all = enumerate_triangulations(7);
  std::set<Triangulation> unique(all.begin(), all.end());
  EXPECT_EQ(unique.size(), all.size());
  for (const auto& t : all) EXPECT_TRUE(is_valid(t));
}

TEST(Enumerate, Guards) {
  EXPECT_THROW(count_triangulations(0), SizeLimitError);
  EXPECT_THROW(count_triangulations(15), SizeLimitError);
}

TEST(State, EncodeDecode) {
  for (const auto& t : enumerate_triangulations(6)) EXPECT_EQ(decode(encode(t), 6), t);
  auto t = enumerate_triangulations(14).size();
  EXPECT_EQ(t, catalan(14));
}

TEST(Distance, Examples) {
  Triangulation a = tri(2, {{0, 2}}), b = tri(2, {{1, 3}});
  EXPECT_EQ(exact_distance(a, a).distance, 0);
  EXPECT_TRUE(exact_distance(a, a).path.moves.empty());
  auto r = exact_distance(a, b);
  EXPECT_EQ(r.distance, 1);
  EXPECT_EQ(path_end(r.path), b);
}

TEST(Distance, PentagonIsFiveCycle) {
  auto all = enumerate_triangulations(3);
  ASSERT_EQ(all.size(), 5U);
  for (const auto& a : all) {
    int ones = 0, twos = 0;
    for (const auto& b : all) {
      int d = exact_distance(a, b).distance;
      ones += d == 1;
      twos += d == 2;
      EXPECT_LE(d, 2);
    }
    EXPECT_EQ(ones, 2);
    EXPECT_EQ(twos, 2);
  }
}

TEST(Distance, MatchesOracleBfsExhaustively) {
  for (int n = 1; n <= 6; ++n) {
    auto all = enumerate_triangulations(n);
    for (const auto& a : all) {
      auto oracle = oracle_bfs(edges_of(a), n);
      ASSERT_EQ(oracle.size(), all.size());
      for (const auto& b : all) {
        auto r = exact_distance(a, b);
        ASSERT_EQ(r.distance, oracle.at(edges_of(b)));
        ASSERT_EQ(path_end(r.path), b);
        ASSERT_GE(r.distance, diagonal_gap(a, b));
      }
    }
  }
}

TEST(Distance, StrategiesAgree) {
  std::mt19937_64 rng(7);
  auto all = enumerate_triangulations(8);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& a = all[pick(rng)];
    const auto& b = all[pick(rng)];
    SearchOptions bfs, ida, split;
    bfs.strategy = Strategy::kBidirectional;
    ida.strategy = Strategy::kIdaStar;
    split.split_common = true;
    auto x = exact_distance(a, b, bfs);
    auto y = exact_distance(a, b, ida);
    auto z = exact_distance(a, b, split);
    EXPECT_EQ(x.distance, y.distance);
    EXPECT_EQ(x.distance, z.distance);
    EXPECT_EQ(path_end(y.path), b);
    EXPECT_EQ(path_end(z.path), b);
  }
}

TEST(Distance, SplitCommonMatchesPlainUpToEight) {
  for (int n = 4; n <= 6; ++n) {
    auto all = enumerate_triangulations(n);
    SearchOptions split;
    split.split_common = true;
    for (const auto& a : all) {
      for (const auto& b : all) {
        ASSERT_EQ(exact_distance(a, b, split).distance, exact_distance(a, b).distance);
      }
    }
  }
}

TEST(Distance, BudgetExhaustion) {
  SearchOptions tiny;
  tiny.node_budget = 10;
  tiny.strategy = Strategy::kBidirectional;
  // Two fans at opposite vertices of the 14-gon.
  std::vector<Diagonal> f0, f7;
  for (int v = 2; v <= 12; ++v) f0.emplace_back(0, v);
  for (int v = 0; v <= 13; ++v) {
    if (v != 7 && v != 6 && v != 8) f7.emplace_back(7, v);
  }
  Triangulation x(12, f0), y(12, f7);
  ASSERT_TRUE(is_valid(x));
  ASSERT_TRUE(is_valid(y));
  EXPECT_THROW(exact_distance(x, y, tiny), BudgetExceeded);
  tiny.strategy = Strategy::kIdaStar;
  tiny.node_budget = 2;
  EXPECT_THROW(exact_distance(x, y, tiny), BudgetExceeded);
  EXPECT_THROW(exact_distance(tri(2, {{0, 2}}), tri(3, {{1, 3}, {1, 4}})), InvalidArgument);
  EXPECT_THROW(exact_distance(tri(2, {{0, 2}, {1, 3}}), tri(2, {{0, 2}})), InvalidTriangulation);
}

TEST(Distance, MetricAxiomsOnRandomTriples) {
  std::mt19937_64 rng(2026);
  for (int n = 7; n <= 9; ++n) {
    auto all = enumerate_triangulations(n);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
      const auto& a = all[pick(rng)];
      const auto& b = all[pick(rng)];
      const auto& c = all[pick(rng)];
      int ab = exact_distance(a, b).distance;
      EXPECT_EQ(ab, exact_distance(b, a).distance);
      EXPECT_LE(exact_distance(a, c).distance, ab + exact_distance(b, c).distance);
    }
  }
}

TEST(Distance, EqualsRotationDistance) {
  // Distances recomputed on trees through the bijection agree with the
  // oracle on triangulations; rotations and flips commute.
  auto all = enumerate_triangulations(5);
  for (const auto& a : all) {
    auto oracle = oracle_bfs(edges_of(a), 5);
    for (const auto& b : all) {
      Triangulation a2 = tree_to_triangulation(triangulation_to_tree(a));
      Triangulation b2 = tree_to_triangulation(triangulation_to_tree(b));
      EXPECT_EQ(exact_distance(a2, b2).distance, oracle.at(edges_of(b)));
    }
  }
}

TEST(FlipPathText, RoundTrip) {
  Triangulation a = tri(3, {{1, 3}, {1, 4}});
  Triangulation b = tri(3, {{0, 2}, {2, 4}});
  auto r = exact_distance(a, b);
  std::string text = path_to_text(r.path);
  FlipPath back = path_from_text(a, text);
  EXPECT_EQ(back.moves, r.path.moves);
  EXPECT_EQ(path_to_text(FlipPath{tri(2, {{0, 2}}), {{0, 2}}}), "flip (0,2) -> (1,3)\n");
  EXPECT_THROW(path_from_text(tri(2, {{0, 2}}), "flip (0,2) -> (0,3)\n"), ParseError);
  EXPECT_THROW(path_from_text(tri(2, {{0, 2}}), "flop\n"), ParseError);
  auto steps = replay(r.path);
  EXPECT_EQ(steps.size(), r.path.moves.size() + 1);
  for (const auto& s : steps) EXPECT_TRUE(is_valid(s));
}

TEST(UpperBound, Sandwich) {
  EXPECT_TRUE(upper_bound_path(tri(2, {{0, 2}}), tri(2, {{0, 2}})).moves.empty());
  EXPECT_LE(upper_bound_path(tri(2, {{0, 2}}), tri(2, {{1, 3}})).length(), 2);
  for (int n = 1; n <= 6; ++n) {
    auto all = enumerate_triangulations(n);
    for (const auto& a : all) {
      auto oracle = oracle_bfs(edges_of(a), n);
      for (const auto& b : all) {
        FlipPath p = upper_bound_path(a, b);
        for (const auto& s : replay(p)) ASSERT_TRUE(is_valid(s));
        ASSERT_EQ(path_end(p), b);
        const int v = fan_apex(a, b);
        ASSERT_LE(p.length(), (n - 1 - a.diagonal_degree(v)) + (n - 1 - b.diagonal_degree(v)));
        ASSERT_LE(p.length(), 2 * n - 2);
        ASSERT_GE(p.length(), oracle.at(edges_of(b)));
      }
    }
  }
}

TEST(Diameter, SmallValues) {
  EXPECT_EQ(diameter(1).value, 0);
  EXPECT_EQ(diameter(2).value, 1);
  EXPECT_EQ(diameter(3).value, 2);
  EXPECT_THROW(diameter(10), SizeLimitError);
}

TEST(Diameter, MatchesOracleAndWitness) {
  for (int n = 2; n <= 6; ++n) {
    int oracle = 0;
    for (const auto& a : enumerate_triangulations(n)) {
      for (const auto& [e, d] : oracle_bfs(edges_of(a), n)) oracle = std::max(oracle, d);
    }
    auto r = diameter(n);
    EXPECT_EQ(r.value, oracle) << n;
    EXPECT_EQ(exact_distance(r.first, r.second).distance, r.value);
  }
}

TEST(Diameter, ThreadCountIndependent) {
  auto one = diameter(7, 1);
  auto four = diameter(7, 4);
  EXPECT_EQ(one.value, four.value);
  EXPECT_EQ(one.first, four.first);
  EXPECT_EQ(one.second, four.second);
}

TEST(Diameter, SampledIsLowerBound) {
  auto s = diameter_sampled(7, 20, 1, 2);
  EXPECT_LE(s.value, diameter(7).value);
  EXPECT_GE(s.value, 1);
  auto s2 = diameter_sampled(7, 20, 1, 3);
  EXPECT_EQ(s.value, s2.value);
  EXPECT_EQ(s.first, s2.first);
}

}  // namespace
}  // namespace flipdist::search
