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

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "flipdist/core/bijection.hpp"
#include "flipdist/core/binary_tree.hpp"
#include "flipdist/core/io.hpp"
#include "flipdist/core/oriented.hpp"
#include "flipdist/core/rational.hpp"
#include "flipdist/core/triangulation.hpp"
#include "flipdist/search/enumerate.hpp"

namespace flipdist {
namespace {

Triangulation tri(int n, std::vector<Diagonal> d) { return Triangulation(n, std::move(d)); }

// Every binary tree with `internal` internal nodes, by direct recursion on
// the grammar. Independent of the polygon enumeration.
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

TEST(TreeText, ParsesBaseCases) {
  EXPECT_EQ(tree_from_text("L").internal_count(), 0);
  EXPECT_EQ(tree_from_text("(LL)").internal_count(), 1);
  BinaryTree t = tree_from_text("((LL)L)");
  EXPECT_EQ(t.internal_count(), 2);
  EXPECT_EQ(t.leaf_count(), 3);
  EXPECT_EQ(tree_to_text(t), "((LL)L)");
}

TEST(TreeText, IgnoresWhitespace) {
  EXPECT_EQ(tree_to_text(tree_from_text(" ( (L L) L )\n")), "((LL)L)");
}

TEST(TreeText, ReportsOffsets) {
  try {
    tree_from_text("((LL)X)");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 5U);
  }
  EXPECT_THROW(tree_from_text("(LL"), ParseError);
  EXPECT_THROW(tree_from_text("(LL)L"), ParseError);
  EXPECT_THROW(tree_from_text(""), ParseError);
  EXPECT_THROW(tree_from_text("(L)"), ParseError);
}

TEST(TreeText, RoundTripsEveryTreeUpToSeven) {
  for (int n = 0; n <= 7; ++n) {
    for (const auto& s : all_trees(n)) EXPECT_EQ(tree_to_text(tree_from_text(s)), s);
  }
}

TEST(Bijection, SmallCases) {
  Triangulation t1 = tree_to_triangulation(tree_from_text("(LL)"));
  EXPECT_EQ(t1.n(), 1);
  EXPECT_TRUE(t1.diagonals().empty());
  Triangulation left = tree_to_triangulation(tree_from_text("((LL)L)"));
  Triangulation right = tree_to_triangulation(tree_from_text("(L(LL))"));
  EXPECT_EQ(left.diagonals().size(), 1U);
  EXPECT_EQ(flip(left, left.diagonals()[0]), right);
  EXPECT_THROW(tree_to_triangulation(tree_from_text("L")), InvalidArgument);
}

TEST(Bijection, PentagonHandCheck) {
  // Root triangle on (0,4) is (0,1,4); the triangle on (1,4) is (1,3,4).
  Triangulation t = tri(3, {{1, 4}, {1, 3}});
  EXPECT_EQ(tree_to_text(triangulation_to_tree(t)), "(L((LL)L))");
  EXPECT_EQ(tree_to_text(triangulation_to_tree(tri(1, {}))), "(LL)");
}

TEST(Bijection, RoundTripExhaustive) {
  for (int n = 1; n <= 8; ++n) {
    std::set<Triangulation> images;
    for (const auto& s : all_trees(n)) {
      Triangulation t = tree_to_triangulation(tree_from_text(s));
      ASSERT_TRUE(is_valid(t)) << s;
      EXPECT_EQ(tree_to_text(triangulation_to_tree(t)), s);
      images.insert(t);
    }
    EXPECT_EQ(images.size(), all_trees(n).size());
  }
}

TEST(Bijection, RejectsInvalid) {
  EXPECT_THROW(triangulation_to_tree(tri(2, {{0, 2}, {1, 3}})), InvalidTriangulation);
}

TEST(Rotation, CommutesWithFlip) {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& s : all_trees(n)) {
      BinaryTree t = tree_from_text(s);
      Triangulation image = tree_to_triangulation(t);
      std::set<Triangulation> rotated, flipped;
      for (int x = 0; x < t.size(); ++x) {
        const auto& node = t.node(x);
        if (node.left >= 0 && t.node(node.left).left >= 0)
          rotated.insert(tree_to_triangulation(rotate_right(t, x)));
        if (node.right >= 0 && t.node(node.right).left >= 0)
          rotated.insert(tree_to_triangulation(rotate_left(t, x)));
      }
      for (Diagonal d : image.diagonals()) flipped.insert(flip(image, d));
      EXPECT_EQ(rotated, flipped) << s;
    }
  }
}

TEST(Rotation, Shapes) {
  BinaryTree t = tree_from_text("((LL)L)");
  EXPECT_EQ(tree_to_text(rotate_right(t, 0)), "(L(LL))");
  EXPECT_EQ(tree_to_text(rotate_left(rotate_right(t, 0), 0)), "((LL)L)");
  EXPECT_THROW(rotate_left(t, 0), InvalidArgument);
}

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(tri(2, {{0, 2}})).empty());
  auto crossing = validate(tri(2, {{0, 2}, {1, 3}}));
  ASSERT_FALSE(crossing.empty());
  bool saw_crossing = false;
  for (const auto& v : crossing) saw_crossing |= v.kind == Violation::Kind::kCrossing;
  EXPECT_TRUE(saw_crossing);
  auto count = validate(tri(3, {{1, 4}}));
  ASSERT_EQ(count.size(), 1U);
  EXPECT_EQ(count[0].kind, Violation::Kind::kCount);
  auto edge = validate(tri(3, {{1, 2}, {1, 4}}));
  ASSERT_FALSE(edge.empty());
  EXPECT_EQ(edge[0].kind, Violation::Kind::kPolygonEdge);
  EXPECT_FALSE(validate(tri(3, {{1, 7}, {1, 3}})).empty());
  EXPECT_FALSE(validate(tri(0, {})).empty());
}

TEST(Flip, Examples) {
  EXPECT_EQ(flip(tri(2, {{0, 2}}), {0, 2}), tri(2, {{1, 3}}));
  EXPECT_EQ(flip(tri(3, {{1, 4}, {1, 3}}), {1, 3}), tri(3, {{1, 4}, {2, 4}}));
  EXPECT_THROW(flip(tri(2, {{0, 2}}), {1, 3}), NotADiagonal);
}

TEST(Flip, InvolutionAndLocality) {
  for (int n = 1; n <= 8; ++n) {
    search::for_each_triangulation(n, [&](const Triangulation& t) {
      for (Diagonal d : t.diagonals()) {
        Triangulation u = flip(t, d);
        ASSERT_TRUE(is_valid(u));
        Diagonal added = flipped_diagonal(t, d);
        EXPECT_FALSE(t.contains(added));
        EXPECT_TRUE(u.contains(added));
        EXPECT_FALSE(u.contains(d));
        EXPECT_EQ(flip(u, added), t);
      }
    });
  }
}

TEST(Oriented, Canonicalization) {
  auto t = OrientedTriangle::make(2, 0, 1);
  EXPECT_EQ(t.v, (TriangleKey{0, 1, 2}));
  EXPECT_EQ(t.sign, 1);
  EXPECT_EQ(OrientedTriangle::make(0, 2, 1).sign, -1);
  EXPECT_EQ(OrientedTriangle::make(1, 2, 0), OrientedTriangle::make(0, 1, 2));
  EXPECT_EQ(OrientedTriangle::make(2, 1, 0), OrientedTriangle::make(0, 1, 2).reversed());
  auto o = t.ordered();
  EXPECT_EQ(OrientedTriangle::make(o[0], o[1], o[2]), t);
  EXPECT_EQ(to_string(OrientedTriangle::make(0, 2, 1)), "(0,1,2)-");
  EXPECT_THROW(OrientedTriangle::make(1, 1, 2), InvalidArgument);
}

TEST(Oriented, TetrahedronCount) {
  EXPECT_EQ(oriented_tetrahedron_count(4), 2U);
  EXPECT_EQ(oriented_tetrahedron_count(14), 2002U);
  EXPECT_EQ(binomial(18, 3), 816U);
}

TEST(Oriented, TetrahedronBoundary) {
  auto f = OrientedTetrahedron::make(0, 1, 2, 3).boundary_faces();
  std::set<OrientedTriangle> got(f.begin(), f.end());
  std::set<OrientedTriangle> want = {
      OrientedTriangle{{0, 1, 3}, 1}, OrientedTriangle{{1, 2, 3}, 1},
      OrientedTriangle{{0, 2, 3}, -1}, OrientedTriangle{{0, 1, 2}, -1}};
  EXPECT_EQ(got, want);
  auto g = OrientedTetrahedron::make(1, 0, 2, 3);
  EXPECT_EQ(g.sign, -1);
  EXPECT_EQ(g, OrientedTetrahedron::make(0, 1, 2, 3).reversed());
}

TEST(TrianglesOf, Examples) {
  auto one = triangles_of(tri(1, {}));
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(one[0], (OrientedTriangle{{0, 1, 2}, 1}));
  auto sq = triangles_of(tri(2, {{0, 2}}));
  ASSERT_EQ(sq.size(), 2U);
  EXPECT_EQ(sq[0], (OrientedTriangle{{0, 1, 2}, 1}));
  EXPECT_EQ(sq[1], (OrientedTriangle{{0, 2, 3}, 1}));
  for (int n = 1; n <= 8; ++n) {
    search::for_each_triangulation(n, [&](const Triangulation& t) {
      auto faces = triangles_of(t);
      ASSERT_EQ(static_cast<int>(faces.size()), n);
      for (const auto& f : faces) EXPECT_EQ(f.sign, 1);
    });
  }
}

TEST(TriangulationText, CanonicalRoundTrip) {
  Triangulation t = tri(3, {{1, 4}, {1, 3}});
  std::string text = triangulation_to_text(t);
  EXPECT_EQ(text, "n=3\ndiagonals=(1,3);(1,4)\n");
  EXPECT_EQ(triangulation_from_text(text), t);
  EXPECT_EQ(triangulation_from_text("n=3\r\ndiagonals=(4,1);(3,1)"), t);
  EXPECT_EQ(triangulation_to_text(tri(1, {})), "n=1\ndiagonals=\n");
  EXPECT_EQ(triangulation_from_text("n=1\ndiagonals=\n"), tri(1, {}));
  EXPECT_THROW(triangulation_from_text("n=3\ndiagonals=(1,4);(1,3"), ParseError);
  EXPECT_THROW(triangulation_from_text("m=3\n"), ParseError);
}

TEST(RationalText, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/4"), make_rational(3, 4));
  EXPECT_EQ(parse_rational("-2/4"), make_rational(-1, 2));
  EXPECT_EQ(parse_rational("5"), make_rational(5));
  EXPECT_EQ(to_string(make_rational(6, 8)), "3/4");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("x"), ParseError);
  EXPECT_THROW(parse_rational("1/"), ParseError);
}

}  // namespace
}  // namespace flipdist
