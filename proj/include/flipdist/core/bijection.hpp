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

#ifndef FLIPDIST_CORE_BIJECTION_HPP_
#define FLIPDIST_CORE_BIJECTION_HPP_

#include <algorithm>
#include <utility>
#include <vector>

#include "flipdist/core/binary_tree.hpp"
#include "flipdist/core/error.hpp"
#include "flipdist/core/triangulation.hpp"

namespace flipdist {

// Polygon interval spanned by every node of t when the root sits on the
// distinguished edge (0, n+1): leaf number i covers the side (i, i+1), and an
// internal node over (a, b) splits it at a + leaves(left subtree).
inline std::vector<std::pair<int, int>> node_intervals(const BinaryTree& t) {
  const int size = t.size();
  std::vector<int> leaves(size, 1);
  for (int i = size - 1; i >= 0; --i) {
    const auto& n = t.node(i);
    if (!n.is_leaf()) leaves[i] = leaves[n.left] + leaves[n.right];
  }
  std::vector<std::pair<int, int>> span(size);
  span[0] = {0, leaves[0]};
  for (int i = 0; i < size; ++i) {
    const auto& n = t.node(i);
    if (n.is_leaf()) continue;
    const auto [a, b] = span[i];
    const int apex = a + leaves[n.left];
    span[n.left] = {a, apex};
    span[n.right] = {apex, b};
  }
  return span;
}

// Dual triangulation of the (n+2)-gon; every internal node becomes the
// triangle (a, apex, b) of its interval.
inline Triangulation tree_to_triangulation(const BinaryTree& t) {
  const int n = t.internal_count();
  if (n < 1) throw InvalidArgument("tree needs at least one internal node");
  auto span = node_intervals(t);
  std::vector<Diagonal> diags;
  diags.reserve(n - 1);
  for (int i = 1; i < t.size(); ++i) {
    if (!t.node(i).is_leaf()) diags.emplace_back(span[i].first, span[i].second);
  }
  return Triangulation(n, std::move(diags));
}

// Inverse of tree_to_triangulation. Throws InvalidTriangulation on bad input.
inline BinaryTree triangulation_to_tree(const Triangulation& tri) {
  auto problems = validate(tri);
  if (!problems.empty()) throw InvalidTriangulation(problems.front().message);
  const int count = tri.vertex_count();
  std::vector<std::vector<int>> nbrs(count);
  for (Diagonal d : tri.diagonals()) {
    nbrs[d.a].push_back(d.b);
    nbrs[d.b].push_back(d.a);
  }
  for (int v = 0; v < count; ++v) {
    nbrs[v].push_back((v + 1) % count);
    nbrs[v].push_back((v + count - 1) % count);
    std::sort(nbrs[v].begin(), nbrs[v].end());
  }
  auto adjacent = [&](int x, int y) {
    return std::binary_search(nbrs[x].begin(), nbrs[x].end(), y);
  };
  auto apex_of = [&](int a, int b) {
    for (int k : nbrs[a]) {
      if (k > a && k < b && adjacent(k, b)) return k;
    }
    throw InvalidTriangulation("interval without apex");
  };
  // Post-order over intervals so children are built first.
  struct Item {
    int a, b;
    bool expanded;
  };
  std::vector<Item> stack = {{0, count - 1, false}};
  std::vector<BinaryTree> built;
  while (!stack.empty()) {
    Item it = stack.back();
    stack.pop_back();
    if (it.b - it.a == 1) {
      built.push_back(BinaryTree::leaf());
      continue;
    }
    const int k = apex_of(it.a, it.b);
    if (!it.expanded) {
      stack.push_back({it.a, it.b, true});
      stack.push_back({k, it.b, false});
      stack.push_back({it.a, k, false});
    } else {
      BinaryTree right = std::move(built.back());
      built.pop_back();
      BinaryTree left = std::move(built.back());
      built.pop_back();
      built.push_back(BinaryTree::join(left, right));
    }
  }
  return std::move(built.back());
}

}  // namespace flipdist

#endif  // FLIPDIST_CORE_BIJECTION_HPP_
