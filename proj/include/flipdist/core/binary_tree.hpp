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

#ifndef FLIPDIST_CORE_BINARY_TREE_HPP_
#define FLIPDIST_CORE_BINARY_TREE_HPP_

#include <cctype>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flipdist/core/error.hpp"

namespace flipdist {

// A full binary tree (every internal node has two ordered children).
// Nodes are stored in preorder with the root at index 0, so two trees are
// structurally equal iff their node arrays are equal.
class BinaryTree {
 public:
  struct Node {
    int left = -1;  // -1 for leaves
    int right = -1;
    bool is_leaf() const { return left < 0; }
    friend bool operator==(const Node&, const Node&) = default;
  };

  // A single leaf (n = 0).
  BinaryTree() : nodes_{Node{}} {}

  static BinaryTree leaf() { return BinaryTree(); }

  static BinaryTree join(const BinaryTree& left, const BinaryTree& right) {
    BinaryTree t;
    t.nodes_.clear();
    t.nodes_.reserve(1 + left.nodes_.size() + right.nodes_.size());
    const int lsize = static_cast<int>(left.nodes_.size());
    t.nodes_.push_back(Node{1, 1 + lsize});
    auto append = [&t](const BinaryTree& sub, int offset) {
      for (Node n : sub.nodes_) {
        if (!n.is_leaf()) {
          n.left += offset;
          n.right += offset;
        }
        t.nodes_.push_back(n);
      }
    };
    append(left, 1);
    append(right, 1 + lsize);
    return t;
  }

  std::span<const Node> nodes() const { return nodes_; }
  const Node& node(int i) const { return nodes_.at(i); }
  int size() const { return static_cast<int>(nodes_.size()); }
  int internal_count() const { return (size() - 1) / 2; }
  int leaf_count() const { return internal_count() + 1; }

  // Subtree rooted at node i, as a standalone tree.
  BinaryTree subtree(int i) const {
    // Preorder layout: the subtree occupies a contiguous index range.
    int end = i + 1;
    int pending = nodes_.at(i).is_leaf() ? 0 : 2;
    while (pending > 0) {
      pending += nodes_[end].is_leaf() ? -1 : 1;
      ++end;
    }
    BinaryTree t;
    t.nodes_.assign(nodes_.begin() + i, nodes_.begin() + end);
    for (Node& n : t.nodes_) {
      if (!n.is_leaf()) {
        n.left -= i;
        n.right -= i;
      }
    }
    return t;
  }

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

 private:
  std::vector<Node> nodes_;
};

// Grammar: tree := "L" | "(" tree tree ")". Whitespace is ignored.
inline BinaryTree tree_from_text(std::string_view s) {
  // Each frame collects the finished children of one open parenthesis.
  struct Frame {
    std::size_t open_offset;
    std::vector<BinaryTree> children;
  };
  std::vector<Frame> stack;
  std::vector<BinaryTree> done;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (stack.empty() && !done.empty())
      throw ParseError("trailing input after tree", i);
    if (c == 'L') {
      if (stack.empty()) {
        done.push_back(BinaryTree::leaf());
      } else {
        if (stack.back().children.size() == 2)
          throw ParseError("internal node with more than two children", i);
        stack.back().children.push_back(BinaryTree::leaf());
      }
    } else if (c == '(') {
      if (!stack.empty() && stack.back().children.size() == 2)
        throw ParseError("internal node with more than two children", i);
      stack.push_back({i, {}});
    } else if (c == ')') {
      if (stack.empty()) throw ParseError("unbalanced ')'", i);
      if (stack.back().children.size() != 2)
        throw ParseError("internal node needs exactly two children", i);
      BinaryTree t = BinaryTree::join(stack.back().children[0],
                                      stack.back().children[1]);
      stack.pop_back();
      if (stack.empty()) {
        done.push_back(std::move(t));
      } else {
        if (stack.back().children.size() == 2)
          throw ParseError("internal node with more than two children", i);
        stack.back().children.push_back(std::move(t));
      }
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (!stack.empty()) throw ParseError("unclosed '('", stack.back().open_offset);
  if (done.empty()) throw ParseError("empty tree", s.size());
  return std::move(done.front());
}

inline std::string tree_to_text(const BinaryTree& t) {
  std::string out;
  out.reserve(t.size() * 2);
  // Preorder: emit '(' on internal nodes, 'L' on leaves, and close every
  // internal node once both of its subtrees have been emitted.
  std::vector<int> remaining;  // children still to emit, per open node
  for (const auto& n : t.nodes()) {
    if (n.is_leaf()) {
      out.push_back('L');
      while (!remaining.empty() && --remaining.back() == 0) {
        remaining.pop_back();
        out.push_back(')');
      }
    } else {
      out.push_back('(');
      remaining.push_back(2);
    }
  }
  return out;
}

namespace detail {

// Copy of t with the subtree at node `target` replaced.
inline BinaryTree splice(const BinaryTree& t, int target, const BinaryTree& replacement) {
  // Children come after their parent in preorder, so building bottom-up from
  // the back yields every child before it is needed.
  std::vector<BinaryTree> built(t.size());
  for (int i = t.size() - 1; i >= 0; --i) {
    const auto& n = t.node(i);
    if (i == target) {
      built[i] = replacement;
    } else if (n.is_leaf()) {
      built[i] = BinaryTree::leaf();
    } else {
      built[i] = BinaryTree::join(built[n.left], built[n.right]);
    }
  }
  return std::move(built[0]);
}

}  // namespace detail

// Right rotation at internal node x whose left child y is internal:
// x(y(A,B),C) -> y(A,x(B,C)).
inline BinaryTree rotate_right(const BinaryTree& t, int x) {
  const auto& nx = t.node(x);
  if (nx.is_leaf() || t.node(nx.left).is_leaf())
    throw InvalidArgument("rotate_right needs an internal node with an internal left child");
  const auto& ny = t.node(nx.left);
  return detail::splice(
      t, x,
      BinaryTree::join(t.subtree(ny.left),
                       BinaryTree::join(t.subtree(ny.right), t.subtree(nx.right))));
}

// Left rotation at internal node x whose right child y is internal:
// x(A,y(B,C)) -> y(x(A,B),C).
inline BinaryTree rotate_left(const BinaryTree& t, int x) {
  const auto& nx = t.node(x);
  if (nx.is_leaf() || t.node(nx.right).is_leaf())
    throw InvalidArgument("rotate_left needs an internal node with an internal right child");
  const auto& ny = t.node(nx.right);
  return detail::splice(
      t, x,
      BinaryTree::join(BinaryTree::join(t.subtree(nx.left), t.subtree(ny.left)),
                       t.subtree(ny.right)));
}

}  // namespace flipdist

#endif  // FLIPDIST_CORE_BINARY_TREE_HPP_
