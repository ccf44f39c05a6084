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

#ifndef FLIPDIST_SEARCH_FLIP_PATH_HPP_
#define FLIPDIST_SEARCH_FLIP_PATH_HPP_

#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/triangulation.hpp"

namespace flipdist::search {

// A start triangulation and the diagonals flipped, in order.
struct FlipPath {
  Triangulation start;
  std::vector<Diagonal> moves;

  int length() const { return static_cast<int>(moves.size()); }
};

// Every intermediate triangulation, start and end included. Throws
// NotADiagonal if a move is not present when it is applied.
inline std::vector<Triangulation> replay(const FlipPath& path) {
  std::vector<Triangulation> steps = {path.start};
  steps.reserve(path.moves.size() + 1);
  for (Diagonal d : path.moves) steps.push_back(flip(steps.back(), d));
  return steps;
}

inline Triangulation path_end(const FlipPath& path) {
  Triangulation t = path.start;
  for (Diagonal d : path.moves) t = flip(t, d);
  return t;
}

// One line per move: "flip (a,b) -> (c,d)".
inline std::string path_to_text(const FlipPath& path) {
  std::string out;
  Triangulation t = path.start;
  for (Diagonal d : path.moves) {
    Diagonal added = flipped_diagonal(t, d);
    out += "flip " + to_string(d) + " -> " + to_string(added) + "\n";
    t = flip(t, d);
  }
  return out;
}

// Parses the move list against a known start; each "-> (c,d)" is checked.
inline FlipPath path_from_text(const Triangulation& start, std::string_view text) {
  FlipPath path{start, {}};
  Triangulation t = start;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    const std::size_t line_offset = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    int a, b, c, d;
    char tail;
    if (std::sscanf(line.c_str(), "flip (%d,%d) -> (%d,%d)%c", &a, &b, &c, &d, &tail) != 4)
      throw ParseError("malformed flip line", line_offset);
    Diagonal removed(a, b);
    Diagonal added = flipped_diagonal(t, removed);
    if (added != Diagonal(c, d))
      throw ParseError("flip of " + to_string(removed) + " yields " + to_string(added),
                       line_offset);
    t = flip(t, removed);
    path.moves.push_back(removed);
  }
  return path;
}

}  // namespace flipdist::search

#endif  // FLIPDIST_SEARCH_FLIP_PATH_HPP_
