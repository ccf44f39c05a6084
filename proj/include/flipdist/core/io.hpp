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

#ifndef FLIPDIST_CORE_IO_HPP_
#define FLIPDIST_CORE_IO_HPP_

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/triangulation.hpp"

namespace flipdist {

// Canonical two-line form:
//   n=<int>
//   diagonals=(a,b);(c,d);...
// with a<b in every pair and pairs in lexicographic order.
inline std::string triangulation_to_text(const Triangulation& t) {
  std::string out = "n=" + std::to_string(t.n()) + "\ndiagonals=";
  bool first = true;
  for (Diagonal d : t.diagonals()) {
    if (!first) out.push_back(';');
    first = false;
    out += to_string(d);
  }
  out.push_back('\n');
  return out;
}

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  std::size_t pos() const { return pos_; }
  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }

  void expect(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) != lit)
      throw ParseError("expected '" + std::string(lit) + "'", pos_);
    pos_ += lit.size();
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  int integer() {
    int value = 0;
    const char* begin = s_.data() + pos_;
    const char* end = s_.data() + s_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) throw ParseError("expected integer", pos_);
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  void skip_line_end() {
    accept('\r');
    accept('\n');
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

// Parses the canonical form. Pairs may appear in any order or orientation;
// the result is canonicalized but not validated.
inline Triangulation triangulation_from_text(std::string_view text) {
  detail::Cursor c(text);
  c.expect("n=");
  const int n = c.integer();
  c.skip_line_end();
  c.expect("diagonals=");
  std::vector<Diagonal> diags;
  if (c.peek() == '(') {
    do {
      c.expect("(");
      int a = c.integer();
      c.expect(",");
      int b = c.integer();
      c.expect(")");
      diags.emplace_back(a, b);
    } while (c.accept(';'));
  }
  while (!c.done() && (c.peek() == '\n' || c.peek() == '\r' || c.peek() == ' '))
    c.accept(c.peek());
  if (!c.done()) throw ParseError("trailing input", c.pos());
  return Triangulation(n, std::move(diags));
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << content;
}

}  // namespace flipdist

#endif  // FLIPDIST_CORE_IO_HPP_
