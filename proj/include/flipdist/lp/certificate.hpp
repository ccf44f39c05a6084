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

#ifndef FLIPDIST_LP_CERTIFICATE_HPP_
#define FLIPDIST_LP_CERTIFICATE_HPP_

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "flipdist/core/error.hpp"
#include "flipdist/core/oriented.hpp"
#include "flipdist/core/rational.hpp"
#include "flipdist/core/triangulation.hpp"
#include "flipdist/lp/chain.hpp"

namespace flipdist::lp {

struct ConstraintViolation {
  std::array<int, 4> quadruple{};  // sorted i<j<k<l
  Rational sum;                    // w(ijl)+w(jkl)+w(kil)+w(kji)
};

class CertificateViolation : public Error {
 public:
  explicit CertificateViolation(ConstraintViolation v)
      : Error("tetrahedral constraint violated at {" + std::to_string(v.quadruple[0]) + "," +
              std::to_string(v.quadruple[1]) + "," + std::to_string(v.quadruple[2]) + "," +
              std::to_string(v.quadruple[3]) + "}: sum " + flipdist::to_string(v.sum)),
        violation_(std::move(v)) {}
  const ConstraintViolation& violation() const { return violation_; }

 private:
  ConstraintViolation violation_;
};

namespace detail {

// w on every ordered triple of distinct labels, antisymmetric by filling.
class DenseWeights {
 public:
  DenseWeights(const WeightFunction& w, int count) : count_(count) {
    table_.assign(static_cast<std::size_t>(count) * count * count, 0);
    for (const auto& [key, q] : w.terms()) {
      for (int x : key) {
        if (x < 0 || x >= count)
          throw InvalidArgument("weight on " + flipdist::to_string(OrientedTriangle{key, 1}) +
                                " uses a label outside 0.." + std::to_string(count - 1));
      }
      const auto [i, j, k] = key;
      Rational neg = -q;
      at(i, j, k) = q;
      at(j, k, i) = q;
      at(k, i, j) = q;
      at(i, k, j) = neg;
      at(k, j, i) = neg;
      at(j, i, k) = neg;
    }
  }

  const Rational& operator()(int i, int j, int k) const {
    return table_[(static_cast<std::size_t>(i) * count_ + j) * count_ + k];
  }

 private:
  Rational& at(int i, int j, int k) {
    return table_[(static_cast<std::size_t>(i) * count_ + j) * count_ + k];
  }

  int count_;
  std::vector<Rational> table_;
};

}  // namespace detail

// First quadruple, in lexicographic order, whose four-term sum exceeds 1 in
// absolute value. Reversing the tetrahedron negates the sum, so one sign per
// quadruple covers both oriented constraints.
inline std::optional<ConstraintViolation> first_violation(const WeightFunction& w,
                                                          int vertex_count, int threads = 1) {
  detail::DenseWeights d(w, vertex_count);
  threads = std::max(1, std::min(threads, vertex_count));
  std::vector<std::optional<ConstraintViolation>> found(threads);
  auto work = [&](int t) {
    Rational sum;
    for (int i = t; i < vertex_count; i += threads) {
      for (int j = i + 1; j < vertex_count; ++j) {
        for (int k = j + 1; k < vertex_count; ++k) {
          for (int l = k + 1; l < vertex_count; ++l) {
            sum = d(i, j, l);
            sum += d(j, k, l);
            sum += d(k, i, l);
            sum += d(k, j, i);
            if (sum > 1 || sum < -1) {
              found[t] = ConstraintViolation{{i, j, k, l}, sum};
              return;
            }
          }
        }
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::optional<ConstraintViolation> best;
  for (auto& f : found) {
    if (f && (!best || f->quadruple < best->quadruple)) best = f;
  }
  return best;
}

// Checks every tetrahedral constraint, then returns the certified lower
// bound (chain_of(to) - chain_of(from)) . w. Throws CertificateViolation.
inline Rational verify_certificate(const WeightFunction& w, const Triangulation& from,
                                   const Triangulation& to, int threads = 1) {
  if (from.n() != to.n()) throw InvalidArgument("triangulations have different n");
  if (auto v = first_violation(w, from.vertex_count(), threads)) throw CertificateViolation(*v);
  detail::DenseWeights d(w, from.vertex_count());
  Rational bound = 0;
  for (const auto& f : triangles_of(to)) bound += d(f.v[0], f.v[1], f.v[2]);
  for (const auto& f : triangles_of(from)) bound -= d(f.v[0], f.v[1], f.v[2]);
  return bound;
}

struct Certificate {
  int n = 0;
  WeightFunction weights;
};

// "n=<int>" then one "i j k p/q" line per nonzero canonical weight, sorted.
inline std::string certificate_to_text(const Certificate& c) {
  std::string out = "n=" + std::to_string(c.n) + "\n";
  for (const auto& [key, q] : c.weights.terms()) {
    out += std::to_string(key[0]) + " " + std::to_string(key[1]) + " " +
           std::to_string(key[2]) + " " + numerator(q).str() + "/" + denominator(q).str() +
           "\n";
  }
  return out;
}

// Accepts triples in any order; an odd permutation negates the weight.
inline Certificate certificate_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  Certificate c;
  bool header = false;
  while (std::getline(in, line)) {
    const std::size_t line_offset = offset;
    offset += line.size() + 1;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!header) {
      if (line.rfind("n=", 0) != 0) throw ParseError("expected 'n='", line_offset);
      try {
        std::size_t used = 0;
        c.n = std::stoi(line.substr(2), &used);
        if (used + 2 != line.size()) throw ParseError("trailing input", line_offset + 2 + used);
      } catch (const std::logic_error&) {
        throw ParseError("expected integer", line_offset + 2);
      }
      if (c.n < 1) throw ParseError("n must be at least 1", line_offset + 2);
      header = true;
      continue;
    }
    std::istringstream fields(line);
    int i, j, k;
    std::string q;
    std::string extra;
    if (!(fields >> i >> j >> k >> q) || (fields >> extra))
      throw ParseError("expected 'i j k p/q'", line_offset);
    const int count = c.n + 2;
    if (i < 0 || j < 0 || k < 0 || i >= count || j >= count || k >= count || i == j ||
        j == k || i == k)
      throw ParseError("triangle labels must be distinct and in 0.." + std::to_string(count - 1),
                       line_offset);
    Rational value;
    try {
      value = parse_rational(q);
    } catch (const ParseError& e) {
      throw ParseError("bad rational", line_offset + line.find(q) + e.offset());
    }
    c.weights.add(OrientedTriangle::make(i, j, k), value);
  }
  if (!header) throw ParseError("missing 'n=' header", 0);
  return c;
}

}  // namespace flipdist::lp

#endif  // FLIPDIST_LP_CERTIFICATE_HPP_
