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

#ifndef FLIPDIST_CORE_RATIONAL_HPP_
#define FLIPDIST_CORE_RATIONAL_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "flipdist/core/error.hpp"

namespace flipdist {

// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw InvalidArgument("zero denominator");
  return Rational(num, den);
}

// "p/q" or "p"; q is omitted when it equals 1.
inline std::string to_string(const Rational& q) { return q.str(); }

inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational", 0);
  std::size_t slash = text.find('/');
  auto check_int = [&](std::string_view part, std::size_t base) {
    std::size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) ++i;
    if (i == part.size()) throw ParseError("expected digits in rational", base + i);
    for (; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9')
        throw ParseError("unexpected character in rational", base + i);
    }
  };
  if (slash == std::string_view::npos) {
    check_int(text, 0);
    return Rational(boost::multiprecision::mpz_int(std::string(text)));
  }
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  check_int(num, 0);
  check_int(den, slash + 1);
  boost::multiprecision::mpz_int d(std::string{den});
  if (d == 0) throw ParseError("zero denominator", slash + 1);
  return Rational(boost::multiprecision::mpz_int(std::string(num)), d);
}

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace flipdist

#endif  // FLIPDIST_CORE_RATIONAL_HPP_
