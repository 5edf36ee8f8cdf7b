// Copyright 2026 The obsdiam Authors
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

#ifndef OBSDIAM_RATIONAL_HPP_
#define OBSDIAM_RATIONAL_HPP_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace obsdiam {

// All positions, masses, distances and slopes are exact rationals.
using Rational = mpq_class;

// Parses "p/q", "p", decimal ("-0.125") or scientific ("1e-9") literals into
// an exact rational. Throws ParseError on malformed text or zero denominator.
Rational parse_rational(std::string_view text);

// Canonical "p/q" form; integers print without a denominator.
std::string to_string(const Rational& value);

double to_double(const Rational& value);

// Decimal rendering for human-facing reports only.
std::string to_decimal(const Rational& value, int significant_digits = 12);

// n/d in canonical form. d must be positive.
inline Rational ratio(long n, long d) {
  Rational r(n, static_cast<unsigned long>(d));
  r.canonicalize();
  return r;
}

inline Rational abs(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

}  // namespace obsdiam

#endif  // OBSDIAM_RATIONAL_HPP_
