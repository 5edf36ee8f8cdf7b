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

#include "obsdiam/rational.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "obsdiam/errors.hpp"

namespace obsdiam {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Integer literal with optional sign.
mpz_class parse_integer(std::string_view s, std::string_view whole) {
  std::string_view digits = s;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (!all_digits(digits)) {
    throw ParseError("malformed rational literal '" + std::string(whole) + "'");
  }
  mpz_class value(std::string(digits), 10);
  return negative ? mpz_class(-value) : value;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    mpz_class exp = parse_integer(s.substr(e + 1), whole);
    if (!exp.fits_slong_p() || abs(exp) > 4096) {
      throw ParseError("exponent out of range in '" + std::string(whole) + "'");
    }
    exponent = exp.get_si();
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long scale = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((int_part.empty() && frac_part.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw ParseError("malformed rational literal '" + std::string(whole) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    scale = static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) {
      throw ParseError("malformed rational literal '" + std::string(whole) + "'");
    }
    digits = std::string(s);
  }
  mpz_class mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long shift = exponent - scale;
  mpz_class power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(shift)));
  Rational result = shift >= 0 ? Rational(mantissa * power)
                               : Rational(mantissa, power);
  result.canonicalize();
  return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto first = text.find_first_not_of(" \t");
  auto last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos) {
    throw ParseError("empty rational literal");
  }
  std::string_view s = text.substr(first, last - first + 1);
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_integer(s.substr(0, slash), text);
    mpz_class den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) {
      throw ParseError("zero denominator in '" + std::string(text) + "'");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
  }
  return parse_decimal(s, text);
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

std::string to_decimal(const Rational& value, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, value.get_d());
  return buf;
}

}  // namespace obsdiam
