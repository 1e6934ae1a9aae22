// Copyright 2026 The quadrant Authors
//
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

#include "core/rational.hpp"

#include <cctype>
#include <cmath>

#include "core/error.hpp"

namespace quadrant {
namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Error bad_number(std::string_view text) {
  return Error(ErrorKind::parse, "malformed number '" + std::string(text) + "'");
}

Integer ten_pow(unsigned long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_canonical_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) throw bad_number(text);
  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  std::string_view num_digits = num;
  if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
  if (!all_digits(num_digits) || !all_digits(den)) throw bad_number(text);
  // Leading zeros are not canonical ("007/1", "-0/1").
  if ((num_digits.size() > 1 && num_digits.front() == '0') ||
      (den.size() > 1 && den.front() == '0') ||
      (num.front() == '-' && num_digits == "0")) {
    throw bad_number(text);
  }
  Integer n{std::string(num)};
  Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
  Integer g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1) {
    throw Error(ErrorKind::parse, "fraction not in lowest terms: '" + std::string(text) + "'");
  }
  return Rational(n, d);
}

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw bad_number(text);

  bool negative = false;
  std::string_view body = s;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    std::string_view num = body.substr(0, slash);
    std::string_view den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw bad_number(text);
    Integer d(std::string{den});
    if (d == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    Rational r(Integer(std::string{num}), d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  // Decimal: digits [. digits] [e|E [+-] digits]
  std::string_view mantissa = body;
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    mantissa = body.substr(0, e);
    std::string_view exp_text = body.substr(e + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) throw bad_number(text);
    exponent = std::stol(std::string(exp_text));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = mantissa.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = mantissa.substr(0, dot);
    std::string_view frac_part = mantissa.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) throw bad_number(text);
    if ((!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
      throw bad_number(text);
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(mantissa)) throw bad_number(text);
    digits = std::string(mantissa);
  }

  Rational r{Integer(digits)};
  if (exponent > 0) {
    r *= ten_pow(static_cast<unsigned long>(exponent));
  } else if (exponent < 0) {
    r /= ten_pow(static_cast<unsigned long>(-exponent));
  }
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string to_canonical_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::string to_short_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return to_canonical_string(r);
}

Rational from_double(double d) {
  if (!std::isfinite(d)) throw invalid_input("non-finite value has no exact rational form");
  return Rational(d);
}

double to_double(const Rational& r) { return r.get_d(); }

int sign(const Rational& r) { return sgn(r); }

long floor_log2(const Rational& r) {
  const mpz_srcptr num = r.get_num_mpz_t();
  const mpz_srcptr den = r.get_den_mpz_t();
  long e = static_cast<long>(mpz_sizeinbase(num, 2)) - static_cast<long>(mpz_sizeinbase(den, 2));
  // 2^e is within a factor of two of |r|; settle the boundary exactly.
  Rational scaled = abs(r);
  if (e >= 0) scaled /= Rational(Integer(1) << static_cast<mp_bitcnt_t>(e));
  else scaled *= Rational(Integer(1) << static_cast<mp_bitcnt_t>(-e));
  if (scaled < 1) --e;
  return e;
}

Rational round_to_bits(const Rational& r, unsigned bits) {
  if (sgn(r) == 0 || bits == 0) return Rational(0);
  const long shift = static_cast<long>(bits) - 1 - floor_log2(r);
  Integer n = r.get_num();
  Integer d = r.get_den();
  if (shift >= 0) n <<= static_cast<mp_bitcnt_t>(shift);
  else d <<= static_cast<mp_bitcnt_t>(-shift);
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  Rational out(q);
  if (shift >= 0) out /= Rational(Integer(1) << static_cast<mp_bitcnt_t>(shift));
  else out *= Rational(Integer(1) << static_cast<mp_bitcnt_t>(-shift));
  return out;
}

}  // namespace quadrant
