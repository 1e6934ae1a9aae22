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

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace quadrant {

/// Exact rational number. GMP keeps it canonical (gcd 1, positive
/// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p/q", an integer, or a decimal in fixed or scientific notation
/// ("0.25", "-1.5e-3"). Decimals convert exactly. Throws Error(parse) on
/// malformed text and on a zero denominator.
Rational parse_rational(std::string_view text);

/// Parses only the canonical "p/q" form: q > 0 and gcd(p, q) = 1.
Rational parse_canonical_rational(std::string_view text);

/// Always "p/q", including "n/1" for integers.
std::string to_canonical_string(const Rational& r);

/// Shortest form: "n" for integers, "p/q" otherwise.
std::string to_short_string(const Rational& r);

/// Exact value of a finite double.
Rational from_double(double d);

/// Nearest double toward zero (within one ulp).
double to_double(const Rational& r);

int sign(const Rational& r);

/// Nearest dyadic rational with at most `bits` significant bits, rounding
/// toward zero. Zero stays zero.
Rational round_to_bits(const Rational& r, unsigned bits);

/// floor(log2 |r|) for nonzero r.
long floor_log2(const Rational& r);

}  // namespace quadrant
