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

#include "core/error.hpp"
#include "core/poly.hpp"

namespace quadrant {

/// Interval [lo, hi] with the signs of a univariate polynomial at its ends.
/// Valid when lo <= hi and the signs do not agree (a sign change or an
/// endpoint root).
struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  int f_lo_sign = 0;
  int f_hi_sign = 0;

  bool valid() const noexcept { return lo <= hi && f_lo_sign * f_hi_sign <= 0; }
};

struct RootResult {
  double root = 0.0;
  double residual = 0.0;  // |p(root)|
  int iterations = 0;
};

struct RootOptions {
  /// Stop once hi - lo <= tol * max(1, |hi|).
  double tol = 1e-12;
  int max_iter = 200;

  /// Bisect until the bracket can no longer be split in double precision.
  static RootOptions full_precision() noexcept { return {0x1p-1074, 4000}; }
};

/// Raised when bisection runs out of iterations; carries the midpoint of the
/// last bracket.
class RootError : public Error {
 public:
  RootError(const std::string& what, double best_estimate)
      : Error(ErrorKind::numeric, what), best_estimate_(best_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }

 private:
  double best_estimate_;
};

/// Exact sign of p at a double (the double is converted without rounding).
int sign_at(const Poly& p, double x);

/// Bracket for p over [lo, hi] with exactly computed endpoint signs.
Bracket make_bracket(const Poly& p, double lo, double hi);

/// Bisection on a univariate polynomial. Signs are evaluated exactly, so the
/// returned root always has a genuine sign change of p within the final
/// bracket. An endpoint where p vanishes is returned immediately.
RootResult bisect(const Poly& p, const Bracket& bracket, const RootOptions& options = {});

/// For p of odd degree with positive leading coefficient and p(start) <=
/// target: finds M >= start with p(M) >= target by doubling the step from
/// start. The returned bracket carries the signs of p - target.
Bracket grow_bracket(const Poly& p, double start, double target);

/// Exact bracket over rationals; sign fields are the signs of p at lo, hi.
struct ExactBracket {
  Rational lo;
  Rational hi;
  int f_lo_sign = 0;
  int f_hi_sign = 0;

  bool valid() const { return lo <= hi && f_lo_sign * f_hi_sign <= 0; }
};

struct ExactRoot {
  Rational root;  // midpoint of the final bracket, or an exact zero
  Rational lo;
  Rational hi;
  int iterations = 0;
};

int sign_at(const Poly& p, const Rational& x);

ExactBracket make_exact_bracket(const Poly& p, const Rational& lo, const Rational& hi);

/// Bisection on dyadic midpoints until hi - lo <= 2^-bits * max(|lo|, |hi|).
/// Every sign is decided exactly, so the returned bracket always contains a
/// sign change (or an exact zero) of p.
ExactRoot bisect_exact(const Poly& p, const ExactBracket& bracket, unsigned bits,
                       int max_iter = 20000);

/// Exact counterpart of grow_bracket; returns the bracket for p - target.
ExactBracket grow_bracket_exact(const Poly& p, const Rational& start, const Rational& target);

}  // namespace quadrant
