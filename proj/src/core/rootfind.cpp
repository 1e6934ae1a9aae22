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

#include "core/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace quadrant {
namespace {

void require_univariate(const Poly& p) {
  if (p.arity() != 1) throw invalid_input("root finding needs a univariate polynomial");
}

double abs_value_at(const Poly& p, double x) {
  const Rational at = from_double(x);
  return std::fabs(to_double(p.eval(std::span<const Rational>(&at, 1))));
}

}  // namespace

int sign_at(const Poly& p, double x) {
  const Rational at = from_double(x);
  return sign(p.eval(std::span<const Rational>(&at, 1)));
}

Bracket make_bracket(const Poly& p, double lo, double hi) {
  require_univariate(p);
  if (!(lo <= hi)) throw invalid_input("bracket needs lo <= hi");
  return Bracket{lo, hi, sign_at(p, lo), sign_at(p, hi)};
}

RootResult bisect(const Poly& p, const Bracket& bracket, const RootOptions& options) {
  require_univariate(p);
  if (!(options.tol > 0)) throw invalid_input("bisect: tolerance must be positive");
  if (!bracket.valid()) {
    throw invalid_input("bisect: no sign change on [" + std::to_string(bracket.lo) + ", " +
                        std::to_string(bracket.hi) + "]");
  }
  if (bracket.f_lo_sign == 0) return {bracket.lo, 0.0, 0};
  if (bracket.f_hi_sign == 0) return {bracket.hi, 0.0, 0};

  double lo = bracket.lo;
  double hi = bracket.hi;
  const int lo_sign = bracket.f_lo_sign;
  int iterations = 0;
  while (hi - lo > options.tol * std::fmax(1.0, std::fabs(hi))) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;  // adjacent doubles
    if (iterations == options.max_iter) {
      throw RootError("bisect: no convergence after " + std::to_string(iterations) +
                          " iterations",
                      mid);
    }
    ++iterations;
    const int s = sign_at(p, mid);
    if (s == 0) return {mid, 0.0, iterations};
    if (s == lo_sign) lo = mid; else hi = mid;
  }
  const double r_lo = abs_value_at(p, lo);
  const double r_hi = abs_value_at(p, hi);
  return r_lo <= r_hi ? RootResult{lo, r_lo, iterations} : RootResult{hi, r_hi, iterations};
}

Bracket grow_bracket(const Poly& p, double start, double target) {
  require_univariate(p);
  const unsigned degree = p.total_degree();
  if (degree % 2 == 0 || sign(p.leading_coefficient()) <= 0) {
    throw invalid_input("grow_bracket: polynomial must have odd degree and positive leading "
                        "coefficient");
  }
  if (!std::isfinite(start) || !std::isfinite(target)) {
    throw invalid_input("grow_bracket: non-finite start or target");
  }
  const Poly shifted = p - Poly::constant(1, from_double(target));
  const int start_sign = sign_at(shifted, start);
  if (start_sign > 0) throw invalid_input("grow_bracket: p(start) exceeds target");
  if (start_sign == 0) return {start, start, 0, 0};

  constexpr double kGuard = 1e300;
  double step = 1.0;
  while (true) {
    const double m = start + step;
    if (!std::isfinite(m) || std::fabs(m) > kGuard) {
      throw invalid_input("grow_bracket: no upper bracket below the overflow guard");
    }
    if (m > start) {
      const int s = sign_at(shifted, m);
      if (s >= 0) return {start, m, start_sign, s};
    }
    step *= 2;
  }
}

int sign_at(const Poly& p, const Rational& x) {
  return sign(p.eval(std::span<const Rational>(&x, 1)));
}

ExactBracket make_exact_bracket(const Poly& p, const Rational& lo, const Rational& hi) {
  require_univariate(p);
  if (!(lo <= hi)) throw invalid_input("bracket needs lo <= hi");
  return ExactBracket{lo, hi, sign_at(p, lo), sign_at(p, hi)};
}

ExactRoot bisect_exact(const Poly& p, const ExactBracket& bracket, unsigned bits, int max_iter) {
  require_univariate(p);
  if (bits == 0) throw invalid_input("bisect_exact: precision must be positive");
  if (!bracket.valid()) throw invalid_input("bisect_exact: no sign change in bracket");
  if (bracket.f_lo_sign == 0) return {bracket.lo, bracket.lo, bracket.lo, 0};
  if (bracket.f_hi_sign == 0) return {bracket.hi, bracket.hi, bracket.hi, 0};

  Rational lo = bracket.lo;
  Rational hi = bracket.hi;
  const Rational scale(Integer(1) << bits);
  int iterations = 0;
  while ((hi - lo) * scale > std::max(abs(lo), abs(hi))) {
    Rational mid = (lo + hi) / 2;
    if (iterations == max_iter) {
      throw RootError("bisect_exact: no convergence after " + std::to_string(iterations) +
                          " iterations",
                      to_double(mid));
    }
    ++iterations;
    const int s = sign_at(p, mid);
    if (s == 0) return {mid, mid, mid, iterations};
    if (s == bracket.f_lo_sign) lo = std::move(mid); else hi = std::move(mid);
  }
  Rational root = (lo + hi) / 2;
  return {std::move(root), std::move(lo), std::move(hi), iterations};
}

ExactBracket grow_bracket_exact(const Poly& p, const Rational& start, const Rational& target) {
  require_univariate(p);
  if (p.total_degree() % 2 == 0 || sign(p.leading_coefficient()) <= 0) {
    throw invalid_input("grow_bracket: polynomial must have odd degree and positive leading "
                        "coefficient");
  }
  const Poly shifted = p - Poly::constant(1, target);
  const int start_sign = sign_at(shifted, start);
  if (start_sign > 0) throw invalid_input("grow_bracket: p(start) exceeds target");
  if (start_sign == 0) return {start, start, 0, 0};

  Rational step(1);
  for (int doublings = 0; doublings < 8192; ++doublings) {
    Rational m = start + step;
    const int s = sign_at(shifted, m);
    if (s >= 0) return {start, std::move(m), start_sign, s};
    step *= 2;
  }
  throw invalid_input("grow_bracket: no upper bracket within 2^8192 of start");
}

}  // namespace quadrant
