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

#include "core/preimage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/region.hpp"
#include "core/rootfind.hpp"

namespace quadrant {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double up(double x) { return std::nextafter(x, kInf); }
double down(double x) { return std::nextafter(x, -kInf); }

Rational value_at(const Poly& p, double x) {
  const Rational at = from_double(x);
  return p.eval(std::span<const Rational>(&at, 1));
}

// Root of p - target on [lo, hi]. The callers know analytically that a root
// lies in the exact interval the doubles approximate; when rounding of the
// endpoints loses the sign change, the better endpoint is that root.
double solve_between(const Poly& p, double target, double lo, double hi) {
  const Poly g = p - Poly::constant(1, from_double(target));
  Bracket b = make_bracket(g, lo, hi);
  if (b.valid()) return bisect(g, b, RootOptions::full_precision()).root;
  return abs(value_at(g, lo)) <= abs(value_at(g, hi)) ? lo : hi;
}

double solve_above(const Poly& p, double target, double lo) {
  const Poly g = p - Poly::constant(1, from_double(target));
  if (sign_at(g, lo) > 0) return lo;
  Bracket b = grow_bracket(p, lo, target);
  return bisect(g, b, RootOptions::full_precision()).root;
}

// Smallest double d with d * x >= k exactly.
double at_least_ratio(double k, double x) {
  const Rational ex = from_double(x);
  const Rational ek = from_double(k);
  double d = k / x;
  while (from_double(d) * ex < ek) d = up(d);
  while (from_double(down(d)) * ex >= ek) d = down(d);
  return d;
}

Error stage_error(const char* stage, const Error& e) {
  return Error(e.kind(), std::string("stage ") + stage + ": " + e.what());
}

}  // namespace

Poly stage_F_quartic(const Rational& a, const Rational& b) {
  Poly p(1);
  p.add_term(Monomial({4}), Rational(1));
  p.add_term(Monomial({2}), -(a + b + 1));
  p.add_term(Monomial({1}), Rational(-2));
  p.add_term(Monomial({0}), a * b - 1);
  return p;
}

Poly stage_G_fiber(const Rational& x) {
  const Poly& g2 = Catalog::standard().G.component(1);
  const Poly inner[] = {Poly::constant(1, x), Poly::variable(1, 0)};
  return g2.compose(inner);
}

Poly stage_H_fiber(const Rational& y) {
  const Poly& h1 = Catalog::standard().H.component(0);
  const Poly inner[] = {Poly::variable(1, 0), Poly::constant(1, y)};
  return h1.compose(inner);
}

Point2 invert_F(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !contains(Region::A, a, b)) {
    throw invalid_input("invert_F: (a, b) must satisfy a > 0, b > 0, ab >= 1");
  }
  const Rational ea = from_double(a);
  const Poly quartic = stage_F_quartic(ea, from_double(b));

  // P(0) = ab - 1 >= 0 and P(sqrt a) = -2 sqrt(a) - a - 1 < 0. Confirm the
  // upper sign on the rounded-up double instead of assuming it.
  double hi = up(std::sqrt(a));
  while (sign_at(quartic, hi) >= 0) hi = up(hi);
  const RootResult r = bisect(quartic, make_bracket(quartic, 0.0, hi),
                              RootOptions::full_precision());

  const Rational z = from_double(r.root);
  const Rational gap = ea - z * z;
  if (sgn(gap) <= 0) throw Error(ErrorKind::numeric, "invert_F: root at or beyond sqrt(a)");
  const double x0 = std::sqrt(to_double(gap));
  const double y0 = (r.root + 1.0) / x0;
  return {x0, y0};
}

double invert_G(double x, double w) {
  if (!std::isfinite(x) || !std::isfinite(w) || !contains(Region::B, x, w)) {
    throw invalid_input("invert_G: (x, w) must lie in B: x > 0 and w >= min(x, 1/x)");
  }
  const Rational ex = from_double(x);
  const Rational ew = from_double(w);
  const Poly fiber = stage_G_fiber(ex);
  // Every candidate is >= lo, and lo * x >= 1 exactly, so (x, y') is in A.
  const double lo = at_least_ratio(1.0, x);

  if (ew * ex >= 1) {
    // fiber(1/x) = 1/x <= w; the cubic grows without bound.
    return solve_above(fiber, w, lo);
  }
  // x < 1 and x <= w < 1/x: fiber(1/x) = 1/x > w >= x = fiber(2/x).
  if (ew == ex) return 2.0 / x;
  return solve_between(fiber, w, lo, 2.0 / x);
}

double invert_H(double u, double v) {
  if (!std::isfinite(u) || !std::isfinite(v) || !contains(Region::Q, u, v)) {
    throw invalid_input("invert_H: (u, v) must lie in the open quadrant");
  }
  const Rational ev = from_double(v);
  const Poly fiber = stage_H_fiber(ev);

  if (ev >= 1) {
    // Every x > 0 is in B when y >= 1; fiber(0) = 0 < u.
    return solve_above(fiber, u, 0.0);
  }

  // 0 < v < 1: B's fiber is ]0, v] ∪ [1/v, ∞[. fiber(v) > v = fiber(2/v),
  // so targets up to fiber(v) are reached on ]0, v] and the rest beyond 2/v.
  auto left = [&] { return solve_between(fiber, u, 0.0, v); };
  auto right = [&] { return solve_above(fiber, u, at_least_ratio(2.0, v)); };
  const double threshold = to_double(value_at(fiber, v));
  if (std::fabs(u - threshold) <= 1e-9 * threshold) {
    const double a = left();
    const double b = right();
    const Rational eu = from_double(u);
    return abs(value_at(fiber, a) - eu) <= abs(value_at(fiber, b) - eu) ? a : b;
  }
  return u < threshold ? left() : right();
}

namespace {

Rational exact_at(const Poly& p, const Rational& x) {
  return p.eval(std::span<const Rational>(&x, 1));
}

Rational exact_between(const Poly& p, const Rational& target, const Rational& lo,
                       const Rational& hi, unsigned bits) {
  const Poly g = p - Poly::constant(1, target);
  return bisect_exact(g, make_exact_bracket(g, lo, hi), bits).root;
}

Rational exact_above(const Poly& p, const Rational& target, const Rational& lo, unsigned bits) {
  const Poly g = p - Poly::constant(1, target);
  return bisect_exact(g, grow_bracket_exact(p, lo, target), bits).root;
}

// Dyadic lower bound on sqrt(r) with about `bits` significant bits.
Rational sqrt_below(const Rational& r, unsigned bits) {
  const long e = floor_log2(r);
  // Scale by an even power of two so the integer square root carries `bits` bits.
  long shift = 2 * static_cast<long>(bits) - e;
  if (shift % 2 != 0) ++shift;
  Rational scaled = r;
  if (shift >= 0) scaled *= Rational(Integer(1) << static_cast<mp_bitcnt_t>(shift));
  else scaled /= Rational(Integer(1) << static_cast<mp_bitcnt_t>(-shift));
  Integer whole;
  mpz_tdiv_q(whole.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  Integer root;
  mpz_sqrt(root.get_mpz_t(), whole.get_mpz_t());
  Rational out(root);
  const long half = shift / 2;
  if (half >= 0) out /= Rational(Integer(1) << static_cast<mp_bitcnt_t>(half));
  else out *= Rational(Integer(1) << static_cast<mp_bitcnt_t>(-half));
  return out;
}

Point2 nearest(const ExactPoint& p) { return {to_double(p.x), to_double(p.y)}; }

}  // namespace

ExactPoint invert_F_exact(const Rational& a, const Rational& b, unsigned bits) {
  if (!contains(Region::A, a, b)) {
    throw invalid_input("invert_F: (a, b) must satisfy a > 0, b > 0, ab >= 1");
  }
  const Poly quartic = stage_F_quartic(a, b);
  // P(sqrt a) < 0, so lower approximations of sqrt(a) close enough give P(hi) < 0.
  unsigned hi_bits = bits + 8;
  Rational hi = sqrt_below(a, hi_bits);
  while (sign_at(quartic, hi) >= 0) {
    hi_bits *= 2;
    if (hi_bits > 1u << 16) throw Error(ErrorKind::numeric, "invert_F: no negative upper bracket");
    hi = sqrt_below(a, hi_bits);
  }
  const ExactRoot r = bisect_exact(quartic, make_exact_bracket(quartic, Rational(0), hi), bits);
  const Rational gap = a - r.root * r.root;  // positive since r.root < hi <= sqrt(a)
  const Rational x0 = sqrt_below(gap, bits);
  const Rational y0 = round_to_bits((r.root + 1) / x0, bits);
  return {x0, y0};
}

Rational invert_G_exact(const Rational& x, const Rational& w, unsigned bits) {
  if (!contains(Region::B, x, w)) {
    throw invalid_input("invert_G: (x, w) must lie in B: x > 0 and w >= min(x, 1/x)");
  }
  const Poly fiber = stage_G_fiber(x);
  const Rational lo = 1 / x;
  if (w * x >= 1) return exact_above(fiber, w, lo, bits);
  return exact_between(fiber, w, lo, 2 / x, bits);
}

Rational invert_H_exact(const Rational& u, const Rational& v, unsigned bits) {
  if (!contains(Region::Q, u, v)) {
    throw invalid_input("invert_H: (u, v) must lie in the open quadrant");
  }
  const Poly fiber = stage_H_fiber(v);
  if (v >= 1) return exact_above(fiber, u, Rational(0), bits);
  if (u <= exact_at(fiber, v)) return exact_between(fiber, u, Rational(0), v, bits);
  return exact_above(fiber, u, 2 / v, bits);
}

double relative_residual(const PolyMap& f, const ExactPoint& source, const ExactPoint& target) {
  const Rational point[] = {source.x, source.y};
  const std::vector<Rational> image = f.eval(point);
  const Rational goal[] = {target.x, target.y};
  Rational worst(0);
  for (std::size_t i = 0; i < 2; ++i) {
    Rational scale = abs(goal[i]);
    if (scale < 1) scale = 1;
    const Rational r = abs(image[i] - goal[i]) / scale;
    if (r > worst) worst = r;
  }
  return to_double(worst);
}

double relative_residual(const PolyMap& f, Point2 source, Point2 target) {
  return relative_residual(f, ExactPoint{from_double(source.x), from_double(source.y)},
                           ExactPoint{from_double(target.x), from_double(target.y)});
}

namespace {

PreimageWitness solve_at(const Rational& u, const Rational& v, unsigned bits) {
  PreimageWitness w;
  w.target_exact = {u, v};
  w.target = nearest(w.target_exact);

  try {
    w.stage_H_exact = {invert_H_exact(u, v, bits), v};
  } catch (const Error& e) {
    throw stage_error("H", e);
  }
  if (!contains(Region::B, w.stage_H_exact.x, w.stage_H_exact.y)) {
    throw Error(ErrorKind::numeric, "stage H: point left B");
  }

  try {
    w.stage_G_exact = {w.stage_H_exact.x, invert_G_exact(w.stage_H_exact.x, v, bits)};
  } catch (const Error& e) {
    throw stage_error("G", e);
  }
  if (!contains(Region::A, w.stage_G_exact.x, w.stage_G_exact.y)) {
    throw Error(ErrorKind::numeric, "stage G: point left A");
  }

  try {
    w.source_exact = invert_F_exact(w.stage_G_exact.x, w.stage_G_exact.y, bits);
  } catch (const Error& e) {
    throw stage_error("F", e);
  }

  w.stage_H_point = nearest(w.stage_H_exact);
  w.stage_G_point = nearest(w.stage_G_exact);
  w.source = nearest(w.source_exact);

  const PolyMap& f = Catalog::standard().f;
  const Rational src[] = {w.source_exact.x, w.source_exact.y};
  const auto image = f.eval(src);
  w.image = {to_double(image[0]), to_double(image[1])};
  w.residual = relative_residual(f, w.source_exact, w.target_exact);
  return w;
}

}  // namespace

PreimageWitness preimage(const Rational& u, const Rational& v, const PreimageOptions& options) {
  if (!contains(Region::Q, u, v)) throw invalid_input("target not in open quadrant");
  if (options.precision_bits < 53 || options.max_precision_bits < options.precision_bits) {
    throw invalid_input("preimage: need 53 <= precision_bits <= max_precision_bits");
  }
  unsigned bits = options.precision_bits;
  PreimageWitness w = solve_at(u, v, bits);
  while (!(w.residual <= options.residual_bound) && bits < options.max_precision_bits) {
    bits = std::min(2 * bits, options.max_precision_bits);
    w = solve_at(u, v, bits);
  }
  if (!(w.residual <= options.residual_bound)) {
    throw Error(ErrorKind::numeric, "residual " + std::to_string(w.residual) +
                                        " exceeds bound " + std::to_string(options.residual_bound));
  }
  const PolyMap& f = Catalog::standard().f;
  w.float_source_residual = relative_residual(
      f, ExactPoint{from_double(w.source.x), from_double(w.source.y)}, w.target_exact);
  return w;
}

PreimageWitness preimage(Point2 q, const PreimageOptions& options) {
  if (!std::isfinite(q.x) || !std::isfinite(q.y)) throw invalid_input("target not in open quadrant");
  return preimage(from_double(q.x), from_double(q.y), options);
}

nlohmann::ordered_json to_json(const PreimageWitness& w) {
  auto pt = [](Point2 p) { return nlohmann::ordered_json::array({p.x, p.y}); };
  return {{"target", pt(w.target)},
          {"stages", {{"H", pt(w.stage_H_point)}, {"G", pt(w.stage_G_point)}}},
          {"source", pt(w.source)},
          {"source_exact", {to_canonical_string(w.source_exact.x),
                            to_canonical_string(w.source_exact.y)}},
          {"image", {w.image[0], w.image[1]}},
          {"residual", w.residual},
          {"float_source_residual", w.float_source_residual}};
}

}  // namespace quadrant
