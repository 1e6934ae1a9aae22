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

#include <array>

#include <json.hpp>

#include "core/polymap.hpp"
#include "core/rational.hpp"

namespace quadrant {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

struct ExactPoint {
  Rational x;
  Rational y;
};

// Univariate slices used by the stage inversions.

/// z^4 - (a+b+1)z^2 - 2z + (ab-1). A root z0 in [0, sqrt(a)) yields the
/// F-preimage x0 = sqrt(a - z0^2), y0 = (z0+1)/x0.
Poly stage_F_quartic(const Rational& a, const Rational& b);
/// Second component of G with its first argument fixed at x, as a
/// polynomial in y: x^2 y^3 + (x^3-4x) y^2 + (4-2x^2) y + x.
Poly stage_G_fiber(const Rational& x);
/// First component of H with its second argument fixed at y, as a
/// polynomial in x: y^2 x^3 - 4y x^2 + (4 + y^2/2) x.
Poly stage_H_fiber(const Rational& y);

/// (x0, y0) with F(x0, y0) ≈ (a, b). Requires (a, b) in A.
Point2 invert_F(double a, double b);
/// y' >= 1/x with G(x, y') ≈ (x, w), so (x, y') lies in A. Requires (x, w)
/// in B.
double invert_G(double x, double w);
/// x' with (x', v) in B and H(x', v) ≈ (u, v). Requires (u, v) in Q.
double invert_H(double u, double v);

// Exact-input counterparts. Roots are bracketed to 2^-bits relative width and
// every returned stage point satisfies its region predicate exactly.
ExactPoint invert_F_exact(const Rational& a, const Rational& b, unsigned bits);
Rational invert_G_exact(const Rational& x, const Rational& w, unsigned bits);
Rational invert_H_exact(const Rational& u, const Rational& v, unsigned bits);

struct PreimageWitness {
  ExactPoint target_exact;
  ExactPoint stage_H_exact;  // in B, H maps it to target
  ExactPoint stage_G_exact;  // in A, G maps it to stage_H_exact
  ExactPoint source_exact;   // F maps it to stage_G_exact

  // Nearest doubles of the exact points, for display and float consumers.
  Point2 target;
  Point2 stage_H_point;
  Point2 stage_G_point;
  Point2 source;

  std::array<double, 2> image{};  // f(source_exact), evaluated exactly then rounded
  double residual = 0.0;          // measured at source_exact
  double float_source_residual = 0.0;  // measured at the rounded source
};

struct PreimageOptions {
  double residual_bound = 1e-6;
  /// Relative precision of every bracketed stage root on the first attempt.
  unsigned precision_bits = 256;
  /// Precision doubles while the residual exceeds the bound, up to this cap.
  unsigned max_precision_bits = 8192;
};

/// max_i |f_i(source) - target_i| / max(1, |target_i|), with f evaluated
/// exactly on the binary value of `source`.
double relative_residual(const PolyMap& f, Point2 source, Point2 target);

/// Chains invert_H, invert_G and invert_F. Throws Error(invalid_input) when
/// q is not in Q, Error(numeric) when the residual bound or a stage
/// membership audit fails; every message names the failing stage.
double relative_residual(const PolyMap& f, const ExactPoint& source, const ExactPoint& target);

PreimageWitness preimage(const Rational& u, const Rational& v,
                         const PreimageOptions& options = {});
PreimageWitness preimage(Point2 q, const PreimageOptions& options = {});

nlohmann::ordered_json to_json(const PreimageWitness& w);

}  // namespace quadrant
