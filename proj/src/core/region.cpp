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

#include "core/region.hpp"

#include <cmath>
#include <string>

#include "core/error.hpp"

namespace quadrant {
namespace {

bool contains_relaxed(Region r, const Rational& x, const Rational& y, const Rational& slack) {
  if (sgn(x) <= 0 || sgn(y) <= 0) return false;
  if (r == Region::Q) return true;
  const bool above_hyperbola = x * y - 1 >= -slack;
  if (r == Region::A) return above_hyperbola;
  return above_hyperbola || y - x >= -slack;
}

}  // namespace

Region parse_region(std::string_view name) {
  if (name == "Q") return Region::Q;
  if (name == "A") return Region::A;
  if (name == "B") return Region::B;
  throw invalid_input("unknown region '" + std::string(name) + "' (expected Q, A or B)");
}

std::string_view region_name(Region r) {
  switch (r) {
    case Region::Q: return "Q";
    case Region::A: return "A";
    case Region::B: return "B";
  }
  return "?";
}

bool contains(Region r, const Rational& x, const Rational& y) {
  return contains_relaxed(r, x, y, Rational(0));
}

bool contains(Region r, double x, double y, double slack) {
  if (!std::isfinite(x) || !std::isfinite(y)) return false;
  return contains_relaxed(r, from_double(x), from_double(y), from_double(slack));
}

}  // namespace quadrant
