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

#include <string_view>

#include "core/rational.hpp"

namespace quadrant {

// Q = {x > 0, y > 0}
// A = {xy - 1 >= 0} ∩ Q
// B = A ∪ {y >= x > 0}
enum class Region { Q, A, B };

Region parse_region(std::string_view name);
std::string_view region_name(Region r);

/// Exact membership.
bool contains(Region r, const Rational& x, const Rational& y);

/// Membership of a double point, decided exactly on its binary value. With
/// slack > 0 each closed defining inequality g >= 0 is relaxed to
/// g >= -slack; the strict x > 0, y > 0 are never relaxed.
bool contains(Region r, double x, double y, double slack = 0.0);

inline bool in_Q(double x, double y) { return contains(Region::Q, x, y); }
inline bool in_A(double x, double y) { return contains(Region::A, x, y); }
inline bool in_B(double x, double y) { return contains(Region::B, x, y); }

}  // namespace quadrant
