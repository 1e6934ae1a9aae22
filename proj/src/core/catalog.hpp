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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "core/polymap.hpp"

namespace quadrant {

// The three stage maps of the quadrant construction, in expanded form:
//   F(x,y) = ((xy-1)^2 + x^2, (xy-1)^2 + y^2)
//   G(x,y) = (x, y(xy-2)^2 + x(xy-1)^2)
//   H(x,y) = (x(xy-2)^2 + (1/2)xy^2, y)
PolyMap build_F();
PolyMap build_G();
PolyMap build_H();
/// H ∘ G ∘ F, expanded. Component degrees (52, 20), 350 monomials.
PolyMap build_f();
/// The older quadrant map, transcribed term-for-term from its published
/// grouped form.
PolyMap build_g_old();
/// The same map from the flat term list; must equal build_g_old().
PolyMap build_g_old_from_terms();

/// Immutable set of the named maps F, G, H, GF (= G∘F), f and g.
struct Catalog {
  PolyMap F;
  PolyMap G;
  PolyMap H;
  PolyMap GF;
  PolyMap f;
  PolyMap g;

  /// Built once on first use; thread-safe.
  static const Catalog& standard();

  const PolyMap& get(std::string_view name) const;
  PolyMap& get(std::string_view name);

  /// Copy with one coefficient of one map perturbed, chosen by `seed`.
  /// For exercising the verification suites.
  Catalog corrupted(std::uint64_t seed) const;
};

const std::vector<std::string>& catalog_names();
std::string_view provenance(std::string_view name);

}  // namespace quadrant
