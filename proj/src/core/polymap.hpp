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

#include <cstddef>
#include <span>
#include <vector>

#include "core/poly.hpp"

namespace quadrant {

/// Polynomial map R^n -> R^m given by m components of common arity n.
class PolyMap {
 public:
  PolyMap(std::size_t input_arity, std::vector<Poly> components);

  static PolyMap identity(std::size_t n);

  std::size_t input_arity() const noexcept { return input_arity_; }
  std::size_t output_arity() const noexcept { return components_.size(); }
  const std::vector<Poly>& components() const noexcept { return components_; }
  const Poly& component(std::size_t i) const { return components_.at(i); }

  std::vector<Rational> eval(std::span<const Rational> point) const;
  std::vector<double> eval(std::span<const double> point) const;

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  std::size_t input_arity_;
  std::vector<Poly> components_;
};

/// outer ∘ inner, fully expanded.
PolyMap compose(const PolyMap& outer, const PolyMap& inner);

struct Metrics {
  std::vector<unsigned> degrees;
  std::vector<std::size_t> monomials;
  unsigned total_degree = 0;  // sum over components
  std::size_t total_monomials = 0;
};

Metrics metrics(const PolyMap& m);

}  // namespace quadrant
