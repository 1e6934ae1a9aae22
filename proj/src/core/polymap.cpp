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

#include "core/polymap.hpp"

#include <string>

#include "core/error.hpp"

namespace quadrant {

PolyMap::PolyMap(std::size_t input_arity, std::vector<Poly> components)
    : input_arity_(input_arity), components_(std::move(components)) {
  if (components_.empty()) throw invalid_input("polynomial map needs at least one component");
  for (const Poly& p : components_) {
    if (p.arity() != input_arity_) {
      throw invalid_input("component of arity " + std::to_string(p.arity()) +
                          " in map of input arity " + std::to_string(input_arity_));
    }
  }
}

PolyMap PolyMap::identity(std::size_t n) {
  std::vector<Poly> comps;
  comps.reserve(n);
  for (std::size_t i = 0; i < n; ++i) comps.push_back(Poly::variable(n, i));
  return PolyMap(n, std::move(comps));
}

std::vector<Rational> PolyMap::eval(std::span<const Rational> point) const {
  std::vector<Rational> out;
  out.reserve(components_.size());
  for (const Poly& p : components_) out.push_back(p.eval(point));
  return out;
}

std::vector<double> PolyMap::eval(std::span<const double> point) const {
  std::vector<double> out;
  out.reserve(components_.size());
  for (const Poly& p : components_) out.push_back(p.eval(point));
  return out;
}

PolyMap compose(const PolyMap& outer, const PolyMap& inner) {
  if (outer.input_arity() != inner.output_arity()) {
    throw invalid_input("map_compose: outer map takes " + std::to_string(outer.input_arity()) +
                        " inputs, inner map has " + std::to_string(inner.output_arity()) +
                        " components");
  }
  std::vector<Poly> comps;
  comps.reserve(outer.output_arity());
  for (const Poly& p : outer.components()) comps.push_back(p.compose(inner.components()));
  return PolyMap(inner.input_arity(), std::move(comps));
}

Metrics metrics(const PolyMap& m) {
  Metrics r;
  for (const Poly& p : m.components()) {
    r.degrees.push_back(p.total_degree());
    r.monomials.push_back(p.monomial_count());
    r.total_degree += p.total_degree();
    r.total_monomials += p.monomial_count();
  }
  return r;
}

}  // namespace quadrant
