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

#include "core/catalog.hpp"

#include <iterator>

#include "core/error.hpp"
#include "core/g_table1_terms.inc"
#include "core/polyio.hpp"
#include "core/rng.hpp"

namespace quadrant {
namespace {

const std::vector<std::string> kVars{"x", "y"};

PolyMap from_expressions(std::string_view first, std::string_view second) {
  return PolyMap(2, {parse_expression(first, kVars), parse_expression(second, kVars)});
}

// Grouped by descending powers of y, exactly as published.
constexpr std::string_view kG1 =
    "(x^18+2x^16+x^14)y^10"
    "+(-14x^17-30x^15+4x^14-18x^13+6x^12-2x^11+2x^10)y^9"
    "+(87x^16+202x^14-44x^13+143x^12-72x^11+34x^10-30x^9+7x^8-2x^7+x^6)y^8"
    "+(-316x^15-804x^13+208x^12-662x^11+378x^10-226x^9+192x^8-66x^7+26x^6-12x^5+2x^4)y^7"
    "+(743x^14+2094x^12-552x^11+1985x^10-1134x^9+828x^8-688x^7+269x^6-128x^5+58x^4-12x^3+x^2)y^6"
    "+(-1182x^13-3726x^11+900x^10-4046x^9+2124x^8-1922x^7+1522x^6-622x^5+340x^4-146x^3+28x^2-2x)y^5"
    "+(1289x^12+4582x^10-924x^9+5702x^8-2538x^7+3022x^6-2150x^5+906x^4-558x^3+207x^2-30x+1)y^4"
    "+(-952x^11-3840x^9+584x^8-5504x^7+1884x^6-3286x^5+1910x^4-888x^3+586x^2-162x+12)y^3"
    "+(456x^10+2096x^8-208x^7+3487x^6-792x^5+2408x^4-978x^3+621x^2-372x+55)y^2"
    "+(-128x^9-672x^7+32x^6-1308x^5+144x^4-1080x^3+220x^2-308x+112)y"
    "+(16x^8+96x^6+220x^4+224x^2+85)";

constexpr std::string_view kG2 =
    "x^16y^12"
    "+(-14x^15-2x^13+2x^12)y^11"
    "+(89x^14+26x^12-22x^11+x^10-2x^9+x^8)y^10"
    "+(-338x^13-152x^11+108x^10-12x^9+20x^8-8x^7)y^9"
    "+(849x^12+524x^10-308x^9+64x^8-88x^7+28x^6)y^8"
    "+(-1476x^11-1176x^9+558x^8-198x^7+220x^6-54x^5)y^7"
    "+(1808x^10+1792x^8-662x^7+391x^6-340x^5+61x^4)y^6"
    "+(-1562x^9-1878x^7+514x^6-512x^5+332x^4-40x^3)y^5"
    "+(944x^8+1344x^6-258x^5+447x^4-202x^3+15x^2)y^4"
    "+(-398x^7-644x^5+86x^4-254x^3+74x^2-4x)y^3"
    "+(121x^6+206x^4-22x^3+90x^2-18x+1)y^2"
    "+(-28x^5-48x^3+4x^2-20x+4)y"
    "+(4x^4+8x^2+4)";

template <std::size_t N>
Poly from_terms(const detail::GTerm (&terms)[N]) {
  Poly p(2);
  for (const auto& t : terms) p.add_term(Monomial({t.ex, t.ey}), Rational(t.coeff));
  return p;
}

}  // namespace

PolyMap build_F() { return from_expressions("(xy-1)^2+x^2", "(xy-1)^2+y^2"); }

PolyMap build_G() { return from_expressions("x", "y(xy-2)^2+x(xy-1)^2"); }

PolyMap build_H() { return from_expressions("x(xy-2)^2+(1/2)xy^2", "y"); }

PolyMap build_f() { return compose(build_H(), compose(build_G(), build_F())); }

PolyMap build_g_old() { return from_expressions(kG1, kG2); }

PolyMap build_g_old_from_terms() {
  return PolyMap(2, {from_terms(detail::kG1Terms), from_terms(detail::kG2Terms)});
}

const Catalog& Catalog::standard() {
  static const Catalog catalog = [] {
    PolyMap F = build_F();
    PolyMap G = build_G();
    PolyMap H = build_H();
    PolyMap GF = compose(G, F);
    PolyMap f = compose(H, GF);
    return Catalog{std::move(F), std::move(G), std::move(H), std::move(GF), std::move(f),
                   build_g_old()};
  }();
  return catalog;
}

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"F", "G", "H", "GF", "f", "g"};
  return names;
}

const PolyMap& Catalog::get(std::string_view name) const {
  if (name == "F") return F;
  if (name == "G") return G;
  if (name == "H") return H;
  if (name == "GF") return GF;
  if (name == "f") return f;
  if (name == "g") return g;
  throw invalid_input("unknown map '" + std::string(name) + "' (expected F, G, H, GF, f or g)");
}

PolyMap& Catalog::get(std::string_view name) {
  return const_cast<PolyMap&>(static_cast<const Catalog&>(*this).get(name));
}

Catalog Catalog::corrupted(std::uint64_t seed) const {
  Catalog copy = *this;
  SplitMix64 rng(seed);
  // Only maps that the verification suites audit are candidates.
  static const std::string_view audited[] = {"F", "G", "H", "f", "g"};
  PolyMap& target = copy.get(audited[rng.next() % std::size(audited)]);
  std::vector<Poly> comps = target.components();
  Poly& p = comps[rng.next() % comps.size()];
  auto it = p.terms().begin();
  std::advance(it, static_cast<std::ptrdiff_t>(rng.next() % p.monomial_count()));
  const Monomial m = it->first;
  p.add_term(m, Rational(1));
  target = PolyMap(target.input_arity(), std::move(comps));
  return copy;
}

std::string_view provenance(std::string_view name) {
  if (name == "F") return "first stage, (x,y) -> ((xy-1)^2+x^2, (xy-1)^2+y^2)";
  if (name == "G") return "second stage, (x,y) -> (x, y(xy-2)^2+x(xy-1)^2)";
  if (name == "H") return "third stage, (x,y) -> (x(xy-2)^2+xy^2/2, y)";
  if (name == "GF") return "G o F, expanded";
  if (name == "f") return "H o G o F, expanded";
  if (name == "g") return "older quadrant map, transcribed from its published expansion";
  throw invalid_input("unknown map '" + std::string(name) + "'");
}

}  // namespace quadrant
