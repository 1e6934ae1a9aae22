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

#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "core/error.hpp"
#include "core/polyio.hpp"
#include "core/polymap.hpp"
#include "core/rng.hpp"
#include "test_support.hpp"

using namespace quadrant;
using qdtest::frac;

namespace {

Poly xy(const char* text) { return parse_expression(text, {"x", "y"}); }

Poly random_poly(SplitMix64& rng, std::size_t arity, unsigned max_deg, int terms) {
  Poly p(arity);
  for (int t = 0; t < terms; ++t) {
    std::vector<Exponent> e(arity);
    for (auto& v : e) v = static_cast<Exponent>(rng.next() % (max_deg + 1));
    const long num = static_cast<long>(rng.next() % 41) - 20;
    const long den = static_cast<long>(rng.next() % 7) + 1;
    p.add_term(Monomial(e), frac(num, den));
  }
  return p;
}

int error_kind(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return static_cast<int>(e.kind());
  }
  return -1;
}

}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("decimal and fraction parsing is exact") {
    CHECK(parse_rational("0.1") == Rational(1, 10));
    CHECK(parse_rational("-2.50") == Rational(-5, 2));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("2.5E2") == 250);
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("  7 ") == 7);
    CHECK(parse_rational(".5") == Rational(1, 2));
    CHECK(parse_rational("+3") == 3);
  }

  TEST_CASE("malformed numbers are parse errors") {
    for (const char* bad : {"", "abc", "1/0", "1.2.3", "e5", "1e", "--1", "1/-2", "nan"}) {
      CAPTURE(bad);
      CHECK(error_kind([&] { parse_rational(bad); }) == static_cast<int>(ErrorKind::parse));
    }
  }

  TEST_CASE("canonical fractions are strict") {
    CHECK(parse_canonical_rational("3/2") == Rational(3, 2));
    CHECK(parse_canonical_rational("-7/1") == -7);
    CHECK(parse_canonical_rational("0/1") == 0);
    for (const char* bad : {"6/4", "3", "1.5", "03/2", "3/02", "-0/1", "+3/2", "3/0", " 3/2"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_canonical_rational(bad), Error);
    }
    CHECK(to_canonical_string(frac(-6, 4)) == "-3/2");
    CHECK(to_canonical_string(Rational(5)) == "5/1");
    CHECK(to_short_string(Rational(5)) == "5");
  }

  TEST_CASE("double conversion is exact on the way in") {
    CHECK(from_double(0.5) == Rational(1, 2));
    CHECK(from_double(0.1) != Rational(1, 10));
    CHECK(to_double(from_double(0.1)) == 0.1);
    CHECK(from_double(-0x1p-1074) == Rational(-1) / Rational(Integer(1) << 1074));
    CHECK_THROWS_AS(from_double(INFINITY), Error);
    CHECK_THROWS_AS(from_double(NAN), Error);
  }

  TEST_CASE("dyadic rounding toward zero") {
    CHECK(round_to_bits(Rational(1, 3), 4) == Rational(5, 16));
    CHECK(round_to_bits(Rational(-1, 3), 4) == Rational(-5, 16));
    CHECK(round_to_bits(Rational(12), 2) == 12);
    CHECK(round_to_bits(Rational(13), 2) == 12);
    CHECK(round_to_bits(Rational(0), 8) == 0);
    CHECK(floor_log2(Rational(1)) == 0);
    CHECK(floor_log2(Rational(3, 4)) == -1);
    CHECK(floor_log2(Rational(1024)) == 10);
    CHECK(floor_log2(Rational(1023)) == 9);
  }
}

TEST_SUITE("poly") {
  TEST_CASE("graded lexicographic order") {
    GradedLexGreater gt;
    CHECK(gt(Monomial({2, 2}), Monomial({3, 0})));
    CHECK(gt(Monomial({2, 0}), Monomial({1, 1})));
    CHECK(gt(Monomial({1, 1}), Monomial({0, 2})));
    CHECK_FALSE(gt(Monomial({0, 2}), Monomial({0, 2})));
  }

  TEST_CASE("construction and queries") {
    const Poly p = xy("3x^2y - y + 1/2");
    CHECK(p.arity() == 2);
    CHECK(p.total_degree() == 3);
    CHECK(p.monomial_count() == 3);
    CHECK(p.degree_in(0) == 2);
    CHECK(p.degree_in(1) == 1);
    CHECK(p.coefficient(Monomial({2, 1})) == 3);
    CHECK(p.coefficient(Monomial({5, 5})) == 0);
    CHECK(p.leading_coefficient() == 3);
    CHECK(Poly(2).total_degree() == 0);
    CHECK(Poly(2).is_zero());
    CHECK(Poly::constant(2, 0).is_zero());
    CHECK_THROWS_AS(Poly(0), Error);
    CHECK_THROWS_AS(Poly::variable(2, 2), Error);
  }

  TEST_CASE("add_term prunes cancellations") {
    Poly p(2);
    p.add_term(Monomial({1, 0}), 3);
    p.add_term(Monomial({1, 0}), -3);
    CHECK(p.is_zero());
    CHECK(xy("x - x") == Poly(2));
    CHECK((xy("x+y") - xy("y+x")).is_zero());
  }

  TEST_CASE("arithmetic on a small example") {
    CHECK(xy("(x+1)(x-1)") == xy("x^2 - 1"));
    CHECK(xy("(xy-1)^2 + x^2") == xy("x^2y^2 - 2xy + x^2 + 1"));
    CHECK(xy("x").pow(0) == Poly::constant(2, 1));
    CHECK(xy("2x+y").pow(3) == xy("8x^3 + 12x^2y + 6xy^2 + y^3"));
    CHECK(-xy("x - 2") == xy("2 - x"));
    CHECK(xy("x") * Rational(1, 2) == xy("1/2 x"));
  }

  TEST_CASE("arity mismatch is invalid input") {
    const Poly a = Poly::variable(2, 0);
    const Poly b = Poly::variable(3, 0);
    CHECK(error_kind([&] { (void)(a + b); }) == static_cast<int>(ErrorKind::invalid_input));
    CHECK(error_kind([&] { (void)(a * b); }) == static_cast<int>(ErrorKind::invalid_input));
    const Rational pt[] = {1};
    CHECK_THROWS_AS(a.eval(pt), Error);
  }

  TEST_CASE("ring axioms on random polynomials") {
    SplitMix64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
      const Poly a = random_poly(rng, 2, 4, 6);
      const Poly b = random_poly(rng, 2, 4, 6);
      const Poly c = random_poly(rng, 2, 3, 4);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + Poly(2) == a);
      CHECK(a * Poly::constant(2, 1) == a);
      CHECK((a - a).is_zero());
      const Poly ab = a * b;
      for (const auto& [m, coeff] : ab.terms()) CHECK(coeff != 0);
      if (!a.is_zero() && !b.is_zero()) {
        CHECK((a * b).total_degree() == a.total_degree() + b.total_degree());
      }
    }
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
      const Poly a = random_poly(rng, 2, 5, 6);
      const Poly b = random_poly(rng, 2, 5, 6);
      const Rational pt[] = {frac(static_cast<long>(rng.next() % 19) - 9, 4),
                             frac(static_cast<long>(rng.next() % 19) - 9, 3)};
      CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
      CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    }
  }

  TEST_CASE("double evaluation tracks exact evaluation") {
    const Poly p = xy("x^3y - 1/3 xy + 2");
    const double pd[] = {1.25, -0.5};
    const Rational pr[] = {from_double(1.25), from_double(-0.5)};
    CHECK(p.eval(std::span<const double>(pd)) == doctest::Approx(to_double(p.eval(pr))));
  }

  TEST_CASE("composition commutes with evaluation") {
    SplitMix64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
      const Poly outer = random_poly(rng, 2, 3, 5);
      const Poly inner[] = {random_poly(rng, 2, 2, 3), random_poly(rng, 2, 2, 3)};
      const Rational pt[] = {frac(static_cast<long>(rng.next() % 11) - 5, 2),
                             frac(static_cast<long>(rng.next() % 11) - 5, 7)};
      const Rational mid[] = {inner[0].eval(pt), inner[1].eval(pt)};
      CHECK(outer.compose(inner).eval(pt) == outer.eval(mid));
    }
  }

  TEST_CASE("composition changes arity") {
    const Poly p = xy("x^2 + y");
    const Poly inner[] = {Poly::variable(1, 0), Poly::constant(1, 3)};
    const Poly q = p.compose(inner);
    CHECK(q.arity() == 1);
    CHECK(q == parse_expression("z^2 + 3", {"z"}));
    const Poly wrong[] = {Poly::variable(1, 0)};
    CHECK_THROWS_AS(p.compose(wrong), Error);
  }
}

TEST_SUITE("polymap") {
  TEST_CASE("identity and composition") {
    const PolyMap m(2, {xy("x + y"), xy("xy")});
    CHECK(compose(m, PolyMap::identity(2)) == m);
    CHECK(compose(PolyMap::identity(2), m) == m);
    const PolyMap sq = compose(m, m);
    CHECK(sq.component(0) == xy("x + y + xy"));
    CHECK(sq.component(1) == xy("x^2y + xy^2"));
  }

  TEST_CASE("construction validates arity") {
    CHECK_THROWS_AS(PolyMap(2, {}), Error);
    CHECK_THROWS_AS(PolyMap(2, {Poly::variable(3, 0)}), Error);
    const PolyMap one(1, {Poly::variable(1, 0)});
    const PolyMap two(2, {xy("x"), xy("y")});
    CHECK_THROWS_AS(compose(two, one), Error);
  }

  TEST_CASE("metrics of a small map") {
    const PolyMap m(2, {xy("x^3 + y"), xy("1"), Poly(2)});
    const Metrics mt = metrics(m);
    CHECK(mt.degrees == std::vector<unsigned>{3, 0, 0});
    CHECK(mt.monomials == std::vector<std::size_t>{2, 1, 0});
    CHECK(mt.total_degree == 3);
    CHECK(mt.total_monomials == 3);
  }

  TEST_CASE("evaluation") {
    const PolyMap m(2, {xy("x + y"), xy("xy")});
    const Rational pt[] = {2, Rational(1, 2)};
    const auto v = m.eval(pt);
    CHECK(v[0] == Rational(5, 2));
    CHECK(v[1] == 1);
    const double pd[] = {2.0, 0.5};
    CHECK(m.eval(std::span<const double>(pd))[0] == 2.5);
  }
}

TEST_SUITE("polyio") {
  TEST_CASE("canonical serialization") {
    const PolyMap m(2, {xy("(xy-1)^2 + x^2"), xy("-1/2 y")});
    CHECK(serialize(m) == "1/1 2 2\n1/1 2 0\n-2/1 1 1\n1/1 0 0\n--\n-1/2 0 1\n");
    CHECK(serialize(Poly(2)) == "");
  }

  TEST_CASE("canonical round-trip is lossless and idempotent") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 25; ++trial) {
      const PolyMap m(3, {random_poly(rng, 3, 4, 7), random_poly(rng, 3, 3, 5)});
      const std::string text = serialize(m);
      const PolyMap back = parse_map(text, 3);
      CHECK(back == m);
      CHECK(serialize(back) == text);
    }
  }

  TEST_CASE("zero components survive with an arity hint") {
    const PolyMap m(2, {Poly(2), xy("x")});
    const std::string text = serialize(m);
    CHECK(text == "--\n1/1 1 0\n");
    CHECK(parse_map(text) == m);
    CHECK(parse_map("", 2) == PolyMap(2, {Poly(2)}));
    CHECK_THROWS_AS(parse_map(""), ParseError);
  }

  TEST_CASE("strict parse rejects non-canonical input with line numbers") {
    struct Case {
      const char* text;
      std::size_t line;
    };
    const Case cases[] = {
        {"1/1 1 0\n1/1 2 0\n", 2},           // order
        {"1/1 1 0\n2/1 1 0\n", 2},           // duplicate
        {"1/1 1 0\n0/1 0 0\n", 2},           // zero coefficient
        {"2/4 1 0\n", 1},                    // not reduced
        {"1/1 1 0\n1/1 0 1 0\n", 2},         // arity change
        {"1/1 1 0\n\n1/1 0 0\n", 2},         // empty line
        {"1/1\n", 1},                        // missing exponents
        {"1/1 01 0\n", 1},                   // leading zero exponent
        {"1/1 x 0\n", 1},                    // bad exponent
        {"1/1 1 0\n--\n1/1 2 0\n1 0 0\n", 4},  // integer coefficient
    };
    for (const Case& c : cases) {
      CAPTURE(c.text);
      try {
        parse_map(c.text);
        FAIL("expected a parse error");
      } catch (const ParseError& e) {
        CHECK(e.line() == c.line);
        CHECK(std::string(e.what()).rfind("line " + std::to_string(c.line) + ":", 0) == 0);
      }
    }
  }

  TEST_CASE("single-polynomial parse") {
    CHECK(parse_poly("1/1 2\n-1/1 0\n") == parse_expression("z^2 - 1", {"z"}));
    CHECK_THROWS_AS(parse_poly("1/1 1\n--\n1/1 0\n"), ParseError);
  }

  TEST_CASE("expression parser") {
    CHECK(default_variable_names(1) == std::vector<std::string>{"z"});
    CHECK(default_variable_names(2) == std::vector<std::string>{"x", "y"});
    CHECK(default_variable_names(3) == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(xy("2(x+y)^2") == xy("2x^2 + 4xy + 2y^2"));
    CHECK(xy("x(xy-2)^2+(1/2)xy^2") == xy("x^3y^2 - 4x^2y + 4x + 1/2 xy^2"));
    CHECK(xy("-x^2") == xy("0 - x^2"));
    CHECK(xy("(1/2)") == Poly::constant(2, Rational(1, 2)));
    for (const char* bad : {"x +", "(x", "x^", "x^y", "q", "2//3", "x)", ""}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(xy(bad), Error);
    }
  }

  TEST_CASE("table rendering groups by descending powers of y and reparses") {
    const PolyMap m(2, {xy("(xy-1)^2 + x^2"), xy("1/2 x^3y - 3y + 7")});
    const std::string table = render_table(m, "F");
    CHECK(table == "F1(x,y) := x^2y^2-2xy+(x^2+1)\nF2(x,y) := ((1/2)x^3-3)y+7\n");
    CHECK(parse_table(table) == m);
    CHECK(parse_table("x^2 + y\n1") == PolyMap(2, {xy("x^2 + y"), xy("1")}));
  }

  TEST_CASE("tex rendering") {
    const PolyMap m(2, {xy("x^2y + 1/2"), xy("y")});
    const std::string tex = render_tex(m, "h");
    CHECK(tex.find("\\begin{longtable}") == 0);
    CHECK(tex.find("h_1({\\tt x},{\\tt y}):=") != std::string::npos);
    CHECK(tex.find("\\tfrac{1}{2}") != std::string::npos);
    CHECK(tex.find("\\end{longtable}") != std::string::npos);
  }

  TEST_CASE("json rendering") {
    const PolyMap m(2, {xy("x^2y - 1/3"), xy("y")});
    const auto j = to_json(m);
    CHECK(j["arity"] == 2);
    CHECK(j["total_degree"] == 4);
    CHECK(j["total_monomials"] == 3);
    CHECK(j["components"][0]["terms"][0] == nlohmann::json::array({"1/1", 2, 1}));
    CHECK(j["components"][0]["terms"][1] == nlohmann::json::array({"-1/3", 0, 0}));
    CHECK(j["components"][1]["degree"] == 1);
  }
}
