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
#include <set>

#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/polyio.hpp"
#include "core/preimage.hpp"
#include "core/region.hpp"
#include "core/rng.hpp"
#include "core/sampling.hpp"
#include "test_support.hpp"

using namespace quadrant;
using qdtest::frac;

namespace {

std::array<double, 2> apply(const PolyMap& m, Point2 p) {
  const double pt[] = {p.x, p.y};
  const auto v = m.eval(std::span<const double>(pt));
  return {v[0], v[1]};
}

double rel(double got, double want) { return std::fabs(got - want) / std::fmax(1.0, std::fabs(want)); }

Rational at(const Poly& p, const Rational& x) { return p.eval(std::span<const Rational>(&x, 1)); }

}  // namespace

TEST_SUITE("regions") {
  TEST_CASE("membership examples") {
    CHECK(in_A(1, 1));
    CHECK(contains(Region::A, Rational(1), Rational(1)));
    CHECK(contains(Region::B, frac(1, 2), frac(3, 4)));
    CHECK_FALSE(contains(Region::A, frac(1, 2), frac(3, 4)));
    CHECK_FALSE(in_Q(0, 1));
    CHECK_FALSE(contains(Region::Q, Rational(0), Rational(1)));
    CHECK(in_Q(1e-300, 1e-300));
    CHECK_FALSE(in_B(2, 0.25));
    CHECK(in_B(0.25, 0.25));
  }

  TEST_CASE("A within B within Q on a grid") {
    for (int i = -8; i <= 40; ++i) {
      for (int j = -8; j <= 40; ++j) {
        const Rational x = frac(i, 8), y = frac(j, 8);
        const bool a = contains(Region::A, x, y);
        const bool b = contains(Region::B, x, y);
        const bool q = contains(Region::Q, x, y);
        CHECK((!a || b));
        CHECK((!b || q));
        CHECK(contains(Region::A, to_double(x), to_double(y)) == a);
        CHECK(contains(Region::B, to_double(x), to_double(y)) == b);
      }
    }
  }

  TEST_CASE("float membership is exact on the binary values; slack relaxes closed sides") {
    const double x = 0.1, y = 10.0;  // 0.1 * 10 rounds to 1 but the exact product exceeds 1
    CHECK(in_A(x, y) == (from_double(x) * from_double(y) >= 1));
    const double below = std::nextafter(1.0, 0.0);
    CHECK_FALSE(in_A(below, 1.0));
    CHECK(contains(Region::A, below, 1.0, 1e-12));
    CHECK_FALSE(contains(Region::Q, 0.0, 1.0, 1e-12));
  }

  TEST_CASE("region names") {
    CHECK(parse_region("A") == Region::A);
    CHECK(parse_region("B") == Region::B);
    CHECK(parse_region("Q") == Region::Q);
    CHECK(region_name(Region::B) == "B");
    CHECK_THROWS_AS(parse_region("C"), Error);
  }
}

TEST_SUITE("stage inversion") {
  TEST_CASE("invert_F examples") {
    const Point2 p = invert_F(1, 1);
    CHECK(p.x == 1.0);
    CHECK(p.y == 1.0);
    CHECK_THROWS_AS(invert_F(2, 0.4), Error);
    CHECK_THROWS_AS(invert_F(-1, -1), Error);
    CHECK_NOTHROW(invert_F(2, 0.5));
    const Point2 s = invert_F(2, 2);
    const auto img = apply(Catalog::standard().F, s);
    CHECK(rel(img[0], 2) < 1e-8);
    CHECK(rel(img[1], 2) < 1e-8);
  }

  TEST_CASE("invert_G examples") {
    CHECK(invert_G(1, 1) == 1.0);
    const double y = invert_G(0.5, 0.5);
    CHECK(y >= 2.0);
    CHECK(y <= 4.0);
    const Rational four(4);
    CHECK(at(stage_G_fiber(frac(1, 2)), four) == frac(1, 2));
    CHECK(std::fabs(to_double(at(stage_G_fiber(frac(1, 2)), from_double(y))) - 0.5) < 1e-12);
    CHECK_THROWS_AS(invert_G(2, 0.25), Error);
  }

  TEST_CASE("invert_H examples") {
    CHECK(invert_H(2, 2) == 1.0);
    const double x1 = invert_H(1, 1);
    CHECK(std::fabs(to_double(at(stage_H_fiber(1), from_double(x1))) - 1.0) < 1e-12);

    const Rational threshold = at(stage_H_fiber(frac(1, 2)), frac(1, 2));
    CHECK(threshold == frac(1, 2) * (frac(1, 4) - 2) * (frac(1, 4) - 2) + frac(1, 16));
    const double x = invert_H(to_double(threshold), 0.5);
    CHECK(x <= 0.5);
    CHECK_THROWS_AS(invert_H(0, 1), Error);
    CHECK_THROWS_AS(invert_H(1, -1), Error);
  }

  TEST_CASE("float inversions land in their regions on random inputs") {
    SplitMix64 rng(11);
    for (int i = 0; i < 200; ++i) {
      const double u = std::pow(10.0, 6 * rng.uniform() - 3);
      const double v = std::pow(10.0, 6 * rng.uniform() - 3);
      const double xh = invert_H(u, v);
      CHECK(in_B(xh, v));
      const double yg = invert_G(xh, v);
      CHECK(in_A(xh, yg));
    }
  }

  TEST_CASE("exact inversions satisfy their regions exactly") {
    SplitMix64 rng(12);
    for (int i = 0; i < 60; ++i) {
      const Rational u = frac(static_cast<long>(1 + rng.next() % 5000), static_cast<long>(1 + rng.next() % 97));
      const Rational v = frac(static_cast<long>(1 + rng.next() % 97), static_cast<long>(1 + rng.next() % 500));
      const Rational xh = invert_H_exact(u, v, 128);
      CHECK(contains(Region::B, xh, v));
      const Rational yg = invert_G_exact(xh, v, 128);
      CHECK(contains(Region::A, xh, yg));
      const ExactPoint s = invert_F_exact(xh, yg, 128);
      const Rational pt[] = {s.x, s.y};
      const auto img = Catalog::standard().F.eval(pt);
      CHECK(to_double(abs(img[0] - xh) / xh) < 1e-30);
      CHECK(to_double(abs(img[1] - yg) / yg) < 1e-30);
    }
    CHECK_THROWS_AS(invert_F_exact(frac(1, 2), frac(1, 2), 64), Error);
    CHECK_THROWS_AS(invert_G_exact(Rational(2), frac(1, 4), 64), Error);
    CHECK_THROWS_AS(invert_H_exact(Rational(0), Rational(1), 64), Error);
  }
}

TEST_SUITE("preimage") {
  TEST_CASE("target (3/2, 1)") {
    const PreimageWitness w = preimage(frac(3, 2), Rational(1));
    CHECK(w.residual < 1e-6);
    CHECK(w.image[0] == doctest::Approx(1.5));
    CHECK(w.image[1] == doctest::Approx(1.0));
    const Rational src[] = {w.source_exact.x, w.source_exact.y};
    const auto img = Catalog::standard().F.eval(src);
    CHECK(img[0] == 1);
    CHECK(img[1] == 1);
  }

  TEST_CASE("stress target (1e-6, 1e6)") {
    const PreimageWitness w = preimage(Point2{1e-6, 1e6});
    CHECK(w.residual < 1e-6);
    CHECK(contains(Region::B, w.stage_H_exact.x, w.stage_H_exact.y));
    CHECK(contains(Region::A, w.stage_G_exact.x, w.stage_G_exact.y));
    CHECK(w.source.x > 0);
  }

  TEST_CASE("targets outside the open quadrant are rejected") {
    for (Point2 q : {Point2{-1, 1}, Point2{0, 1}, Point2{1, 0}, Point2{NAN, 1}, Point2{1, INFINITY}}) {
      try {
        preimage(q);
        FAIL("expected an error");
      } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::invalid_input);
        CHECK(std::string(e.what()) == "target not in open quadrant");
      }
    }
  }

  TEST_CASE("round trip on seeded log-uniform targets") {
    SplitMix64 rng(2024);
    double worst = 0;
    for (int i = 0; i < 150; ++i) {
      const Point2 q{std::pow(10.0, 8 * rng.uniform() - 4), std::pow(10.0, 8 * rng.uniform() - 4)};
      const PreimageWitness w = preimage(q);
      worst = std::fmax(worst, w.residual);
      CHECK(contains(Region::B, w.stage_H_exact.x, w.stage_H_exact.y));
      CHECK(contains(Region::A, w.stage_G_exact.x, w.stage_G_exact.y));
      CHECK(contains(Region::B, w.stage_H_point.x, w.stage_H_point.y, 1e-12));
      CHECK(contains(Region::A, w.stage_G_point.x, w.stage_G_point.y, 1e-12));
      CHECK(w.stage_H_exact.y == from_double(q.y));
      CHECK(w.stage_G_exact.x == w.stage_H_exact.x);
      CHECK(w.target == q);
    }
    CHECK(worst <= 1e-6);
  }

  TEST_CASE("extreme targets escalate precision") {
    for (Point2 q : {Point2{5e-324, 1}, Point2{1e300, 1e-300}, Point2{1, 1e-12}, Point2{1e-12, 1}}) {
      CAPTURE(q.x);
      CAPTURE(q.y);
      const PreimageWitness w = preimage(q);
      CHECK(w.residual <= 1e-6);
    }
  }

  TEST_CASE("a tiny precision cap surfaces a numeric error") {
    PreimageOptions opts;
    opts.precision_bits = 53;
    opts.max_precision_bits = 53;
    opts.residual_bound = 1e-300;
    try {
      preimage(Point2{1e-6, 1e6}, opts);
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::numeric);
    }
    opts.precision_bits = 10;
    CHECK_THROWS_AS(preimage(Point2{1, 1}, opts), Error);
  }

  TEST_CASE("preimage is deterministic") {
    const PreimageWitness a = preimage(Point2{0.37, 123.0});
    const PreimageWitness b = preimage(Point2{0.37, 123.0});
    CHECK(to_json(a).dump() == to_json(b).dump());
  }

  TEST_CASE("witness JSON fields") {
    const auto j = to_json(preimage(Point2{2, 3}));
    for (const char* key : {"target", "stages", "source", "source_exact", "image", "residual",
                            "float_source_residual"}) {
      CHECK(j.contains(key));
    }
    CHECK(j["stages"].contains("H"));
    CHECK(j["stages"].contains("G"));
    CHECK(parse_canonical_rational(j["source_exact"][0].get<std::string>()) != 0);
  }
}

TEST_SUITE("sampling") {
  TEST_CASE("region spec parsing") {
    const RegionSpec box = RegionSpec::parse("box=-50:50");
    CHECK(box.kind == RegionSpec::Kind::box);
    CHECK(box.lo == -50);
    CHECK(box.hi == 50);
    CHECK(box.to_string() == "box=-50:50");
    const RegionSpec logq = RegionSpec::parse("logq=1e-4:1e4");
    CHECK(logq.kind == RegionSpec::Kind::log_quadrant);
    CHECK(logq.lo == frac(1, 10000));
    for (const char* bad : {"box", "box=1", "disc=0:1", "box=2:1", "logq=0:1", "box=a:b"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(RegionSpec::parse(bad), Error);
    }
  }

  TEST_CASE("sample points lie in their region and depend only on (seed, index)") {
    const RegionSpec box = RegionSpec::parse("box=-3/2:5/2");
    const RegionSpec logq = RegionSpec::parse("logq=1/100:100");
    std::set<std::string> seen;
    for (std::uint64_t i = 0; i < 300; ++i) {
      const auto p = sample_point(box, 7, i);
      CHECK(p[0] >= box.lo);
      CHECK(p[0] <= box.hi);
      CHECK(p[1] >= box.lo);
      CHECK(p[1] <= box.hi);
      CHECK(p == sample_point(box, 7, i));
      seen.insert(to_canonical_string(p[0]));
      const auto q = sample_point(logq, 7, i);
      CHECK(q[0] > 0);
      CHECK(q[1] > 0);
      CHECK(to_double(q[0]) >= 0.01 * (1 - 1e-12));
      CHECK(to_double(q[1]) <= 100 * (1 + 1e-12));
    }
    CHECK(seen.size() > 290);
    CHECK(sample_point(box, 7, 0) != sample_point(box, 8, 0));
  }

  TEST_CASE("forward containment reports zero violations for the catalog maps") {
    const Catalog& cat = Catalog::standard();
    CHECK(sample_forward(cat, "F", RegionSpec::parse("box=-100:100"), 500, 1).violations == 0);
    CHECK(sample_forward(cat, "f", RegionSpec::parse("box=-50:50"), 300, 1).violations == 0);
    CHECK(sample_forward(cat, "g", RegionSpec::parse("box=-20:20"), 300, 1).violations == 0);
    CHECK(sample_forward(cat, "G", RegionSpec::parse("logq=1e-3:1e3"), 300, 1).violations == 0);
    CHECK(sample_forward(cat, "H", RegionSpec::parse("logq=1e-3:1e3"), 300, 1).violations == 0);
  }

  TEST_CASE("violations are counted and a few are kept as examples") {
    Catalog cat = Catalog::standard();
    cat.F = PolyMap(2, {parse_expression("x", {"x", "y"}), parse_expression("y", {"x", "y"})});
    const ContainmentReport r = sample_forward(cat, "F", RegionSpec::parse("box=-1:1"), 400, 3);
    CHECK(r.violations > 250);
    CHECK(r.examples.size() == 5);
    CHECK(r.min[0] < 0);
    const auto j = to_json(r);
    CHECK(j["violations"] == r.violations);
    CHECK(j["violating_samples"].size() == 5);
  }

  TEST_CASE("reports do not depend on the thread count") {
    const Catalog& cat = Catalog::standard();
    const RegionSpec box = RegionSpec::parse("box=-20:20");
    const std::string one = to_json(sample_forward(cat, "g", box, 257, 42, 1)).dump();
    const std::string four = to_json(sample_forward(cat, "g", box, 257, 42, 4)).dump();
    const std::string seven = to_json(sample_forward(cat, "g", box, 257, 42, 7)).dump();
    CHECK(one == four);
    CHECK(one == seven);
    const auto j = nlohmann::json::parse(one);
    for (const char* key : {"map", "region", "n", "seed", "violations", "extrema"}) CHECK(j.contains(key));
  }

  TEST_CASE("sampling errors") {
    const Catalog& cat = Catalog::standard();
    CHECK_THROWS_AS(sample_forward(cat, "K", RegionSpec::parse("box=0:1"), 10, 1), Error);
    CHECK_THROWS_AS(sample_forward(cat, "F", RegionSpec::parse("box=0:1"), 0, 1), Error);
  }
}
