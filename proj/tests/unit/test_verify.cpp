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

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>

#include "core/catalog.hpp"
#include "core/error.hpp"
#include "core/plot.hpp"
#include "core/verify.hpp"

using namespace quadrant;

namespace {

std::set<std::string> labels(const VerificationReport& r) {
  std::set<std::string> out;
  for (const Check& c : r.checks) out.insert(c.label);
  return out;
}

std::vector<std::string> polylines(const std::string& svg) {
  std::vector<std::string> out;
  static const std::regex re("<polyline[^>]*points=\"([^\"]*)\"");
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    out.push_back((*it)[1]);
  }
  return out;
}

std::size_t point_count(const std::string& points) {
  return static_cast<std::size_t>(std::count(points.begin(), points.end(), ' ')) + 1;
}

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("every suite passes on the standard catalog") {
    for (const std::string& suite : suite_names()) {
      CAPTURE(suite);
      const VerificationReport r = verify(suite);
      CHECK(r.ok());
      CHECK(r.failed() == 0);
      CHECK(r.passed() == r.checks.size());
      CHECK(r.suite == suite);
    }
  }

  TEST_CASE("all is the union of the individual suites") {
    std::size_t sum = 0;
    for (const std::string& suite : suite_names()) {
      if (suite != "all") sum += verify(suite).checks.size();
    }
    CHECK(verify("all").checks.size() == sum);
  }

  TEST_CASE("identity suite covers every sampled stage identity with 50 trials") {
    const VerificationReport r = verify("identities");
    const auto names = labels(r);
    for (const char* label : {"phi_x(1/x) = 1/x", "phi_x(2/x) = x", "psi_y(0) = 0", "psi_y(2/y) = y",
                              "psi_y(y) > y for 0 < y < 1", "P(0) = ab - 1 >= 0, P monic of degree 4"}) {
      CAPTURE(label);
      REQUIRE(names.count(label) == 1);
      for (const Check& c : r.checks) {
        if (c.label == label) CHECK(c.actual == "50/50");
      }
    }
  }

  TEST_CASE("transcription suite pins the published spot values") {
    const auto names = labels(verify("transcription"));
    CHECK(names.count("g total degree") == 1);
    CHECK(names.count("g monomials") == 1);
    CHECK(names.count("g1 constant term") == 1);
    CHECK(names.count("g2 constant term") == 1);
    CHECK(names.count("g1 leading block (x^18 + 2x^16 + x^14)y^10") == 1);
    CHECK(names.count("g2 leading term x^16y^12") == 1);
  }

  TEST_CASE("reports are deterministic per seed") {
    CHECK(to_json(verify("all", Catalog::standard(), 5)).dump() ==
          to_json(verify("all", Catalog::standard(), 5)).dump());
    CHECK(verify("identities", Catalog::standard(), 6).ok());
  }

  TEST_CASE("json layout") {
    const auto j = to_json(verify("slp"));
    CHECK(j["suite"] == "slp");
    CHECK(j["pass"] == true);
    CHECK(j["summary"]["failed"] == 0);
    CHECK(j["summary"]["passed"] == j["checks"].size());
    for (const auto& c : j["checks"]) {
      CHECK(c.contains("label"));
      CHECK(c.contains("expected"));
      CHECK(c.contains("actual"));
      CHECK(c.contains("pass"));
    }
  }

  TEST_CASE("any corrupted coefficient makes 'all' fail") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      CAPTURE(seed);
      const VerificationReport r = verify("all", Catalog::standard().corrupted(seed));
      CHECK_FALSE(r.ok());
      CHECK(to_json(r)["pass"] == false);
    }
  }

  TEST_CASE("unknown suite") {
    try {
      verify("nope");
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::invalid_input);
    }
  }
}

TEST_SUITE("plot") {
  TEST_CASE("region lists") {
    CHECK(parse_region_list("A") == std::vector<Region>{Region::A});
    CHECK(parse_region_list("A,B,Q") == std::vector<Region>{Region::A, Region::B, Region::Q});
    CHECK_THROWS_AS(parse_region_list(""), Error);
    CHECK_THROWS_AS(parse_region_list("A,,B"), Error);
    CHECK_THROWS_AS(parse_region_list("Z"), Error);
  }

  TEST_CASE("svg is well formed and one panel per region") {
    for (const char* list : {"A", "B", "Q", "A,B"}) {
      CAPTURE(list);
      const auto regions = parse_region_list(list);
      const std::string svg = render_svg(regions);
      CHECK(svg.rfind("<?xml", 0) == 0);
      CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
      CHECK(svg.size() > 6);
      CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
      CHECK(count_of(svg, "<g ") == regions.size());
      CHECK(count_of(svg, "</g>") == regions.size());
      std::istringstream lines(svg);
      std::string line;
      while (std::getline(lines, line)) {
        const bool closed = line.find("/>") != std::string::npos || line.rfind("</", 0) == 0 ||
                            line.find("</text>") != std::string::npos || line.rfind("<g ", 0) == 0 ||
                            line.rfind("<svg", 0) == 0 || line.rfind("<?xml", 0) == 0;
        CHECK(closed);
      }
    }
  }

  TEST_CASE("hyperbola uses at least 200 segments, B adds the diagonal") {
    const Region a[] = {Region::A};
    const std::string svg_a = render_svg(a);
    std::size_t longest = 0;
    for (const auto& p : polylines(svg_a)) longest = std::max(longest, point_count(p));
    CHECK(longest >= 201);
    CHECK(svg_a.find("panel-A") != std::string::npos);
    CHECK(count_of(svg_a, "<polygon") == 1);

    const Region b[] = {Region::B};
    const std::string svg_b = render_svg(b);
    CHECK(count_of(svg_b, "<polygon") == 2);
    CHECK(polylines(svg_b).size() > polylines(svg_a).size());

    const Region q[] = {Region::Q};
    const std::string svg_q = render_svg(q);
    CHECK(count_of(svg_q, "<polygon") == 1);

    PlotOptions coarse;
    coarse.hyperbola_segments = 150;
    CHECK_THROWS_AS(render_svg(a, coarse), Error);
  }

  TEST_CASE("rendering is deterministic") {
    const Region ab[] = {Region::A, Region::B};
    CHECK(render_svg(ab) == render_svg(ab));
  }
}
