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

#include "core/verify.hpp"

#include <algorithm>

#include "core/error.hpp"
#include "core/polyio.hpp"
#include "core/preimage.hpp"
#include "core/rng.hpp"
#include "core/slp.hpp"

namespace quadrant {
namespace {

constexpr int kIdentityTrials = 50;

// p/q with 1 <= p, q <= 1000.
Rational random_positive(SplitMix64& rng) {
  Rational r(static_cast<long>(1 + rng.next() % 1000), static_cast<long>(1 + rng.next() % 1000));
  r.canonicalize();
  return r;
}

Rational random_signed(SplitMix64& rng) {
  Rational r = random_positive(rng);
  return rng.next() % 2 == 0 ? r : Rational(-r);
}

// A rational in (0, 1).
Rational random_unit(SplitMix64& rng) {
  const long q = static_cast<long>(2 + rng.next() % 999);
  const long p = static_cast<long>(1 + rng.next() % static_cast<std::uint64_t>(q - 1));
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational at(const Poly& p, const Rational& x) { return p.eval(std::span<const Rational>(&x, 1)); }

class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  void equal(std::string label, const std::string& expected, const std::string& actual) {
    report_.checks.push_back({std::move(label), expected, actual, expected == actual});
  }
  void equal(std::string label, std::size_t expected, std::size_t actual) {
    equal(std::move(label), std::to_string(expected), std::to_string(actual));
  }
  void truth(std::string label, bool ok, const std::string& detail = {}) {
    report_.checks.push_back({std::move(label), "true", ok ? "true" : "false" + detail, ok});
  }

  // Runs `trial` kIdentityTrials times; records how many held and the first
  // failing parameter.
  template <class Trial>
  void trials(std::string label, Trial trial) {
    int held = 0;
    std::string first_failure;
    for (int i = 0; i < kIdentityTrials; ++i) {
      std::string param;
      if (trial(param)) {
        ++held;
      } else if (first_failure.empty()) {
        first_failure = " (fails at " + param + ")";
      }
    }
    const std::string expected = std::to_string(kIdentityTrials) + "/" + std::to_string(kIdentityTrials);
    std::string actual = std::to_string(held) + "/" + std::to_string(kIdentityTrials) + first_failure;
    report_.checks.push_back({std::move(label), expected, std::move(actual), held == kIdentityTrials});
  }

 private:
  VerificationReport& report_;
};

std::string join(const std::vector<unsigned>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

void run_identities(Recorder& rec, const Catalog& cat, std::uint64_t seed) {
  const Poly& g2 = cat.G.component(1);
  const Poly& h1 = cat.H.component(0);
  auto phi = [&](const Rational& x) {
    const Poly inner[] = {Poly::constant(1, x), Poly::variable(1, 0)};
    return g2.compose(inner);
  };
  auto psi = [&](const Rational& y) {
    const Poly inner[] = {Poly::variable(1, 0), Poly::constant(1, y)};
    return h1.compose(inner);
  };
  const std::vector<std::string> xy{"x", "y"};

  rec.truth("G2 = x^2y^3 + (x^3-4x)y^2 + (4-2x^2)y + x",
            g2 == parse_expression("x^2y^3+(x^3-4x)y^2+(4-2x^2)y+x", xy));
  rec.truth("H1 = y^2x^3 - 4yx^2 + (4 + y^2/2)x",
            h1 == parse_expression("y^2x^3-4yx^2+(4+(1/2)y^2)x", xy));

  SplitMix64 rng(seed);
  rec.trials("phi_x(1/x) = 1/x", [&](std::string& param) {
    Rational x = random_positive(rng);
    param = "x=" + to_short_string(x);
    return at(phi(x), 1 / x) == 1 / x;
  });
  rec.trials("phi_x(2/x) = x", [&](std::string& param) {
    Rational x = random_positive(rng);
    param = "x=" + to_short_string(x);
    return at(phi(x), 2 / x) == x;
  });
  rec.trials("phi_x odd degree, positive leading coefficient", [&](std::string& param) {
    Rational x = random_positive(rng);
    param = "x=" + to_short_string(x);
    Poly p = phi(x);
    return p.total_degree() == 3 && sgn(p.leading_coefficient()) > 0;
  });
  rec.trials("psi_y(0) = 0", [&](std::string& param) {
    Rational y = random_positive(rng);
    param = "y=" + to_short_string(y);
    return at(psi(y), Rational(0)) == 0;
  });
  rec.trials("psi_y(2/y) = y", [&](std::string& param) {
    Rational y = random_positive(rng);
    param = "y=" + to_short_string(y);
    return at(psi(y), 2 / y) == y;
  });
  rec.trials("psi_y(y) > y for 0 < y < 1", [&](std::string& param) {
    Rational y = random_unit(rng);
    param = "y=" + to_short_string(y);
    return at(psi(y), y) > y;
  });
  rec.trials("P(0) = ab - 1 >= 0, P monic of degree 4", [&](std::string& param) {
    Rational a = random_positive(rng);
    // b >= 1/a; every fifth trial sits on the boundary ab = 1.
    Rational b = 1 / a;
    if (rng.next() % 5 != 0) b += random_positive(rng);
    param = "a=" + to_short_string(a) + " b=" + to_short_string(b);
    Poly p = stage_F_quartic(a, b);
    Rational p0 = at(p, Rational(0));
    return p0 == a * b - 1 && sgn(p0) >= 0 && p.total_degree() == 4 &&
           p.leading_coefficient() == 1 && p.coefficient(Monomial({4})) == 1;
  });
  rec.trials("P vanishes at z = xy - 1 for (a, b) = F(x, y)", [&](std::string& param) {
    const Rational pt[] = {random_signed(rng), random_signed(rng)};
    param = "x=" + to_short_string(pt[0]) + " y=" + to_short_string(pt[1]);
    auto ab = cat.F.eval(pt);
    return at(stage_F_quartic(ab[0], ab[1]), pt[0] * pt[1] - 1) == 0;
  });

  int positive = 0;
  constexpr int kPositivityTrials = 1000;
  for (int i = 0; i < kPositivityTrials; ++i) {
    const Rational pt[] = {random_signed(rng), random_signed(rng)};
    auto v = cat.F.eval(pt);
    if (sgn(v[0]) > 0 && sgn(v[1]) > 0) ++positive;
  }
  rec.equal("F1, F2 > 0 at random rational points", std::to_string(kPositivityTrials),
            std::to_string(positive));
}

void run_slp(Recorder& rec, const Catalog& cat, std::uint64_t seed) {
  const QuadrantPrograms progs = build_quadrant_programs();
  rec.equal("non-scalar count, F stage", 4, nonscalar_count(progs.F));
  rec.equal("non-scalar count, G stage", 4, nonscalar_count(progs.G));
  rec.equal("non-scalar count, H stage", 3, nonscalar_count(progs.H));
  rec.equal("non-scalar count, chained f", 11, nonscalar_count(progs.f));
  rec.equal("chained count = sum of stage counts",
            nonscalar_count(progs.F) + nonscalar_count(progs.G) + nonscalar_count(progs.H),
            nonscalar_count(progs.f));

  rec.truth("expansion of F stage = F", slp_expand(progs.F) == cat.F);
  rec.truth("expansion of G stage = G", slp_expand(progs.G) == cat.G);
  rec.truth("expansion of H stage = H", slp_expand(progs.H) == cat.H);
  const PolyMap expanded = slp_expand(progs.f);
  rec.truth("expansion of chained program = f (canonical text)",
            serialize(expanded) == serialize(cat.f));
  Metrics m = metrics(expanded);
  rec.equal("expansion of chained program: total degree", 72, m.total_degree);
  rec.equal("expansion of chained program: monomials", 350, m.total_monomials);

  const Rational one[] = {Rational(1), Rational(1)};
  auto v = slp_eval(progs.f, one);
  rec.equal("chained program at (1,1)", "3/2,1", to_short_string(v[0]) + "," + to_short_string(v[1]));

  SplitMix64 rng(seed ^ 0x5157ULL);
  int agree = 0;
  constexpr int kEvalTrials = 100;
  for (int i = 0; i < kEvalTrials; ++i) {
    const Rational pt[] = {random_signed(rng), random_signed(rng)};
    if (slp_eval(progs.f, pt) == expanded.eval(pt) && expanded.eval(pt) == cat.f.eval(pt)) ++agree;
  }
  rec.equal("program evaluation = expanded evaluation at random points",
            std::to_string(kEvalTrials), std::to_string(agree));

  bool invariant = true;
  for (std::uint64_t k = 0; k < 10; ++k) {
    const SlpProgram shuffled = shuffle_topological(progs.f, seed + k);
    invariant = invariant && nonscalar_count(shuffled) == 11 && slp_expand(shuffled) == expanded;
  }
  rec.truth("count and expansion invariant under topological reordering", invariant);
  rec.truth("text format round-trip",
            serialize(parse_slp(serialize(progs.f))) == serialize(progs.f));
}

void run_transcription(Recorder& rec, const Catalog& cat) {
  const PolyMap& g = cat.g;
  Metrics m = metrics(g);
  rec.equal("g total degree", 56, m.total_degree);
  rec.equal("g monomials", 168, m.total_monomials);
  rec.equal("g component degrees", "28,28", join(m.degrees));
  auto coeff = [&](std::size_t comp, Exponent ex, Exponent ey) {
    return to_short_string(g.component(comp).coefficient(Monomial({ex, ey})));
  };
  rec.equal("g1 constant term", "85", coeff(0, 0, 0));
  rec.equal("g2 constant term", "4", coeff(1, 0, 0));
  rec.equal("g1 leading block (x^18 + 2x^16 + x^14)y^10", "1,2,1",
            coeff(0, 18, 10) + "," + coeff(0, 16, 10) + "," + coeff(0, 14, 10));
  rec.equal("g2 leading term x^16y^12", "1", coeff(1, 16, 12));
  rec.truth("g matches the independent term-list encoding", g == build_g_old_from_terms());
  rec.truth("grouped rendering of g reparses to g", parse_table(render_table(g, "g")) == g);
  rec.truth("canonical text of g round-trips", parse_map(serialize(g)) == g);
}

void run_metrics(Recorder& rec, const Catalog& cat) {
  rec.truth("GF = G o F", compose(cat.G, cat.F) == cat.GF);
  rec.truth("f = H o G o F", compose(cat.H, compose(cat.G, cat.F)) == cat.f);
  Metrics mf = metrics(cat.f);
  rec.equal("f total degree", 72, mf.total_degree);
  rec.equal("f monomials", 350, mf.total_monomials);
  rec.equal("f component degrees", "52,20", join(mf.degrees));
  Metrics mF = metrics(cat.F);
  rec.equal("F total degree", 8, mF.total_degree);
  rec.equal("F monomials", 8, mF.total_monomials);
  const Rational one[] = {Rational(1), Rational(1)};
  auto v = cat.f.eval(one);
  rec.equal("f(1,1)", "3/2,1", to_short_string(v[0]) + "," + to_short_string(v[1]));
}

}  // namespace

std::size_t VerificationReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "slp", "transcription", "metrics",
                                              "all"};
  return names;
}

VerificationReport verify(std::string_view suite, const Catalog& catalog, std::uint64_t seed) {
  VerificationReport report;
  report.suite = std::string(suite);
  Recorder rec(report);
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "identities") {
    run_identities(rec, catalog, seed);
    known = true;
  }
  if (all || suite == "slp") {
    run_slp(rec, catalog, seed);
    known = true;
  }
  if (all || suite == "transcription") {
    run_transcription(rec, catalog);
    known = true;
  }
  if (all || suite == "metrics") {
    run_metrics(rec, catalog);
    known = true;
  }
  if (!known) {
    throw invalid_input("unknown suite '" + std::string(suite) +
                        "' (expected identities, slp, transcription, metrics or all)");
  }
  return report;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  using nlohmann::ordered_json;
  ordered_json checks = ordered_json::array();
  for (const Check& c : r.checks) {
    checks.push_back({{"label", c.label},
                      {"expected", c.expected},
                      {"actual", c.actual},
                      {"pass", c.pass}});
  }
  return {{"suite", r.suite},
          {"checks", std::move(checks)},
          {"summary", {{"passed", r.passed()}, {"failed", r.failed()}}},
          {"pass", r.ok()}};
}

}  // namespace quadrant
