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

#include "core/poly.hpp"

#include <algorithm>
#include <string>

#include "core/error.hpp"

namespace quadrant {

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Exponent> e(exps_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exps_[i];
  return Monomial(std::move(e));
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const noexcept {
  unsigned da = a.total_degree();
  unsigned db = b.total_degree();
  if (da != db) return da > db;
  auto ea = a.exponents();
  auto eb = b.exponents();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

Poly::Poly(std::size_t arity) : arity_(arity) {
  if (arity == 0) throw invalid_input("polynomial arity must be positive");
}

Poly Poly::constant(std::size_t arity, const Rational& c) {
  Poly p(arity);
  p.add_term(Monomial::one(arity), c);
  return p;
}

Poly Poly::variable(std::size_t arity, std::size_t index) {
  if (index >= arity) throw invalid_input("variable index out of range");
  std::vector<Exponent> e(arity, 0);
  e[index] = 1;
  return term(Monomial(std::move(e)), Rational(1));
}

Poly Poly::term(Monomial m, const Rational& c) {
  Poly p(m.arity());
  p.add_term(m, c);
  return p;
}

unsigned Poly::total_degree() const noexcept {
  // Graded order puts a top-degree monomial first.
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

unsigned Poly::degree_in(std::size_t var) const {
  if (var >= arity_) throw invalid_input("variable index out of range");
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max<unsigned>(d, m[var]);
  return d;
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.arity() != arity_) {
    throw invalid_input("monomial of arity " + std::to_string(m.arity()) +
                        " in polynomial of arity " + std::to_string(arity_));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::check_arity(const Poly& other, const char* op) const {
  if (other.arity_ != arity_) {
    throw invalid_input(std::string(op) + ": arity mismatch (" + std::to_string(arity_) +
                        " vs " + std::to_string(other.arity_) + ")");
  }
}

Poly& Poly::operator+=(const Poly& other) {
  check_arity(other, "add");
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_arity(other, "sub");
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_arity(b, "mul");
  Poly r(a.arity_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::pow(unsigned exponent) const {
  Poly result = constant(arity_, Rational(1));
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Rational Poly::eval(std::span<const Rational> point) const {
  if (point.size() != arity_) {
    throw invalid_input("eval: point has " + std::to_string(point.size()) +
                        " coordinates, polynomial arity is " + std::to_string(arity_));
  }
  if (terms_.empty()) return Rational(0);

  // Clear denominators and homogenize so the sum runs over integers:
  // with x_k = X_k / d and coefficients c = C / L,
  //   p(x) = sum C * prod X_k^e_k * d^(D - |e|) / (L * d^D).
  Integer d = 1;
  for (const Rational& x : point) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
  }
  Integer l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
  }
  const unsigned top = total_degree();

  std::vector<std::vector<Integer>> var_pows(arity_);
  for (std::size_t k = 0; k < arity_; ++k) {
    Integer xk = point[k].get_num() * (d / point[k].get_den());
    unsigned deg = degree_in(k);
    auto& pw = var_pows[k];
    pw.reserve(deg + 1);
    pw.emplace_back(1);
    for (unsigned e = 1; e <= deg; ++e) pw.push_back(pw.back() * xk);
  }
  std::vector<Integer> den_pows;
  den_pows.reserve(top + 1);
  den_pows.emplace_back(1);
  for (unsigned e = 1; e <= top; ++e) den_pows.push_back(den_pows.back() * d);

  Integer sum = 0;
  Integer t;
  for (const auto& [m, c] : terms_) {
    t = c.get_num() * (l / c.get_den());
    for (std::size_t k = 0; k < arity_; ++k) {
      if (m[k] != 0) t *= var_pows[k][m[k]];
    }
    t *= den_pows[top - m.total_degree()];
    sum += t;
  }
  Rational r(sum, l * den_pows[top]);
  r.canonicalize();
  return r;
}

double Poly::eval(std::span<const double> point) const {
  if (point.size() != arity_) {
    throw invalid_input("eval: point has " + std::to_string(point.size()) +
                        " coordinates, polynomial arity is " + std::to_string(arity_));
  }
  std::vector<std::vector<double>> var_pows(arity_);
  for (std::size_t k = 0; k < arity_; ++k) {
    unsigned deg = degree_in(k);
    auto& pw = var_pows[k];
    pw.reserve(deg + 1);
    pw.push_back(1.0);
    for (unsigned e = 1; e <= deg; ++e) pw.push_back(pw.back() * point[k]);
  }
  double sum = 0.0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (std::size_t k = 0; k < arity_; ++k) t *= var_pows[k][m[k]];
    sum += t;
  }
  return sum;
}

Poly Poly::compose(std::span<const Poly> inner) const {
  if (inner.size() != arity_) {
    throw invalid_input("compose: outer arity " + std::to_string(arity_) + " but " +
                        std::to_string(inner.size()) + " inner polynomials");
  }
  const std::size_t n = inner.front().arity();
  for (const Poly& q : inner) {
    if (q.arity() != n) throw invalid_input("compose: inner polynomials differ in arity");
  }

  std::vector<std::vector<Poly>> pows(arity_);
  auto power = [&](std::size_t k, Exponent e) -> const Poly& {
    auto& pw = pows[k];
    if (pw.empty()) pw.push_back(constant(n, Rational(1)));
    while (pw.size() <= e) pw.push_back(pw.back() * inner[k]);
    return pw[e];
  };

  Poly result(n);
  for (const auto& [m, c] : terms_) {
    Poly t = constant(n, c);
    for (std::size_t k = 0; k < arity_; ++k) {
      if (m[k] != 0) t *= power(k, m[k]);
    }
    result += t;
  }
  return result;
}

}  // namespace quadrant
