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
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "core/rational.hpp"

namespace quadrant {

using Exponent = std::uint32_t;

/// Exponent vector of a term; its length is the arity of the owning Poly.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

  static Monomial one(std::size_t arity) { return Monomial(std::vector<Exponent>(arity, 0)); }

  std::size_t arity() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  unsigned total_degree() const noexcept {
    unsigned d = 0;
    for (Exponent e : exps_) d += e;
    return d;
  }

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

/// Graded lexicographic order, largest first: higher total degree wins, ties
/// go to the larger exponent of the earliest variable (x before y).
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const noexcept;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms live in a map keyed by monomial in graded-lex order, so iteration is
/// always canonical. No stored coefficient is ever zero; the zero polynomial
/// has an empty term map. Arity is fixed at construction and every binary
/// operation rejects operands of different arity.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexGreater>;

  explicit Poly(std::size_t arity);

  static Poly constant(std::size_t arity, const Rational& c);
  static Poly variable(std::size_t arity, std::size_t index);
  static Poly term(Monomial m, const Rational& c);

  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Largest total degree of a stored monomial. The zero polynomial has
  /// degree 0.
  unsigned total_degree() const noexcept;
  std::size_t monomial_count() const noexcept { return terms_.size(); }
  unsigned degree_in(std::size_t var) const;

  Rational coefficient(const Monomial& m) const;
  /// Leading coefficient in graded-lex order; zero for the zero polynomial.
  Rational leading_coefficient() const;

  /// Adds c·m in place, merging with an existing term and pruning zeros.
  void add_term(const Monomial& m, const Rational& c);

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& scalar);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;

  Poly pow(unsigned exponent) const;

  /// Exact value at a rational point.
  Rational eval(std::span<const Rational> point) const;
  /// Double-precision value; for the numeric solvers only.
  double eval(std::span<const double> point) const;

  /// Substitutes inner[i] for variable i. The result has the common arity of
  /// the inner polynomials.
  Poly compose(std::span<const Poly> inner) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void check_arity(const Poly& other, const char* op) const;

  std::size_t arity_;
  TermMap terms_;
};

}  // namespace quadrant
