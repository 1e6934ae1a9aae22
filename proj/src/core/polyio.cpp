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

#include "core/polyio.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "core/error.hpp"

namespace quadrant {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

Exponent parse_exponent(std::string_view s, std::size_t line_no) {
  if (s.empty() || s.size() > 9) throw ParseError(line_no, "bad exponent '" + std::string(s) + "'");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(line_no, "bad exponent '" + std::string(s) + "'");
    }
  }
  if (s.size() > 1 && s.front() == '0') {
    throw ParseError(line_no, "exponent with leading zero '" + std::string(s) + "'");
  }
  return static_cast<Exponent>(std::stoul(std::string(s)));
}

}  // namespace

std::string serialize(const Poly& p) {
  std::string out;
  for (const auto& [m, c] : p.terms()) {
    out += to_canonical_string(c);
    for (Exponent e : m.exponents()) {
      out += ' ';
      out += std::to_string(e);
    }
    out += '\n';
  }
  return out;
}

std::string serialize(const PolyMap& m) {
  std::string out;
  for (std::size_t i = 0; i < m.output_arity(); ++i) {
    if (i > 0) out += "--\n";
    out += serialize(m.component(i));
  }
  return out;
}

PolyMap parse_map(std::string_view text, std::optional<std::size_t> arity) {
  struct RawTerm {
    Monomial m;
    Rational c;
  };
  std::vector<std::vector<RawTerm>> comps(1);
  std::optional<std::size_t> seen_arity = arity;

  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = lines[i];
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line == "--") {
      comps.emplace_back();
      continue;
    }
    auto fields = split_fields(line);
    if (fields.empty()) throw ParseError(line_no, "empty line");
    if (fields.size() < 2) throw ParseError(line_no, "term needs a coefficient and exponents");
    Rational c;
    try {
      c = parse_canonical_rational(fields[0]);
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
    if (c == 0) throw ParseError(line_no, "zero coefficient");
    std::vector<Exponent> exps;
    for (std::size_t f = 1; f < fields.size(); ++f) exps.push_back(parse_exponent(fields[f], line_no));
    if (seen_arity && *seen_arity != exps.size()) {
      throw ParseError(line_no, "expected " + std::to_string(*seen_arity) + " exponents, got " +
                                    std::to_string(exps.size()));
    }
    seen_arity = exps.size();
    Monomial m(std::move(exps));
    auto& terms = comps.back();
    if (!terms.empty() && !GradedLexGreater{}(terms.back().m, m)) {
      throw ParseError(line_no, terms.back().m == m ? "duplicate monomial"
                                                    : "terms not in graded-lex order");
    }
    terms.push_back({std::move(m), std::move(c)});
  }
  if (!seen_arity) throw ParseError(lines.size(), "cannot infer arity from an empty map");

  std::vector<Poly> polys;
  polys.reserve(comps.size());
  for (auto& terms : comps) {
    Poly p(*seen_arity);
    for (auto& t : terms) p.add_term(t.m, t.c);
    polys.push_back(std::move(p));
  }
  return PolyMap(*seen_arity, std::move(polys));
}

Poly parse_poly(std::string_view text, std::optional<std::size_t> arity) {
  PolyMap m = parse_map(text, arity);
  if (m.output_arity() != 1) throw ParseError(1, "expected a single polynomial, found a map");
  return m.component(0);
}

std::vector<std::string> default_variable_names(std::size_t arity) {
  if (arity == 1) return {"z"};
  if (arity == 2) return {"x", "y"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= arity; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, const std::vector<std::string>& vars)
      : text_(text), vars_(vars) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::parse, "column " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Poly expr() {
    skip_space();
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    Poly acc = product();
    if (negate) acc = -acc;
    while (peek('+') || peek('-')) {
      bool minus = text_[pos_++] == '-';
      Poly rhs = product();
      if (minus) acc -= rhs; else acc += rhs;
    }
    return acc;
  }

  bool starts_factor() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return c == '(' || c == '*' || std::isdigit(static_cast<unsigned char>(c)) ||
           std::isalpha(static_cast<unsigned char>(c));
  }

  Poly product() {
    Poly acc = factor();
    while (starts_factor()) {
      if (peek('*')) ++pos_;
      acc *= factor();
    }
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    if (peek('^')) {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      if (pos_ - start > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  Poly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t den_start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (den_start == pos_) fail("expected denominator");
      }
      return Poly::constant(vars_.size(), parse_rational(text_.substr(start, pos_ - start)));
    }
    // Longest variable name matching at this position.
    std::size_t best = vars_.size();
    std::size_t best_len = 0;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      const std::string& v = vars_[i];
      if (v.size() > best_len && text_.substr(pos_, v.size()) == v) {
        best = i;
        best_len = v.size();
      }
    }
    if (best == vars_.size()) fail("unknown symbol");
    pos_ += best_len;
    return Poly::variable(vars_.size(), best);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

// Grouped layout shared by the plain-text and TeX renderers.
struct Style {
  std::vector<std::string> vars;
  std::string open;   // around multi-term groups
  std::string close;
  bool tex = false;
};

std::string power(const Style& s, std::size_t var, Exponent e) {
  if (e == 0) return {};
  std::string out = s.vars[var];
  if (e > 1) out += s.tex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  return out;
}

std::string coefficient_prefix(const Style& s, const Rational& c, bool unit_monomial) {
  Rational a = abs(c);
  std::string out = sgn(c) < 0 ? "-" : "";
  if (a == 1 && !unit_monomial) return out;
  if (a.get_den() == 1) return out + a.get_num().get_str();
  if (s.tex) return out + "\\tfrac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
  return out + "(" + to_canonical_string(a) + ")";
}

std::string render_sum(const Style& s, const std::vector<std::pair<Monomial, Rational>>& terms,
                       std::size_t nvars) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& [m, c] = terms[i];
    bool unit = true;
    std::string mono;
    for (std::size_t k = 0; k < nvars; ++k) {
      if (m[k] != 0) unit = false;
      mono += power(s, k, m[k]);
    }
    std::string piece = coefficient_prefix(s, c, unit) + mono;
    if (i > 0 && piece.front() != '-') out += '+';
    out += piece;
  }
  return out;
}

std::string render_component(const Style& s, const Poly& p) {
  const std::size_t n = p.arity();
  if (p.is_zero()) return "0";
  if (n == 1) {
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    return render_sum(s, terms, 1);
  }
  // Group by the exponent of the last variable, largest first.
  std::map<Exponent, std::vector<std::pair<Monomial, Rational>>, std::greater<>> groups;
  for (const auto& [m, c] : p.terms()) groups[m[n - 1]].emplace_back(m, c);

  std::string out;
  bool first = true;
  for (auto& [e, terms] : groups) {
    std::string block;
    std::string tail = power(s, n - 1, e);
    if (terms.size() == 1) {
      const auto& [m, c] = terms.front();
      bool unit = true;
      for (std::size_t k = 0; k < n; ++k) unit = unit && m[k] == 0;
      std::string mono;
      for (std::size_t k = 0; k + 1 < n; ++k) mono += power(s, k, m[k]);
      block = coefficient_prefix(s, c, unit) + mono + tail;
    } else {
      block = s.open + render_sum(s, terms, n - 1) + s.close + tail;
    }
    if (!first && block.front() != '-') out += '+';
    out += block;
    first = false;
  }
  return out;
}

std::string argument_list(const std::vector<std::string>& vars) {
  std::string out = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i > 0) out += ',';
    out += vars[i];
  }
  return out + ")";
}

}  // namespace

Poly parse_expression(std::string_view text, const std::vector<std::string>& variables) {
  if (variables.empty()) throw invalid_input("expression needs at least one variable");
  return ExprParser(text, variables).parse();
}

std::string render_table(const PolyMap& m, std::string_view name) {
  Style s{default_variable_names(m.input_arity()), "(", ")", false};
  std::string out;
  for (std::size_t i = 0; i < m.output_arity(); ++i) {
    out += std::string(name) + std::to_string(i + 1) + argument_list(s.vars) + " := ";
    out += render_component(s, m.component(i));
    out += '\n';
  }
  return out;
}

PolyMap parse_table(std::string_view text, std::size_t arity) {
  auto vars = default_variable_names(arity);
  std::vector<Poly> comps;
  auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (auto def = line.find(":="); def != std::string_view::npos) line.remove_prefix(def + 2);
    if (split_fields(line).empty()) continue;
    try {
      comps.push_back(parse_expression(line, vars));
    } catch (const Error& e) {
      throw ParseError(i + 1, e.what());
    }
  }
  if (comps.empty()) throw ParseError(1, "no components");
  return PolyMap(arity, std::move(comps));
}

std::string render_tex(const PolyMap& m, std::string_view name) {
  Style s{{}, "\\big(", "\\big)", true};
  for (const auto& v : default_variable_names(m.input_arity())) s.vars.push_back("{\\tt " + v + "}");
  std::string out = "\\begin{longtable}{p{14cm}}\n";
  for (std::size_t i = 0; i < m.output_arity(); ++i) {
    const bool last = i + 1 == m.output_arity();
    out += "{\\tiny $" + std::string(name) + "_" + std::to_string(i + 1) + argument_list(s.vars) + ":=";
    out += render_component(s, m.component(i));
    out += last ? ".$}\n" : ",$}\\\\[0.2cm]\n";
  }
  out += "\\end{longtable}\n";
  return out;
}

nlohmann::ordered_json to_json(const PolyMap& m) {
  using nlohmann::ordered_json;
  ordered_json comps = ordered_json::array();
  for (const Poly& p : m.components()) {
    ordered_json terms = ordered_json::array();
    for (const auto& [mono, c] : p.terms()) {
      ordered_json t = ordered_json::array();
      t.push_back(to_canonical_string(c));
      for (Exponent e : mono.exponents()) t.push_back(e);
      terms.push_back(std::move(t));
    }
    comps.push_back({{"degree", p.total_degree()},
                     {"monomials", p.monomial_count()},
                     {"terms", std::move(terms)}});
  }
  Metrics mt = metrics(m);
  return {{"arity", m.input_arity()},
          {"components", std::move(comps)},
          {"total_degree", mt.total_degree},
          {"total_monomials", mt.total_monomials}};
}

}  // namespace quadrant
