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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "core/polymap.hpp"

namespace quadrant {

// Canonical text format: one term per line, "<num>/<den> <e1> ... <en>", in
// graded-lex order; components of a map are separated by a "--" line.
std::string serialize(const Poly& p);
std::string serialize(const PolyMap& m);

/// Parses the canonical format strictly: terms out of order, duplicate
/// monomials, zero coefficients and non-reduced fractions are rejected with
/// a ParseError carrying the line number. `arity` is required only when no
/// component has a term to infer it from.
PolyMap parse_map(std::string_view text, std::optional<std::size_t> arity = std::nullopt);
Poly parse_poly(std::string_view text, std::optional<std::size_t> arity = std::nullopt);

/// x, y for arity 2; z for arity 1; x1..xn otherwise.
std::vector<std::string> default_variable_names(std::size_t arity);

/// Infix expression in the given variables: + - * ^, parentheses, integer
/// and p/q literals, implicit multiplication ("2x^3y", "(1/2)xy^2").
Poly parse_expression(std::string_view text, const std::vector<std::string>& variables);

/// Human-oriented layout: one "name_i(x,y) := ..." line per component, with
/// terms grouped by descending powers of the last variable.
std::string render_table(const PolyMap& m, std::string_view name);

/// Reads render_table output (the "name(...) :=" prefix is optional).
PolyMap parse_table(std::string_view text, std::size_t arity = 2);

/// LaTeX longtable body in the same grouped layout.
std::string render_tex(const PolyMap& m, std::string_view name);

nlohmann::ordered_json to_json(const PolyMap& m);

}  // namespace quadrant
