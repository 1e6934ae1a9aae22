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
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "core/polymap.hpp"

namespace quadrant {

// Straight-line program instructions. Operands are indices of earlier
// instructions.
struct SlpInput {
  std::size_t index;
};
struct SlpConst {
  Rational value;
};
struct SlpAdd {
  std::size_t lhs, rhs;
};
struct SlpSub {
  std::size_t lhs, rhs;
};
struct SlpMul {
  std::size_t lhs, rhs;
};
struct SlpScalarMul {
  Rational scalar;
  std::size_t operand;
};

using SlpInstr = std::variant<SlpInput, SlpConst, SlpAdd, SlpSub, SlpMul, SlpScalarMul>;

/// Branch-free arithmetic program. Construction validates that every operand
/// refers to an earlier instruction and every output to an existing one, so
/// a program is acyclic by construction.
class SlpProgram {
 public:
  SlpProgram(std::vector<SlpInstr> instructions, std::vector<std::size_t> outputs);

  /// One more than the largest Input index; 0 for a program without inputs.
  std::size_t input_arity() const noexcept { return input_arity_; }
  const std::vector<SlpInstr>& instructions() const noexcept { return instructions_; }
  const std::vector<std::size_t>& outputs() const noexcept { return outputs_; }

 private:
  std::vector<SlpInstr> instructions_;
  std::vector<std::size_t> outputs_;
  std::size_t input_arity_ = 0;
};

/// Appends instructions and hands back their indices.
class SlpBuilder {
 public:
  std::size_t input(std::size_t index) { return push(SlpInput{index}); }
  std::size_t constant(Rational value) { return push(SlpConst{std::move(value)}); }
  std::size_t add(std::size_t a, std::size_t b) { return push(SlpAdd{a, b}); }
  std::size_t sub(std::size_t a, std::size_t b) { return push(SlpSub{a, b}); }
  std::size_t mul(std::size_t a, std::size_t b) { return push(SlpMul{a, b}); }
  std::size_t smul(Rational s, std::size_t a) { return push(SlpScalarMul{std::move(s), a}); }

  SlpProgram build(std::vector<std::size_t> outputs) && {
    return SlpProgram(std::move(code_), std::move(outputs));
  }

 private:
  std::size_t push(SlpInstr instr) {
    code_.push_back(std::move(instr));
    return code_.size() - 1;
  }

  std::vector<SlpInstr> code_;
};

/// Number of Mul instructions whose operands are both non-constant-derived.
/// An instruction is constant-derived iff it is a Const or all of its
/// operands are constant-derived. Add, Sub and ScalarMul are free.
std::size_t nonscalar_count(const SlpProgram& prog);

std::vector<Rational> slp_eval(const SlpProgram& prog, std::span<const Rational> point);
std::vector<double> slp_eval(const SlpProgram& prog, std::span<const double> point);

/// Symbolic run of the program; one component per output.
PolyMap slp_expand(const SlpProgram& prog);

/// Program for second ∘ first: the inputs of `second` read the outputs of
/// `first`. No instruction is shared or duplicated.
SlpProgram chain(const SlpProgram& first, const SlpProgram& second);

/// Same computation with instructions emitted in `order` (a permutation of
/// the instruction indices). Throws if the order breaks a dependency.
SlpProgram reorder(const SlpProgram& prog, std::span<const std::size_t> order);

/// A uniformly drawn dependency-respecting reordering, seeded.
SlpProgram shuffle_topological(const SlpProgram& prog, std::uint64_t seed);

/// The factored evaluation scheme of the three quadrant stages:
///   F: t = xy;  ((t-1)^2 + x^2, (t-1)^2 + y^2)                   4 products
///   G: t = xy, s = t^2;  (x, y(s-4t+4) + x(s-2t+1))              4 products
///   H: t = xy;  (t(x*t - 4x + y/2) + 4x, y)                      3 products
/// and their chain for H ∘ G ∘ F (11 products).
struct QuadrantPrograms {
  SlpProgram F;
  SlpProgram G;
  SlpProgram H;
  SlpProgram f;
};

QuadrantPrograms build_quadrant_programs();

/// "%k = input n | const p/q | add %i %j | sub %i %j | mul %i %j |
/// smul p/q %i", one per line, then "out %i %j ...".
std::string serialize(const SlpProgram& prog);
SlpProgram parse_slp(std::string_view text);

}  // namespace quadrant
