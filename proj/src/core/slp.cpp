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

#include "core/slp.hpp"

#include <cctype>
#include <string>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace quadrant {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Operand indices of an instruction (zero, one or two of them).
std::vector<std::size_t> operands(const SlpInstr& instr) {
  return std::visit(
      overloaded{
          [](const SlpInput&) { return std::vector<std::size_t>{}; },
          [](const SlpConst&) { return std::vector<std::size_t>{}; },
          [](const SlpScalarMul& i) { return std::vector<std::size_t>{i.operand}; },
          [](const auto& i) { return std::vector<std::size_t>{i.lhs, i.rhs}; },
      },
      instr);
}

SlpInstr remap(const SlpInstr& instr, const std::vector<std::size_t>& to) {
  return std::visit(
      overloaded{
          [](const SlpInput& i) -> SlpInstr { return i; },
          [](const SlpConst& i) -> SlpInstr { return i; },
          [&](const SlpScalarMul& i) -> SlpInstr { return SlpScalarMul{i.scalar, to[i.operand]}; },
          [&](const SlpAdd& i) -> SlpInstr { return SlpAdd{to[i.lhs], to[i.rhs]}; },
          [&](const SlpSub& i) -> SlpInstr { return SlpSub{to[i.lhs], to[i.rhs]}; },
          [&](const SlpMul& i) -> SlpInstr { return SlpMul{to[i.lhs], to[i.rhs]}; },
      },
      instr);
}

template <class Value, class MakeInput, class MakeConst>
std::vector<Value> run(const SlpProgram& prog, MakeInput make_input, MakeConst make_const) {
  std::vector<Value> v;
  v.reserve(prog.instructions().size());
  for (const SlpInstr& instr : prog.instructions()) {
    v.push_back(std::visit(
        overloaded{
            [&](const SlpInput& i) -> Value { return make_input(i.index); },
            [&](const SlpConst& i) -> Value { return make_const(i.value); },
            [&](const SlpAdd& i) -> Value { return v[i.lhs] + v[i.rhs]; },
            [&](const SlpSub& i) -> Value { return v[i.lhs] - v[i.rhs]; },
            [&](const SlpMul& i) -> Value { return v[i.lhs] * v[i.rhs]; },
            [&](const SlpScalarMul& i) -> Value { return make_const(i.scalar) * v[i.operand]; },
        },
        instr));
  }
  std::vector<Value> out;
  out.reserve(prog.outputs().size());
  for (std::size_t o : prog.outputs()) out.push_back(v[o]);
  return out;
}

void check_point(const SlpProgram& prog, std::size_t size) {
  if (size != prog.input_arity()) {
    throw invalid_input("slp_eval: program reads " + std::to_string(prog.input_arity()) +
                        " inputs, point has " + std::to_string(size));
  }
}

}  // namespace

SlpProgram::SlpProgram(std::vector<SlpInstr> instructions, std::vector<std::size_t> outputs)
    : instructions_(std::move(instructions)), outputs_(std::move(outputs)) {
  for (std::size_t k = 0; k < instructions_.size(); ++k) {
    for (std::size_t op : operands(instructions_[k])) {
      if (op >= k) {
        throw invalid_input("instruction %" + std::to_string(k) + " reads %" +
                            std::to_string(op) + ", which is not an earlier instruction");
      }
    }
    if (const auto* in = std::get_if<SlpInput>(&instructions_[k])) {
      input_arity_ = std::max(input_arity_, in->index + 1);
    }
  }
  if (outputs_.empty()) throw invalid_input("program has no outputs");
  for (std::size_t o : outputs_) {
    if (o >= instructions_.size()) {
      throw invalid_input("output %" + std::to_string(o) + " does not exist");
    }
  }
}

std::size_t nonscalar_count(const SlpProgram& prog) {
  const auto& code = prog.instructions();
  std::vector<bool> constant(code.size(), false);
  std::size_t count = 0;
  for (std::size_t k = 0; k < code.size(); ++k) {
    if (std::holds_alternative<SlpConst>(code[k])) {
      constant[k] = true;
      continue;
    }
    if (std::holds_alternative<SlpInput>(code[k])) continue;
    const auto ops = operands(code[k]);
    bool all_constant = true;
    for (std::size_t op : ops) all_constant = all_constant && constant[op];
    constant[k] = all_constant;
    if (std::holds_alternative<SlpMul>(code[k]) && !constant[ops[0]] && !constant[ops[1]]) ++count;
  }
  return count;
}

std::vector<Rational> slp_eval(const SlpProgram& prog, std::span<const Rational> point) {
  check_point(prog, point.size());
  return run<Rational>(
      prog, [&](std::size_t i) { return point[i]; }, [](const Rational& c) { return c; });
}

std::vector<double> slp_eval(const SlpProgram& prog, std::span<const double> point) {
  check_point(prog, point.size());
  return run<double>(
      prog, [&](std::size_t i) { return point[i]; },
      [](const Rational& c) { return to_double(c); });
}

PolyMap slp_expand(const SlpProgram& prog) {
  const std::size_t n = std::max<std::size_t>(prog.input_arity(), 1);
  auto comps = run<Poly>(
      prog, [&](std::size_t i) { return Poly::variable(n, i); },
      [&](const Rational& c) { return Poly::constant(n, c); });
  return PolyMap(n, std::move(comps));
}

SlpProgram chain(const SlpProgram& first, const SlpProgram& second) {
  if (second.input_arity() > first.outputs().size()) {
    throw invalid_input("chain: second program reads " + std::to_string(second.input_arity()) +
                        " inputs, first produces " + std::to_string(first.outputs().size()));
  }
  std::vector<SlpInstr> code = first.instructions();
  std::vector<std::size_t> where(second.instructions().size());
  for (std::size_t k = 0; k < second.instructions().size(); ++k) {
    const SlpInstr& instr = second.instructions()[k];
    if (const auto* in = std::get_if<SlpInput>(&instr)) {
      where[k] = first.outputs()[in->index];
      continue;
    }
    code.push_back(remap(instr, where));
    where[k] = code.size() - 1;
  }
  std::vector<std::size_t> outputs;
  for (std::size_t o : second.outputs()) outputs.push_back(where[o]);
  return SlpProgram(std::move(code), std::move(outputs));
}

SlpProgram reorder(const SlpProgram& prog, std::span<const std::size_t> order) {
  const auto& code = prog.instructions();
  if (order.size() != code.size()) throw invalid_input("reorder: not a permutation");
  constexpr std::size_t kUnplaced = static_cast<std::size_t>(-1);
  std::vector<std::size_t> where(code.size(), kUnplaced);
  std::vector<SlpInstr> out;
  out.reserve(code.size());
  for (std::size_t old : order) {
    if (old >= code.size() || where[old] != kUnplaced) {
      throw invalid_input("reorder: not a permutation");
    }
    for (std::size_t op : operands(code[old])) {
      if (where[op] == kUnplaced) throw invalid_input("reorder: order breaks a dependency");
    }
    out.push_back(remap(code[old], where));
    where[old] = out.size() - 1;
  }
  std::vector<std::size_t> outputs;
  for (std::size_t o : prog.outputs()) outputs.push_back(where[o]);
  return SlpProgram(std::move(out), std::move(outputs));
}

SlpProgram shuffle_topological(const SlpProgram& prog, std::uint64_t seed) {
  const auto& code = prog.instructions();
  std::vector<std::size_t> pending(code.size(), 0);
  std::vector<std::vector<std::size_t>> users(code.size());
  for (std::size_t k = 0; k < code.size(); ++k) {
    for (std::size_t op : operands(code[k])) {
      ++pending[k];
      users[op].push_back(k);
    }
  }
  std::vector<std::size_t> ready;
  for (std::size_t k = 0; k < code.size(); ++k) {
    if (pending[k] == 0) ready.push_back(k);
  }
  SplitMix64 rng(seed);
  std::vector<std::size_t> order;
  order.reserve(code.size());
  while (!ready.empty()) {
    const std::size_t pick = rng.next() % ready.size();
    const std::size_t k = ready[pick];
    ready[pick] = ready.back();
    ready.pop_back();
    order.push_back(k);
    for (std::size_t u : users[k]) {
      if (--pending[u] == 0) ready.push_back(u);
    }
  }
  return reorder(prog, order);
}

QuadrantPrograms build_quadrant_programs() {
  SlpProgram F = [] {
    SlpBuilder b;
    auto x = b.input(0);
    auto y = b.input(1);
    auto t = b.mul(x, y);
    auto one = b.constant(Rational(1));
    auto t1 = b.sub(t, one);
    auto sq = b.mul(t1, t1);
    auto xx = b.mul(x, x);
    auto yy = b.mul(y, y);
    auto first = b.add(sq, xx);
    auto second = b.add(sq, yy);
    return std::move(b).build({first, second});
  }();

  SlpProgram G = [] {
    SlpBuilder b;
    auto x = b.input(0);
    auto y = b.input(1);
    auto t = b.mul(x, y);
    auto s = b.mul(t, t);
    // q1 = s - 4t + 4 = (xy - 2)^2, q2 = s - 2t + 1 = (xy - 1)^2
    auto m4t = b.smul(Rational(-4), t);
    auto four = b.constant(Rational(4));
    auto q1 = b.add(b.add(s, m4t), four);
    auto m2t = b.smul(Rational(-2), t);
    auto one = b.constant(Rational(1));
    auto q2 = b.add(b.add(s, m2t), one);
    auto yq1 = b.mul(y, q1);
    auto xq2 = b.mul(x, q2);
    auto second = b.add(yq1, xq2);
    return std::move(b).build({x, second});
  }();

  SlpProgram H = [] {
    SlpBuilder b;
    auto x = b.input(0);
    auto y = b.input(1);
    auto t = b.mul(x, y);
    auto xt = b.mul(x, t);
    auto m4x = b.smul(Rational(-4), x);
    auto half_y = b.smul(Rational(1, 2), y);
    auto inner = b.add(b.add(xt, m4x), half_y);
    auto prod = b.mul(t, inner);
    auto four_x = b.smul(Rational(4), x);
    auto first = b.add(prod, four_x);
    return std::move(b).build({first, y});
  }();

  SlpProgram f = chain(chain(F, G), H);
  return {std::move(F), std::move(G), std::move(H), std::move(f)};
}

std::string serialize(const SlpProgram& prog) {
  auto ref = [](std::size_t i) { return "%" + std::to_string(i); };
  std::string out;
  const auto& code = prog.instructions();
  for (std::size_t k = 0; k < code.size(); ++k) {
    out += ref(k) + " = ";
    out += std::visit(
        overloaded{
            [&](const SlpInput& i) { return "input " + std::to_string(i.index); },
            [&](const SlpConst& i) { return "const " + to_canonical_string(i.value); },
            [&](const SlpAdd& i) { return "add " + ref(i.lhs) + " " + ref(i.rhs); },
            [&](const SlpSub& i) { return "sub " + ref(i.lhs) + " " + ref(i.rhs); },
            [&](const SlpMul& i) { return "mul " + ref(i.lhs) + " " + ref(i.rhs); },
            [&](const SlpScalarMul& i) {
              return "smul " + to_canonical_string(i.scalar) + " " + ref(i.operand);
            },
        },
        code[k]);
    out += '\n';
  }
  out += "out";
  for (std::size_t o : prog.outputs()) out += " " + ref(o);
  out += '\n';
  return out;
}

SlpProgram parse_slp(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start < text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }

  std::vector<SlpInstr> code;
  std::vector<std::size_t> outputs;
  bool seen_out = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::vector<std::string> tok;
    {
      std::string cur;
      for (char c : lines[i]) {
        if (std::isspace(static_cast<unsigned char>(c))) {
          if (!cur.empty()) tok.push_back(std::move(cur));
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!cur.empty()) tok.push_back(std::move(cur));
    }
    if (tok.empty()) continue;
    if (seen_out) throw ParseError(line_no, "instructions after 'out'");

    auto index = [&](const std::string& s) -> std::size_t {
      if (s.size() < 2 || s[0] != '%') throw ParseError(line_no, "expected %index, got '" + s + "'");
      for (std::size_t c = 1; c < s.size(); ++c) {
        if (!std::isdigit(static_cast<unsigned char>(s[c]))) {
          throw ParseError(line_no, "expected %index, got '" + s + "'");
        }
      }
      if (s.size() > 10) throw ParseError(line_no, "index too large");
      return std::stoul(s.substr(1));
    };
    auto rational = [&](const std::string& s) {
      try {
        return parse_canonical_rational(s);
      } catch (const Error& e) {
        throw ParseError(line_no, e.what());
      }
    };

    if (tok[0] == "out") {
      for (std::size_t k = 1; k < tok.size(); ++k) outputs.push_back(index(tok[k]));
      seen_out = true;
      continue;
    }
    if (tok.size() < 3 || tok[1] != "=") throw ParseError(line_no, "expected '%k = op ...'");
    if (index(tok[0]) != code.size()) {
      throw ParseError(line_no, "expected %" + std::to_string(code.size()) + " here");
    }
    const std::string& op = tok[2];
    auto arity_check = [&](std::size_t n) {
      if (tok.size() != 3 + n) throw ParseError(line_no, "'" + op + "' takes " + std::to_string(n) + " operands");
    };
    if (op == "input") {
      arity_check(1);
      for (char c : tok[3]) {
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(line_no, "bad input index");
      }
      code.push_back(SlpInput{std::stoul(tok[3])});
    } else if (op == "const") {
      arity_check(1);
      code.push_back(SlpConst{rational(tok[3])});
    } else if (op == "add") {
      arity_check(2);
      code.push_back(SlpAdd{index(tok[3]), index(tok[4])});
    } else if (op == "sub") {
      arity_check(2);
      code.push_back(SlpSub{index(tok[3]), index(tok[4])});
    } else if (op == "mul") {
      arity_check(2);
      code.push_back(SlpMul{index(tok[3]), index(tok[4])});
    } else if (op == "smul") {
      arity_check(2);
      code.push_back(SlpScalarMul{rational(tok[3]), index(tok[4])});
    } else {
      throw ParseError(line_no, "unknown operation '" + op + "'");
    }
  }
  if (!seen_out) throw ParseError(lines.size(), "missing 'out' line");
  try {
    return SlpProgram(std::move(code), std::move(outputs));
  } catch (const Error& e) {
    throw ParseError(lines.size(), e.what());
  }
}

}  // namespace quadrant
