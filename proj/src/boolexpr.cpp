// Copyright 2026 The boolham Authors
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

#include "boolham/boolexpr.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "boolham/errors.hpp"

namespace boolham {

struct BoolExpr::Node {
  Op op = Op::kConst;
  bool value = false;
  int index = 0;
  int max_var = 0;
  std::vector<BoolExpr> children;
};

namespace {

using Op = BoolExpr::Op;

int precedence(Op op) {
  switch (op) {
    case Op::kImplies: return 1;
    case Op::kOr: return 2;
    case Op::kXor: return 3;
    case Op::kAnd: return 4;
    case Op::kNot: return 5;
    case Op::kConst:
    case Op::kVar: return 6;
  }
  return 6;
}

const char* infix_symbol(Op op) {
  switch (op) {
    case Op::kAnd: return " & ";
    case Op::kOr: return " | ";
    case Op::kXor: return " ^ ";
    case Op::kImplies: return " => ";
    default: return "";
  }
}

void print(const BoolExpr& e, int min_prec, std::string& out) {
  const int prec = precedence(e.op());
  const bool parens = prec < min_prec;
  if (parens) out += '(';
  switch (e.op()) {
    case Op::kConst: out += e.value() ? '1' : '0'; break;
    case Op::kVar: out += 'x' + std::to_string(e.index()); break;
    case Op::kNot:
      out += '!';
      print(e.children()[0], precedence(Op::kNot), out);
      break;
    case Op::kImplies:
      print(e.children()[0], prec + 1, out);
      out += infix_symbol(Op::kImplies);
      print(e.children()[1], prec, out);
      break;
    case Op::kAnd:
    case Op::kOr:
    case Op::kXor: {
      bool first = true;
      for (const BoolExpr& c : e.children()) {
        if (!first) out += infix_symbol(e.op());
        first = false;
        print(c, prec + 1, out);
      }
      break;
    }
  }
  if (parens) out += ')';
}

class ExprParser {
 public:
  ExprParser(std::string_view text, int n_vars) : text_(text), n_vars_(n_vars) {}

  BoolExpr parse() {
    BoolExpr e = parse_implies();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  BoolExpr parse_implies() {
    BoolExpr lhs = parse_or();
    if (accept("=>")) return BoolExpr::implies(lhs, parse_implies());
    return lhs;
  }

  BoolExpr parse_or() {
    std::vector<BoolExpr> items{parse_xor()};
    while (accept("|")) items.push_back(parse_xor());
    return BoolExpr::any_of(std::move(items));
  }

  BoolExpr parse_xor() {
    std::vector<BoolExpr> items{parse_and()};
    while (accept("^")) items.push_back(parse_and());
    return BoolExpr::parity_of(std::move(items));
  }

  BoolExpr parse_and() {
    std::vector<BoolExpr> items{parse_unary()};
    while (accept("&")) items.push_back(parse_unary());
    return BoolExpr::all_of(std::move(items));
  }

  BoolExpr parse_unary() {
    if (accept("!")) return BoolExpr::negate(parse_unary());
    return parse_atom();
  }

  BoolExpr parse_atom() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      BoolExpr inner = parse_implies();
      if (!accept(")")) fail("expected ')'");
      return inner;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      return BoolExpr::constant(c == '1');
    }
    if (c == 'x') {
      const std::size_t start = pos_++;
      if (pos_ == text_.size() ||
          !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected variable index after 'x'");
      }
      long index = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        index = index * 10 + (text_[pos_++] - '0');
        if (index > 1'000'000) break;
      }
      if (index < 1 || index > n_vars_) {
        throw ParseError("variable x" + std::to_string(index) +
                             " outside x1..x" + std::to_string(n_vars_),
                         start);
      }
      return BoolExpr::var(static_cast<int>(index));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  int n_vars_;
  std::size_t pos_ = 0;
};

}  // namespace

BoolExpr BoolExpr::constant(bool value) {
  auto n = std::make_shared<Node>();
  n->op = Op::kConst;
  n->value = value;
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::var(int index) {
  if (index < 1) throw std::out_of_range("variable indices are 1-based");
  auto n = std::make_shared<Node>();
  n->op = Op::kVar;
  n->index = index;
  n->max_var = index;
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::negate(BoolExpr e) {
  auto n = std::make_shared<Node>();
  n->op = Op::kNot;
  n->max_var = e.max_var();
  n->children.push_back(std::move(e));
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::make_nary(Op op, std::vector<BoolExpr> children) {
  std::vector<BoolExpr> flat;
  flat.reserve(children.size());
  for (BoolExpr& c : children) {
    if (c.op() == op) {
      flat.insert(flat.end(), c.children().begin(), c.children().end());
    } else {
      flat.push_back(std::move(c));
    }
  }
  if (flat.empty()) return constant(op == Op::kAnd);
  if (flat.size() == 1) return flat.front();
  auto n = std::make_shared<Node>();
  n->op = op;
  for (const BoolExpr& c : flat) n->max_var = std::max(n->max_var, c.max_var());
  n->children = std::move(flat);
  return BoolExpr(std::move(n));
}

BoolExpr BoolExpr::all_of(std::vector<BoolExpr> children) {
  return make_nary(Op::kAnd, std::move(children));
}

BoolExpr BoolExpr::any_of(std::vector<BoolExpr> children) {
  return make_nary(Op::kOr, std::move(children));
}

BoolExpr BoolExpr::parity_of(std::vector<BoolExpr> children) {
  return make_nary(Op::kXor, std::move(children));
}

BoolExpr BoolExpr::implies(BoolExpr lhs, BoolExpr rhs) {
  auto n = std::make_shared<Node>();
  n->op = Op::kImplies;
  n->max_var = std::max(lhs.max_var(), rhs.max_var());
  n->children.push_back(std::move(lhs));
  n->children.push_back(std::move(rhs));
  return BoolExpr(std::move(n));
}

BoolExpr::Op BoolExpr::op() const { return node_->op; }
bool BoolExpr::value() const { return node_->value; }
int BoolExpr::index() const { return node_->index; }
std::span<const BoolExpr> BoolExpr::children() const { return node_->children; }
int BoolExpr::max_var() const { return node_->max_var; }

bool BoolExpr::evaluate(std::uint64_t assignment) const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::kConst: return n.value;
    case Op::kVar: return n.index <= 64 && ((assignment >> (n.index - 1)) & 1U);
    case Op::kNot: return !n.children[0].evaluate(assignment);
    case Op::kAnd:
      return std::all_of(n.children.begin(), n.children.end(),
                         [&](const BoolExpr& c) { return c.evaluate(assignment); });
    case Op::kOr:
      return std::any_of(n.children.begin(), n.children.end(),
                         [&](const BoolExpr& c) { return c.evaluate(assignment); });
    case Op::kXor: {
      bool v = false;
      for (const BoolExpr& c : n.children) v ^= c.evaluate(assignment);
      return v;
    }
    case Op::kImplies:
      return !n.children[0].evaluate(assignment) || n.children[1].evaluate(assignment);
  }
  return false;
}

bool BoolExpr::evaluate(std::span<const bool> assignment) const {
  if (static_cast<int>(assignment.size()) < max_var()) {
    throw std::invalid_argument("assignment shorter than the largest variable index");
  }
  const Node& n = *node_;
  switch (n.op) {
    case Op::kConst: return n.value;
    case Op::kVar: return assignment[n.index - 1];
    case Op::kNot: return !n.children[0].evaluate(assignment);
    case Op::kAnd:
      return std::all_of(n.children.begin(), n.children.end(),
                         [&](const BoolExpr& c) { return c.evaluate(assignment); });
    case Op::kOr:
      return std::any_of(n.children.begin(), n.children.end(),
                         [&](const BoolExpr& c) { return c.evaluate(assignment); });
    case Op::kXor: {
      bool v = false;
      for (const BoolExpr& c : n.children) v ^= c.evaluate(assignment);
      return v;
    }
    case Op::kImplies:
      return !n.children[0].evaluate(assignment) || n.children[1].evaluate(assignment);
  }
  return false;
}

std::string BoolExpr::to_string() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

bool operator==(const BoolExpr& a, const BoolExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.op() != b.op()) return false;
  switch (a.op()) {
    case BoolExpr::Op::kConst: return a.value() == b.value();
    case BoolExpr::Op::kVar: return a.index() == b.index();
    default:
      return std::equal(a.children().begin(), a.children().end(),
                        b.children().begin(), b.children().end());
  }
}

BoolExpr parse_expr(std::string_view text, int n_vars) {
  if (n_vars < 0) throw std::invalid_argument("negative variable count");
  return ExprParser(text, n_vars).parse();
}

std::vector<std::uint8_t> truth_table(const BoolExpr& e, int n_vars) {
  if (n_vars < 0 || n_vars > kMaxTableVars) {
    throw CapExceeded("truth table needs n <= " + std::to_string(kMaxTableVars) +
                      ", got " + std::to_string(n_vars));
  }
  if (e.max_var() > n_vars) {
    throw std::invalid_argument("expression uses x" + std::to_string(e.max_var()) +
                                " but n = " + std::to_string(n_vars));
  }
  const std::uint64_t size = std::uint64_t{1} << n_vars;
  std::vector<std::uint8_t> table(size);
  for (std::uint64_t x = 0; x < size; ++x) table[x] = e.evaluate(x) ? 1 : 0;
  return table;
}

double PseudoBooleanObjective::evaluate(std::uint64_t assignment) const {
  double v = 0.0;
  for (const Clause& c : clauses) {
    if (c.expr.evaluate(assignment)) v += c.weight;
  }
  return v;
}

double PseudoBooleanObjective::weight_sum() const {
  double s = 0.0;
  for (const Clause& c : clauses) s += c.weight;
  return s;
}

}  // namespace boolham
