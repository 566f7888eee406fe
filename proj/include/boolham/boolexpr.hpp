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

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace boolham {

/** Largest variable count accepted by truth_table(). */
inline constexpr int kMaxTableVars = 24;

/**
 * Immutable Boolean formula. Nodes are shared, so copies are cheap.
 *
 * Variables are 1-based (x1 is the first); in every integer encoding of an
 * assignment x1 is the least significant bit. And/Or/Xor are n-ary and
 * built flattened: an And never has an And child. A one-child And/Or/Xor
 * collapses to the child; an empty And is the constant 1 and an empty
 * Or/Xor the constant 0.
 */
class BoolExpr {
 public:
  enum class Op { kConst, kVar, kNot, kAnd, kOr, kXor, kImplies };

  static BoolExpr constant(bool value);
  static BoolExpr var(int index);
  static BoolExpr negate(BoolExpr e);
  static BoolExpr all_of(std::vector<BoolExpr> children);
  static BoolExpr any_of(std::vector<BoolExpr> children);
  static BoolExpr parity_of(std::vector<BoolExpr> children);
  static BoolExpr implies(BoolExpr lhs, BoolExpr rhs);

  Op op() const;
  /// Value of a kConst node.
  bool value() const;
  /// Index of a kVar node.
  int index() const;
  std::span<const BoolExpr> children() const;

  /// Largest variable index appearing in the formula (0 if none).
  int max_var() const;

  /// Value on an integer-encoded assignment (x1 = bit 0).
  bool evaluate(std::uint64_t assignment) const;
  /// Value on an explicit assignment; assignment[j-1] is x_j.
  bool evaluate(std::span<const bool> assignment) const;

  /// Infix text accepted by parse_expr().
  std::string to_string() const;

  friend bool operator==(const BoolExpr& a, const BoolExpr& b);

  friend BoolExpr operator!(const BoolExpr& e) { return negate(e); }
  friend BoolExpr operator&(const BoolExpr& a, const BoolExpr& b) {
    return all_of({a, b});
  }
  friend BoolExpr operator|(const BoolExpr& a, const BoolExpr& b) {
    return any_of({a, b});
  }
  friend BoolExpr operator^(const BoolExpr& a, const BoolExpr& b) {
    return parity_of({a, b});
  }

  struct Node;

 private:
  explicit BoolExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static BoolExpr make_nary(Op op, std::vector<BoolExpr> children);

  std::shared_ptr<const Node> node_;
};

/**
 * Parses an infix formula over x1..x{n_vars}.
 *
 * Grammar: constants 0 and 1, variables xN, operators ! & ^ | => with
 * precedence in that order (! binds tightest), parentheses; => is
 * right-associative. Throws ParseError with the byte offset on bad input
 * or on a variable index above n_vars.
 */
BoolExpr parse_expr(std::string_view text, int n_vars);

/// Truth table of length 2^n indexed by the integer assignment.
std::vector<std::uint8_t> truth_table(const BoolExpr& e, int n_vars);

/** Weighted sum of Boolean clauses: value(x) = sum_j w_j f_j(x). */
struct PseudoBooleanObjective {
  struct Clause {
    double weight;
    BoolExpr expr;
  };

  int n_vars = 0;
  std::vector<Clause> clauses;

  double evaluate(std::uint64_t assignment) const;
  /// Largest possible value when all weights are positive: their sum.
  double weight_sum() const;
};

/** Both readings of a CNF file. */
struct DimacsProblem {
  /// One clause per line, weights from a wcnf file or 1.
  PseudoBooleanObjective objective;
  /// Conjunction of all clauses.
  BoolExpr formula;
};

/**
 * Parses DIMACS "p cnf <vars> <clauses>" or weighted "p wcnf <vars>
 * <clauses> [top]" text. Comment lines start with 'c'; a '%' line ends the
 * input. Each clause is a list of nonzero literals terminated by 0; wcnf
 * clauses carry a leading real weight.
 */
DimacsProblem parse_dimacs(std::string_view text);

}  // namespace boolham
