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


#include "boolham/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace boolham {

namespace {

BoolExpr x(int j) { return BoolExpr::var(j); }

std::vector<BoolExpr> vars(int k) {
  std::vector<BoolExpr> out;
  for (int j = 1; j <= k; ++j) out.push_back(x(j));
  return out;
}

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

bool coin(Rng& rng) { return uniform_int(rng, 0, 1) == 1; }

// `width` distinct variables from 1..n in random order.
std::vector<int> pick_vars(Rng& rng, int n, int width) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(width);
  return all;
}

BoolExpr literal(int var, bool negated) {
  return negated ? !x(var) : x(var);
}

}  // namespace

std::vector<CorpusFunction> closed_form_functions() {
  const BoolExpr x1 = x(1), x2 = x(2), x3 = x(3);
  const BoolExpr n1 = !x1, n2 = !x2, n3 = !x3;
  const BoolExpr all3 = x1 & x2 & x3;
  return {
      {"x1", x1, 1},
      {"not x1", !x1, 1},
      {"x1 xor x2", x1 ^ x2, 2},
      {"xor4", BoolExpr::parity_of(vars(4)), 4},
      {"and2", x1 & x2, 2},
      {"and4", BoolExpr::all_of(vars(4)), 4},
      {"or2", x1 | x2, 2},
      {"or4", BoolExpr::any_of(vars(4)), 4},
      {"nand2", !(x1 & x2), 2},
      {"x1 implies x2", BoolExpr::implies(x1, x2), 2},
      {"maj3", (x1 & x2) | (x1 & x3) | (x2 & x3), 3},
      {"nae3", BoolExpr::negate(all3) & (x1 | x2 | x3), 3},
      {"mod3", (n1 & n2 & n3) | all3, 3},
      {"1in3", (x1 & n2 & n3) | (n1 & x2 & n3) | (n1 & n2 & x3), 3},
  };
}

BoolExpr random_expression(Rng& rng, int n_vars, int depth) {
  if (n_vars < 1) throw std::invalid_argument("random_expression needs a variable");
  if (depth <= 0 || uniform_int(rng, 0, 5) == 0) {
    if (uniform_int(rng, 0, 15) == 0) return BoolExpr::constant(coin(rng));
    return literal(uniform_int(rng, 1, n_vars), uniform_int(rng, 0, 3) == 0);
  }
  const int op = uniform_int(rng, 0, 4);
  if (op == 0) return !random_expression(rng, n_vars, depth - 1);
  if (op == 4) {
    BoolExpr lhs = random_expression(rng, n_vars, depth - 1);
    return BoolExpr::implies(lhs, random_expression(rng, n_vars, depth - 1));
  }
  std::vector<BoolExpr> children;
  const int arity = uniform_int(rng, 2, 3);
  for (int i = 0; i < arity; ++i) children.push_back(random_expression(rng, n_vars, depth - 1));
  if (op == 1) return BoolExpr::all_of(std::move(children));
  if (op == 2) return BoolExpr::any_of(std::move(children));
  return BoolExpr::parity_of(std::move(children));
}

BoolExpr random_cnf(Rng& rng, int n_vars, int n_clauses, int width) {
  if (width < 1 || width > n_vars) throw std::invalid_argument("clause width out of range");
  std::vector<BoolExpr> clauses;
  for (int c = 0; c < n_clauses; ++c) {
    std::vector<BoolExpr> lits;
    for (int v : pick_vars(rng, n_vars, width)) lits.push_back(literal(v, coin(rng)));
    clauses.push_back(BoolExpr::any_of(std::move(lits)));
  }
  return BoolExpr::all_of(std::move(clauses));
}

QuboInstance random_qubo(Rng& rng, int n_vars) {
  std::vector<double> linear(n_vars);
  std::vector<std::vector<double>> quad(n_vars, std::vector<double>(n_vars, 0.0));
  const double a = uniform_int(rng, -5, 5);
  for (int j = 0; j < n_vars; ++j) linear[j] = uniform_int(rng, -5, 5);
  for (int j = 0; j < n_vars; ++j) {
    for (int k = j + 1; k < n_vars; ++k) {
      if (coin(rng)) quad[j][k] = quad[k][j] = uniform_int(rng, -5, 5);
    }
  }
  return QuboInstance(n_vars, a, std::move(linear), std::move(quad));
}

PseudoBooleanObjective random_max2sat(Rng& rng, int n_vars, int n_clauses) {
  PseudoBooleanObjective obj{n_vars, {}};
  for (int c = 0; c < n_clauses; ++c) {
    const auto v = pick_vars(rng, n_vars, 2);
    obj.clauses.push_back({1.0, literal(v[0], coin(rng)) | literal(v[1], coin(rng))});
  }
  return obj;
}

DiagonalHamiltonian random_hamiltonian(Rng& rng, int n_qubits, int size) {
  const std::uint64_t space = std::uint64_t{1} << n_qubits;
  if (static_cast<std::uint64_t>(size) > space) throw std::invalid_argument("too many terms");
  std::uniform_int_distribution<std::uint64_t> mask(0, space - 1);
  std::uniform_real_distribution<double> weight(-1.0, 1.0);
  std::vector<std::uint64_t> masks;
  while (masks.size() < static_cast<std::size_t>(size)) {
    const std::uint64_t m = mask(rng);
    if (std::find(masks.begin(), masks.end(), m) == masks.end()) masks.push_back(m);
  }
  std::vector<DiagonalHamiltonian::Term> terms;
  for (std::uint64_t m : masks) terms.emplace_back(ZTermKey(m), weight(rng));
  return DiagonalHamiltonian(n_qubits, std::move(terms));
}

Corpus bundled_corpus() {
  Corpus c;
  c.functions = closed_form_functions();
  Rng rng(20260101);
  for (int i = 0; i < 50; ++i) {
    const int n = uniform_int(rng, 1, 6);
    c.functions.push_back(
        {"random " + std::to_string(i + 1), random_expression(rng, n, uniform_int(rng, 1, 4)), n});
  }
  Rng qrng(20260202);
  for (int i = 0; i < 20; ++i) c.qubos.push_back(random_qubo(qrng, uniform_int(qrng, 1, 8)));
  return c;
}

}  // namespace boolham
