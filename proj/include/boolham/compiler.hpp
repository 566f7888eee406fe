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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "boolham/boolexpr.hpp"
#include "boolham/pauli_core.hpp"

namespace boolham {

struct CompileOptions {
  /// Abort with CapExceeded once any intermediate exceeds this many terms.
  std::size_t max_terms = 1'000'000;
};

/**
 * Compiles a formula into the diagonal Hamiltonian representing it on an
 * n-qubit register (variable x_j on qubit j-1).
 *
 * Works directly on sparse Z-polynomials with the composition rules
 *   !f -> I - H_f,          f & g -> H_f H_g,
 *   f | g -> H_f + H_g - H_f H_g,
 *   f ^ g -> H_f + H_g - 2 H_f H_g,
 *   f => g -> I - H_f + H_f H_g,
 * and base cases 0 -> 0, 1 -> I, x_j -> (I - Z_j)/2.
 */
DiagonalHamiltonian compile(const BoolExpr& e, int n_qubits,
                            const CompileOptions& options = {});

/// sum_j w_j H_{f_j} over the objective's clauses.
DiagonalHamiltonian compile_pseudo(const PseudoBooleanObjective& objective,
                                   int n_qubits,
                                   const CompileOptions& options = {});

/**
 * f(x) = a + sum_j c_j x_j + sum_{j<k} d_jk x_j x_k.
 * Indices are 0-based here; the JSON form uses 1-based variables.
 */
class QuboInstance {
 public:
  /// `quadratic` is the full n x n matrix; it must be symmetric with a zero
  /// diagonal.
  QuboInstance(int n_vars, double constant, std::vector<double> linear,
               std::vector<std::vector<double>> quadratic);

  /// Empty quadratic part.
  QuboInstance(int n_vars, double constant, std::vector<double> linear);

  int n_vars() const { return n_vars_; }
  double constant() const { return constant_; }
  double linear(int j) const { return linear_.at(j); }
  double quadratic(int j, int k) const { return quadratic_.at(j).at(k); }

  double evaluate(std::uint64_t x) const;

  /// The same polynomial as weighted clauses: a*1, c_j*x_j, d_jk*(x_j & x_k).
  PseudoBooleanObjective as_objective() const;

 private:
  int n_vars_;
  double constant_;
  std::vector<double> linear_;
  std::vector<std::vector<double>> quadratic_;
};

/**
 * Closed form H = (a + c + d) I - 1/2 sum_j (c_j + d_j) Z_j
 *               + 1/4 sum_{j<k} d_jk Z_j Z_k
 * with c = 1/2 sum c_j, d = 1/4 sum_{j<k} d_jk, d_j = 1/2 sum_{k!=j} d_jk.
 */
DiagonalHamiltonian compile_qubo(const QuboInstance& q);

/** Objective plus weighted infeasibility indicators. */
struct PenaltySpec {
  struct Penalty {
    /// nullopt selects auto_penalty_weight(objective).
    std::optional<double> weight;
    /// g(x) = 1 marks x infeasible.
    BoolExpr constraint;
  };

  DiagonalHamiltonian objective;
  std::vector<Penalty> penalties;
};

/// 2 * ||H_f||_1 + 1, where ||.||_1 is the coefficient 1-norm, an upper bound
/// on max_x |f(x)|. With it every infeasible eigenvalue exceeds every
/// feasible one.
double auto_penalty_weight(const DiagonalHamiltonian& objective);

/// H_p = H_f + sum_j w_j H_{g_j}. Throws std::invalid_argument on a weight
/// that is not strictly positive.
DiagonalHamiltonian augment_penalties(const PenaltySpec& spec,
                                      const CompileOptions& options = {});

/**
 * H_g = I (x) x_a + H_f (x) Z_a on n+1 qubits, ancilla a on the highest
 * qubit. Its zero eigenspace is span{|x>|f(x)>}; every other basis state
 * has eigenvalue 1 when f is Boolean.
 */
DiagonalHamiltonian ground_state_logic(const BoolExpr& f, int n_qubits,
                                       const CompileOptions& options = {});

}  // namespace boolham
