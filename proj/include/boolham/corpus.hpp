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
#include <random>
#include <string>
#include <vector>

#include "boolham/boolexpr.hpp"
#include "boolham/compiler.hpp"
#include "boolham/pauli_core.hpp"

namespace boolham {

using Rng = std::mt19937_64;

/** A named Boolean function on a fixed register. */
struct CorpusFunction {
  std::string name;
  BoolExpr expr;
  int n_vars;
};

/// Functions with closed-form Hamiltonians: single bits, parities,
/// AND/OR/NAND/implication on two and k bits, MAJ, NAE, MOD3, 1in3.
std::vector<CorpusFunction> closed_form_functions();

/// Random formula over x1..x{n_vars} of the given depth. Leaves are
/// variables (occasionally negated) or constants.
BoolExpr random_expression(Rng& rng, int n_vars, int depth);

/// Conjunction of `n_clauses` clauses, each of `width` distinct literals.
BoolExpr random_cnf(Rng& rng, int n_vars, int n_clauses, int width);

/// Integer-valued coefficients in [-5, 5], all pairs present with
/// probability 1/2.
QuboInstance random_qubo(Rng& rng, int n_vars);

/// `n_clauses` unit-weight 2-literal clauses on distinct variables.
PseudoBooleanObjective random_max2sat(Rng& rng, int n_vars, int n_clauses);

/// `size` distinct random masks with coefficients in [-1, 1].
DiagonalHamiltonian random_hamiltonian(Rng& rng, int n_qubits, int size);

/**
 * The fixed bundle checked by `verify`: every closed-form function, 50
 * random expressions and 20 random QUBOs, generated from fixed seeds.
 */
struct Corpus {
  std::vector<CorpusFunction> functions;
  std::vector<QuboInstance> qubos;
};

Corpus bundled_corpus();

}  // namespace boolham
