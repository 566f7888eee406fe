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

#include <string>
#include <string_view>

#include "boolham/compiler.hpp"
#include "boolham/pauli_core.hpp"
#include "boolham/pauli_operator.hpp"

namespace boolham {

// External formats. Qubits and variables are 1-based in every text and
// JSON form; coefficients in text forms carry 12 significant digits.

/// "0.75 I - 0.25 Z1 - 0.25 Z2 - 0.25 Z1Z2"; the zero operator is "0".
std::string to_text(const DiagonalHamiltonian& h);
/// Same layout; imaginary coefficients print as "0.5i", general complex
/// ones as "(a+bi)".
std::string to_text(const PauliOperator& p);

/// {"n": N, "terms": [{"paulis": "Z1 Z3", "coeff": c}, ...]}, terms in
/// ascending mask order. Doubles are written round-trip exact.
std::string to_json(const DiagonalHamiltonian& h);
/// Complex coefficients are written as [re, im]; real ones as a number.
std::string to_json(const PauliOperator& p);

/// Inverse of to_json; repeated strings are summed. Throws ParseError on
/// malformed input, including X or Y letters for the diagonal reader.
DiagonalHamiltonian parse_hamiltonian_json(std::string_view json);
PauliOperator parse_pauli_json(std::string_view json);

/// {"n": N, "a": a, "linear": [c_1..c_N], "quadratic": [[j, k, d_jk], ...]}
/// with j != k; a pair listed twice is summed, missing entries are zero.
QuboInstance parse_qubo_json(std::string_view json);
std::string to_json(const QuboInstance& q);

/**
 * {"n": N,
 *  "objective": [{"weight": w, "expr": "x1 & x2"}, ...],
 *  "penalties": [{"constraint": "x1 ^ x2", "weight": w}, ...]}
 * A constraint is 1 on infeasible inputs; an omitted weight is chosen
 * automatically. "objective" defaults to the zero function.
 */
PenaltySpec parse_penalty_json(std::string_view json);

}  // namespace boolham
