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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolham/boolexpr.hpp"
#include "boolham/pauli_core.hpp"

namespace boolham {

/** Function values on all 2^n inputs, indexed by x with x1 the LSB. */
class TruthTable {
 public:
  TruthTable(int n_vars, std::vector<double> values);

  static TruthTable of(const BoolExpr& e, int n_vars);
  /// "0111": character i is the value on input i.
  static TruthTable parse_bits(std::string_view bits);
  /// JSON array of reals whose length is a power of two.
  static TruthTable parse_json(std::string_view json);

  int n_vars() const { return n_vars_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::uint64_t x) const { return values_[x]; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  int n_vars_;
  std::vector<double> values_;
};

/**
 * In-place unnormalized Walsh-Hadamard transform:
 *   out[S] = sum_x in[x] (-1)^{popcount(S & x)}.
 * Applying it twice multiplies by the length. Length must be a power of two.
 */
void walsh_hadamard(std::span<double> data);

/// Fourier coefficients f^(S) = 2^-n sum_x f(x) (-1)^{S.x}, pruned.
DiagonalHamiltonian fourier_from_table(const TruthTable& t);

/// Eigenvalues of a diagonal Hamiltonian on every basis state.
TruthTable table_from_fourier(const DiagonalHamiltonian& h);

/// Number of satisfying inputs, round(f^(empty) * 2^n). Throws NotBoolean
/// unless h * h equals h within 1e-6.
std::uint64_t count_models(const DiagonalHamiltonian& h);

/** Outcome of checking an approximating Hamiltonian in the max norm. */
struct ApproxReport {
  double max_error = 0.0;
  /// max_error <= 1/3 + 1e-12.
  bool ok = false;
  /// Basis index where the error peaks (first one on ties).
  std::uint64_t worst_input = 0;

  /// One line, e.g. "max_error 0.333333333333 at x=10 <= 1/3: ok".
  std::string describe(int n_vars) const;
};

ApproxReport check_approx(const DiagonalHamiltonian& approx, const BoolExpr& f);

/// x as a bit string with x1 first.
std::string basis_label(std::uint64_t x, int n_bits);

}  // namespace boolham
