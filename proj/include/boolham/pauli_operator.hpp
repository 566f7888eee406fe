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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "boolham/pauli_core.hpp"

namespace boolham {

using Complex = std::complex<double>;

/** Symbols for single-qubit Paulis. */
enum class Pauli { I, X, Y, Z };

/**
 * Tensor product of single-qubit Paulis times a power of i.
 *
 * A qubit set in both masks carries Y (the Hermitian Y, not XZ); in x only,
 * X; in z only, Z. The phase exponent k makes the string i^k * P, so
 * products of strings stay exact.
 */
class PauliString {
 public:
  PauliString() = default;
  PauliString(int n_qubits, std::uint64_t x_mask, std::uint64_t z_mask,
              int phase = 0);

  /// Identity string on `n_qubits`.
  static PauliString identity(int n_qubits);
  /// A single Pauli letter on one qubit.
  static PauliString single(int n_qubits, int qubit, Pauli p);
  /// Parses "X1 Y3", "X1Y3" or "I"; qubits are 1-based in text.
  static PauliString parse(std::string_view text, int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::uint64_t x_mask() const { return x_; }
  std::uint64_t z_mask() const { return z_; }
  /// Exponent k of the i^k prefactor, in [0, 4).
  int phase() const { return phase_; }

  Pauli at(int qubit) const;
  bool is_diagonal() const { return x_ == 0; }
  int weight() const;
  /// Same letters with the phase dropped.
  PauliString canonical() const { return {n_qubits_, x_, z_, 0}; }
  Complex phase_factor() const;

  /// Letters only, space separated, e.g. "X1 Z3"; identity is "I".
  std::string to_string() const;

  friend PauliString operator*(const PauliString& a, const PauliString& b);
  friend bool operator==(const PauliString&, const PauliString&) = default;

  /// Ordering of canonical strings: diagonal strings first, by mask.
  friend bool canonical_less(const PauliString& a, const PauliString& b) {
    return a.x_ != b.x_ ? a.x_ < b.x_ : a.z_ < b.z_;
  }

  /// True when the strings anticommute.
  friend bool anticommutes(const PauliString& a, const PauliString& b);

 private:
  int n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
  int phase_ = 0;
};

/**
 * Complex-weighted sum of canonical Pauli strings. Terms are sorted with
 * `canonical_less` and pruned like DiagonalHamiltonian.
 */
class PauliOperator {
 public:
  using Term = std::pair<PauliString, Complex>;

  explicit PauliOperator(int n_qubits = 0);
  /// Strings may carry phases and repeat; both are folded in.
  PauliOperator(int n_qubits, std::vector<Term> terms);

  static PauliOperator identity(int n_qubits, Complex weight = 1.0);
  static PauliOperator from_string(const PauliString& s, Complex weight = 1.0);
  static PauliOperator from_diagonal(const DiagonalHamiltonian& h);

  int n_qubits() const { return n_qubits_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of the canonical form of `s`, with the phase of `s`
  /// divided out so that coefficient(s) * s is the stored term.
  Complex coefficient(const PauliString& s) const;

  PauliOperator adjoint() const;
  bool is_hermitian(double tol = 0.0) const;
  bool is_diagonal() const;
  /// Diagonal, real operator as a DiagonalHamiltonian; throws otherwise.
  DiagonalHamiltonian to_diagonal(double tol = 0.0) const;

  friend PauliOperator operator+(const PauliOperator& a, const PauliOperator& b);
  friend PauliOperator operator-(const PauliOperator& a, const PauliOperator& b);
  friend PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);
  friend PauliOperator operator*(Complex w, const PauliOperator& a);
  friend PauliOperator operator*(const PauliOperator& a, Complex w) {
    return w * a;
  }
  PauliOperator operator-() const { return Complex(-1.0) * *this; }

  friend bool operator==(const PauliOperator&, const PauliOperator&) = default;

 private:
  int n_qubits_;
  std::vector<Term> terms_;
};

/// ab + ba.
PauliOperator anticommutator(const PauliOperator& a, const PauliOperator& b);
/// ab - ba.
PauliOperator commutator(const PauliOperator& a, const PauliOperator& b);

/// Largest coefficient difference over the union of both term sets.
double max_coefficient_distance(const PauliOperator& a, const PauliOperator& b);

/// `low` on qubits [0, low.n) and `high` shifted above it.
PauliOperator tensor(const PauliOperator& low, const PauliOperator& high);

/// Spin annihilation b = |0><1| = (X + iY)/2 on `qubit` (0-based).
PauliOperator spin_lowering(int n_qubits, int qubit);
/// Spin creation b^dagger = |1><0| = (X - iY)/2 on `qubit` (0-based).
PauliOperator spin_raising(int n_qubits, int qubit);

enum class Ladder { kLowering, kRaising };

/// Fermionic a_j (lowering) or a_j^dagger (raising) on mode `mode`
/// (0-based): Z on every lower qubit times the spin operator on `mode`.
PauliOperator jordan_wigner(int n_qubits, int mode, Ladder kind);

}  // namespace boolham
