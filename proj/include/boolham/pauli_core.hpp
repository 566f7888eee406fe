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

#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace boolham {

/** Largest register the sparse algebra supports (one machine word of mask). */
inline constexpr int kMaxSparseQubits = 63;

/** Default magnitude below which coefficients are dropped after every op. */
inline constexpr double kDefaultPruneEpsilon = 1e-12;

/** Current process-wide pruning epsilon. */
double prune_epsilon() noexcept;

/** Override the pruning epsilon; must be finite and non-negative. */
void set_prune_epsilon(double eps);

/**
 * A product of Pauli Z operators, identified by the set of qubits it acts
 * on. Bit q of the mask is qubit q (0-based); in text forms qubit q is
 * printed as Z{q+1}. The empty mask is the identity.
 */
class ZTermKey {
 public:
  constexpr ZTermKey() = default;
  constexpr explicit ZTermKey(std::uint64_t mask) : mask_(mask) {}

  static constexpr ZTermKey single(int qubit) {
    return ZTermKey(std::uint64_t{1} << qubit);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int degree() const { return std::popcount(mask_); }
  constexpr bool is_identity() const { return mask_ == 0; }
  constexpr bool contains(int qubit) const { return (mask_ >> qubit) & 1U; }

  /// Character (-1)^{|S ∩ x|} of this term on basis index x.
  constexpr int character(std::uint64_t x) const {
    return (std::popcount(mask_ & x) & 1) ? -1 : 1;
  }

  /// Z_S Z_T = Z_{S xor T}.
  friend constexpr ZTermKey operator*(ZTermKey a, ZTermKey b) {
    return ZTermKey(a.mask_ ^ b.mask_);
  }
  friend constexpr auto operator<=>(ZTermKey, ZTermKey) = default;

 private:
  std::uint64_t mask_ = 0;
};

/**
 * Real-weighted sum of Z products on a fixed register: the Fourier
 * expansion of a pseudo-Boolean function. Value type; terms are kept sorted
 * by ascending mask and never hold a coefficient below the pruning epsilon,
 * so the zero operator has no terms at all.
 */
class DiagonalHamiltonian {
 public:
  using Term = std::pair<ZTermKey, double>;

  /// Zero operator on `n_qubits` qubits.
  explicit DiagonalHamiltonian(int n_qubits = 0);

  /// Builds from arbitrary (possibly repeated, unsorted) terms; duplicates
  /// are summed and the result pruned.
  DiagonalHamiltonian(int n_qubits, std::vector<Term> terms);

  static DiagonalHamiltonian zero(int n_qubits);
  static DiagonalHamiltonian identity(int n_qubits, double weight = 1.0);
  /// Z on `qubit`.
  static DiagonalHamiltonian z(int n_qubits, int qubit);
  /// The bit projector x_q = (I - Z_q)/2, i.e. |1><1| on `qubit`.
  static DiagonalHamiltonian bit(int n_qubits, int qubit);

  int n_qubits() const { return n_qubits_; }
  std::span<const Term> terms() const { return terms_; }

  /// Coefficient of `key`, 0 when absent.
  double coefficient(ZTermKey key) const;
  double identity_coefficient() const { return coefficient(ZTermKey{}); }

  /// Largest term weight |S|; 0 for the zero operator.
  int degree() const;
  /// Number of stored nonzero terms.
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Eigenvalue on the basis state with integer index `x` (qubit q = bit q).
  double evaluate(std::uint64_t x) const;
  /// Eigenvalue on a bit string whose first character is qubit 0.
  double evaluate(std::string_view bits) const;

  /// Sum of absolute coefficient values; bounds max_x |eval(x)|.
  double one_norm() const;
  /// Sum of squared coefficients.
  double squared_norm() const;
  /// Sum of all coefficients, i.e. the eigenvalue of |0...0>.
  double coefficient_sum() const;

  friend DiagonalHamiltonian operator+(const DiagonalHamiltonian& a,
                                       const DiagonalHamiltonian& b);
  friend DiagonalHamiltonian operator-(const DiagonalHamiltonian& a,
                                       const DiagonalHamiltonian& b);
  friend DiagonalHamiltonian operator*(const DiagonalHamiltonian& a,
                                       const DiagonalHamiltonian& b);
  friend DiagonalHamiltonian operator*(double w, const DiagonalHamiltonian& a);
  friend DiagonalHamiltonian operator*(const DiagonalHamiltonian& a, double w) {
    return w * a;
  }
  DiagonalHamiltonian operator-() const { return -1.0 * *this; }

  friend bool operator==(const DiagonalHamiltonian&,
                         const DiagonalHamiltonian&) = default;

 private:
  int n_qubits_;
  std::vector<Term> terms_;
};

/// Term-for-term comparison: same register and every coefficient within tol.
bool approx_equal(const DiagonalHamiltonian& a, const DiagonalHamiltonian& b,
                  double tol);

/// Largest coefficient difference over the union of both term sets.
double max_coefficient_distance(const DiagonalHamiltonian& a,
                                const DiagonalHamiltonian& b);

/// `low` on qubits [0, low.n) and `high` on the qubits above it.
DiagonalHamiltonian tensor(const DiagonalHamiltonian& low,
                           const DiagonalHamiltonian& high);

/// Same operator on a larger register (identity on the added qubits).
DiagonalHamiltonian widen(const DiagonalHamiltonian& h, int n_qubits);

}  // namespace boolham
