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

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "boolham/boolexpr.hpp"
#include "boolham/circuit.hpp"
#include "boolham/pauli_core.hpp"
#include "boolham/pauli_operator.hpp"

namespace boolham {

// Brute-force 2^n x 2^n realizations used to check every sparse
// construction. Basis index i has qubit q in bit q, so qubit 0 is the least
// significant factor of every Kronecker product.

inline constexpr int kDefaultDenseCap = 12;
inline constexpr int kHardDenseCap = 14;

/** Tolerance used for every dense equality check. */
inline constexpr double kDenseTolerance = 1e-9;

int dense_cap() noexcept;
/// Sets the qubit cap for dense operators; must lie in [1, kHardDenseCap].
void set_dense_cap(int n_qubits);

class DenseOperator {
 public:
  using Matrix = Eigen::MatrixXcd;

  /// Zero matrix.
  explicit DenseOperator(int n_qubits);
  DenseOperator(int n_qubits, Matrix m);

  static DenseOperator identity(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return m_(r, c); }

  DenseOperator adjoint() const;
  Complex trace() const { return m_.trace(); }
  bool is_diagonal(double tol = 0.0) const;
  bool is_hermitian(double tol) const;

  friend DenseOperator operator*(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator+(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator-(const DenseOperator& a, const DenseOperator& b);
  friend DenseOperator operator*(Complex w, const DenseOperator& a);

 private:
  int n_qubits_;
  Matrix m_;
};

/// Diagonal matrix with entries h.evaluate(x).
DenseOperator dense_of_zham(const DiagonalHamiltonian& h);
/// Sum over terms of coefficient times the Kronecker product of 2x2 Paulis.
DenseOperator dense_of_pauli(const PauliOperator& p);

/// Left-multiplies gate matrices in order, then applies e^{i phase}.
DenseOperator simulate_circuit(const Circuit& c);

/// exp(-i t H) entrywise on the diagonal.
DenseOperator exp_diagonal(const DiagonalHamiltonian& h, double t);
/// exp(-i t H) for a Hermitian matrix via its eigendecomposition.
DenseOperator exp_hermitian(const DenseOperator& h, double t);

/// `low` on the lower qubits, `high` above it (matrix kron(high, low)).
DenseOperator tensor(const DenseOperator& low, const DenseOperator& high);

/// `u` acting on the listed qubits of an n-qubit register, in that order
/// (targets[0] is u's qubit 0), applied only when every control is |1>.
DenseOperator place(const DenseOperator& u, std::span<const int> targets,
                    int n_qubits, std::span<const int> controls = {});

/// Block-diagonal Lambda_f(u): control register is the lower k qubits, u acts
/// on the upper ones, and u is applied exactly on control states with f = 1.
DenseOperator dense_controlled(const BoolExpr& f, int n_controls,
                               const DenseOperator& u);

/// Permutation |x>|a> -> |x>|a xor f(x)> with the ancilla as qubit n.
DenseOperator dense_bit_query(const BoolExpr& f, int n_qubits);

/// Single-qubit matrices.
DenseOperator dense_hadamard();
DenseOperator dense_rz(double angle);

/// Largest |a_ij - b_ij|.
double max_entry_distance(const DenseOperator& a, const DenseOperator& b);

/// max_entry_distance after rotating `a` by the phase that aligns its entry
/// at b's largest-magnitude position with b.
double phase_aligned_distance(const DenseOperator& a, const DenseOperator& b);

/** Eigenvalues of a diagonal Hamiltonian, labelled by basis state. */
struct DiagonalSpectrum {
  struct Level {
    double value;
    std::uint64_t basis;
  };

  int n_qubits = 0;
  /// Ascending by value, ties by basis index.
  std::vector<Level> levels;

  double min() const { return levels.front().value; }
  double max() const { return levels.back().value; }
  /// Basis states within tol of the minimum / maximum, ascending.
  std::vector<std::uint64_t> argmin(double tol = 1e-9) const;
  std::vector<std::uint64_t> argmax(double tol = 1e-9) const;
};

/// Exhaustive enumeration; n <= 24.
DiagonalSpectrum spectrum(const DiagonalHamiltonian& h);
/// Ascending eigenvalues of a Hermitian matrix.
std::vector<double> spectrum(const DenseOperator& h);

}  // namespace boolham
