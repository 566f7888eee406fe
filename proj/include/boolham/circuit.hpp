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

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolham/boolexpr.hpp"
#include "boolham/compiler.hpp"
#include "boolham/pauli_core.hpp"

namespace boolham {

enum class GateKind { kCnot, kRz, kH, kX, kCrz, kCcrz };

/**
 * One gate of the IR. Qubits are 0-based; controls come first, the target
 * last. RZ(theta) = exp(-i theta Z / 2); CRZ and CCRZ apply it when every
 * control is |1>.
 */
struct Gate {
  GateKind kind;
  std::array<int, 3> qubits{};
  double angle = 0.0;

  static Gate cnot(int control, int target) { return {GateKind::kCnot, {control, target, 0}, 0.0}; }
  static Gate rz(int qubit, double angle) { return {GateKind::kRz, {qubit, 0, 0}, angle}; }
  static Gate h(int qubit) { return {GateKind::kH, {qubit, 0, 0}, 0.0}; }
  static Gate x(int qubit) { return {GateKind::kX, {qubit, 0, 0}, 0.0}; }
  static Gate crz(int control, int target, double angle) {
    return {GateKind::kCrz, {control, target, 0}, angle};
  }
  static Gate ccrz(int c1, int c2, int target, double angle) {
    return {GateKind::kCcrz, {c1, c2, target}, angle};
  }

  /// Number of qubits the gate acts on.
  int arity() const;
  std::span<const int> operands() const { return {qubits.data(), static_cast<std::size_t>(arity())}; }
  bool has_angle() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/**
 * Ordered gate list plus a global phase: the circuit's unitary is
 * e^{i * global_phase} * G_last ... G_first.
 */
class Circuit {
 public:
  explicit Circuit(int n_qubits = 0, double global_phase = 0.0);

  int n_qubits() const { return n_qubits_; }
  double global_phase() const { return global_phase_; }
  std::span<const Gate> gates() const { return gates_; }

  /// Validates operands (in range, pairwise distinct) and appends.
  Circuit& add(const Gate& g);
  Circuit& add_phase(double radians);
  /// Appends another circuit on the same register, phases included.
  Circuit& append(const Circuit& other);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int n_qubits_;
  double global_phase_;
  std::vector<Gate> gates_;
};

struct GateCounts {
  std::size_t cnot = 0;
  std::size_t rz = 0;
  std::size_t h = 0;
  std::size_t x = 0;
  std::size_t crz = 0;
  std::size_t ccrz = 0;

  std::size_t total() const { return cnot + rz + h + x + crz + ccrz; }
};

GateCounts count_gates(const Circuit& c);

/**
 * exp(-i gamma H) for a diagonal H, one block per term in ascending mask
 * order: the identity term becomes global phase -gamma*w, a single Z_q
 * becomes RZ(q, 2 gamma w), and a product over S becomes a CNOT ladder up
 * the ascending qubits of S, RZ(max S, 2 gamma w), and the ladder reversed.
 */
Circuit emit_evolution(const DiagonalHamiltonian& h, double gamma);

struct QuboEvolution {
  Circuit circuit;
  /// Single-qubit RZ blocks (linear terms).
  std::size_t rz_blocks = 0;
  /// RZZ blocks (quadratic terms), each two CNOTs and one RZ.
  std::size_t rzz_blocks = 0;
};

/// exp(-i t H_qubo) via the closed-form Hamiltonian.
QuboEvolution emit_qubo_evolution(const QuboInstance& q, double t);

/**
 * Bit query |x>|a> -> |x>|a xor f(x)> on n+1 qubits (ancilla highest):
 * H on the ancilla, exp(-i pi H_f (x) x_a), H on the ancilla.
 */
Circuit emit_bit_query(const BoolExpr& f, int n_qubits);

/**
 * exp(-i t H_f (x) h): applies exp(-i t h) on the upper n qubits exactly
 * when f holds on the lower k control qubits.
 */
Circuit emit_controlled_evolution(const BoolExpr& f, int n_controls,
                                  const DiagonalHamiltonian& h, double t);

/// Rewrites CRZ and CCRZ into CNOT and RZ gates; other gates are kept.
Circuit lower_controlled_rotations(const Circuit& c);

/**
 * Line format:
 *   qubits N
 *   phase <radians>
 *   cx 1 2 | rz 3 <angle> | h 4 | x 1 | crz 1 2 <angle> | ccrz 1 2 3 <angle>
 * Qubits are 1-based, angles and phase print with 15 significant digits.
 */
std::string serialize(const Circuit& c);
Circuit parse_circuit(std::string_view text);

}  // namespace boolham
