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

// Reference implementations used only by tests. Each one recomputes a
// library result by a different route: direct character sums instead of
// the fast transform, explicit Kronecker products instead of bit tricks,
// Pade matrix exponentials instead of eigendecompositions.

#include <Eigen/Dense>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "boolham/boolexpr.hpp"
#include "boolham/pauli_core.hpp"
#include "boolham/pauli_operator.hpp"

namespace oracle {

using Matrix = Eigen::MatrixXcd;
using Cx = std::complex<double>;
using Function = std::function<double(std::uint64_t)>;

/// f^(S) = 2^-n sum_x f(x) (-1)^{|S & x|}, by direct O(4^n) summation.
inline std::map<std::uint64_t, double> fourier(const Function& f, int n) {
  std::map<std::uint64_t, double> out;
  const std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t s = 0; s < size; ++s) {
    double acc = 0.0;
    for (std::uint64_t x = 0; x < size; ++x) {
      acc += (std::popcount(s & x) % 2 ? -1.0 : 1.0) * f(x);
    }
    acc /= static_cast<double>(size);
    if (std::abs(acc) > 1e-12) out[s] = acc;
  }
  return out;
}

/// Largest coefficient difference between a Hamiltonian and a reference map.
inline double distance(const boolham::DiagonalHamiltonian& h,
                       const std::map<std::uint64_t, double>& ref) {
  double worst = 0.0;
  for (const auto& [key, w] : h.terms()) {
    const auto it = ref.find(key.mask());
    worst = std::max(worst, std::abs(w - (it == ref.end() ? 0.0 : it->second)));
  }
  for (const auto& [mask, w] : ref) {
    worst = std::max(worst, std::abs(w - h.coefficient(boolham::ZTermKey(mask))));
  }
  return worst;
}

inline std::uint64_t count(const boolham::BoolExpr& f, int n) {
  std::uint64_t c = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) c += f.evaluate(x);
  return c;
}

inline Matrix pauli(char p) {
  Matrix m(2, 2);
  const Cx i(0, 1);
  switch (p) {
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, -i, i, 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

/// letters[q] acts on qubit q; qubit 0 is the least significant index bit,
/// so it is the rightmost Kronecker factor.
inline Matrix pauli_string(const std::string& letters) {
  Matrix out = Matrix::Identity(1, 1);
  for (char c : letters) out = kron(pauli(c), out);
  return out;
}

/// Sum of coefficient times Kronecker product, one string per term.
inline Matrix dense(const boolham::PauliOperator& p) {
  const int n = p.n_qubits();
  Matrix out = Matrix::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  for (const auto& [s, c] : p.terms()) {
    std::string letters;
    for (int q = 0; q < n; ++q) letters += "IXYZ"[static_cast<int>(s.at(q))];
    out += c * pauli_string(letters);
  }
  return out;
}

inline Matrix diagonal(const Function& f, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) out(x, x) = f(static_cast<std::uint64_t>(x));
  return out;
}

/// exp(-i t H) through Eigen's Pade scaling-and-squaring.
inline Matrix expm(const Matrix& h, double t) {
  const Matrix a = Cx(0, -t) * h;
  return a.exp();
}

/// Basis permutation |x> -> |perm(x)>.
inline Matrix permutation(int n, const std::function<std::uint64_t(std::uint64_t)>& perm) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix out = Matrix::Zero(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) out(static_cast<Eigen::Index>(perm(x)), x) = 1.0;
  return out;
}

inline double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

/// max |a - e^{i phi} b| with phi aligning the largest entry of b.
inline double up_to_phase(const Matrix& a, const Matrix& b) {
  Eigen::Index r = 0, c = 0;
  b.cwiseAbs().maxCoeff(&r, &c);
  const Cx phase = a(r, c) / b(r, c);
  return max_abs(a - (phase / std::abs(phase)) * b);
}

}  // namespace oracle

#include "boolham/circuit.hpp"

namespace oracle {

inline Matrix rz(double theta) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::polar(1.0, -theta / 2);
  m(1, 1) = std::polar(1.0, theta / 2);
  return m;
}

inline Matrix hadamard() {
  Matrix m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

/// Full-register matrix of `u` on `target`, fired when every control is 1:
/// sum over control patterns of projector products, built factor by factor.
inline Matrix controlled(int n, const std::vector<int>& controls, int target, const Matrix& u) {
  Matrix p0 = Matrix::Zero(2, 2), p1 = Matrix::Zero(2, 2);
  p0(0, 0) = 1;
  p1(1, 1) = 1;
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix out = Matrix::Zero(dim, dim);
  const std::size_t patterns = std::size_t{1} << controls.size();
  for (std::size_t pat = 0; pat < patterns; ++pat) {
    const bool fire = pat == patterns - 1;
    Matrix term = Matrix::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
      Matrix factor = Matrix::Identity(2, 2);
      for (std::size_t c = 0; c < controls.size(); ++c) {
        if (controls[c] == q) factor = (pat >> c) & 1 ? p1 : p0;
      }
      if (q == target && fire) factor = u;
      term = kron(factor, term);
    }
    out += term;
  }
  return out;
}

inline Matrix unitary(const boolham::Circuit& c) {
  const int n = c.n_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix u = Matrix::Identity(dim, dim);
  for (const boolham::Gate& g : c.gates()) {
    const auto& q = g.qubits;
    Matrix m;
    switch (g.kind) {
      case boolham::GateKind::kCnot: m = controlled(n, {q[0]}, q[1], pauli('X')); break;
      case boolham::GateKind::kRz: m = controlled(n, {}, q[0], rz(g.angle)); break;
      case boolham::GateKind::kH: m = controlled(n, {}, q[0], hadamard()); break;
      case boolham::GateKind::kX: m = controlled(n, {}, q[0], pauli('X')); break;
      case boolham::GateKind::kCrz: m = controlled(n, {q[0]}, q[1], rz(g.angle)); break;
      case boolham::GateKind::kCcrz: m = controlled(n, {q[0], q[1]}, q[2], rz(g.angle)); break;
    }
    u = m * u;
  }
  return std::polar(1.0, c.global_phase()) * u;
}

}  // namespace oracle
