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

#include "boolham/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>

#include "boolham/errors.hpp"
#include "boolham/fourier.hpp"

namespace boolham {

namespace {

std::atomic<int> g_dense_cap{kDefaultDenseCap};

using Matrix = DenseOperator::Matrix;
using Index = Eigen::Index;

void check_dense(int n_qubits) {
  if (n_qubits < 0 || n_qubits > dense_cap()) {
    throw CapExceeded("dense operator on " + std::to_string(n_qubits) +
                      " qubits exceeds the cap of " + std::to_string(dense_cap()));
  }
}

Index dim_of(int n_qubits) { return Index{1} << n_qubits; }

Matrix pauli_matrix(Pauli p) {
  Matrix m(2, 2);
  const Complex i(0, 1);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Rows (i0, i1) differ only in the target bit; every row pair whose
// control bits are all set is mixed by the 2x2 gate.
void apply_2x2(Matrix& m, const Matrix& g, int target, std::uint64_t control_mask) {
  const std::uint64_t tbit = std::uint64_t{1} << target;
  for (Index r = 0; r < m.rows(); ++r) {
    const auto i0 = static_cast<std::uint64_t>(r);
    if ((i0 & tbit) || (i0 & control_mask) != control_mask) continue;
    const Index i1 = static_cast<Index>(i0 | tbit);
    const Eigen::RowVectorXcd row0 = m.row(r);
    const Eigen::RowVectorXcd row1 = m.row(i1);
    m.row(r) = g(0, 0) * row0 + g(0, 1) * row1;
    m.row(i1) = g(1, 0) * row0 + g(1, 1) * row1;
  }
}

}  // namespace

int dense_cap() noexcept { return g_dense_cap.load(); }

void set_dense_cap(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kHardDenseCap) {
    throw std::invalid_argument("dense cap must lie in [1, " +
                                std::to_string(kHardDenseCap) + "]");
  }
  g_dense_cap.store(n_qubits);
}

DenseOperator::DenseOperator(int n_qubits)
    : n_qubits_(n_qubits), m_((check_dense(n_qubits), Matrix::Zero(dim_of(n_qubits), dim_of(n_qubits)))) {}

DenseOperator::DenseOperator(int n_qubits, Matrix m) : n_qubits_(n_qubits), m_(std::move(m)) {
  check_dense(n_qubits);
  if (m_.rows() != dim_of(n_qubits) || m_.cols() != dim_of(n_qubits)) {
    throw DimensionMismatch("dense matrix is not 2^n x 2^n");
  }
}

DenseOperator DenseOperator::identity(int n_qubits) {
  check_dense(n_qubits);
  return DenseOperator(n_qubits, Matrix::Identity(dim_of(n_qubits), dim_of(n_qubits)));
}

DenseOperator DenseOperator::adjoint() const { return DenseOperator(n_qubits_, m_.adjoint()); }

bool DenseOperator::is_diagonal(double tol) const {
  for (Index c = 0; c < m_.cols(); ++c) {
    for (Index r = 0; r < m_.rows(); ++r) {
      if (r != c && std::abs(m_(r, c)) > tol) return false;
    }
  }
  return true;
}

bool DenseOperator::is_hermitian(double tol) const {
  return (m_ - m_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

DenseOperator operator*(const DenseOperator& a, const DenseOperator& b) {
  if (a.n_qubits_ != b.n_qubits_) throw DimensionMismatch("dense product");
  return DenseOperator(a.n_qubits_, a.m_ * b.m_);
}

DenseOperator operator+(const DenseOperator& a, const DenseOperator& b) {
  if (a.n_qubits_ != b.n_qubits_) throw DimensionMismatch("dense sum");
  return DenseOperator(a.n_qubits_, a.m_ + b.m_);
}

DenseOperator operator-(const DenseOperator& a, const DenseOperator& b) {
  if (a.n_qubits_ != b.n_qubits_) throw DimensionMismatch("dense difference");
  return DenseOperator(a.n_qubits_, a.m_ - b.m_);
}

DenseOperator operator*(Complex w, const DenseOperator& a) {
  return DenseOperator(a.n_qubits_, w * a.m_);
}

DenseOperator dense_of_zham(const DiagonalHamiltonian& h) {
  check_dense(h.n_qubits());
  const Index dim = dim_of(h.n_qubits());
  Eigen::VectorXcd diag(dim);
  for (Index x = 0; x < dim; ++x) diag(x) = h.evaluate(static_cast<std::uint64_t>(x));
  return DenseOperator(h.n_qubits(), diag.asDiagonal().toDenseMatrix());
}

DenseOperator dense_of_pauli(const PauliOperator& p) {
  const int n = p.n_qubits();
  check_dense(n);
  Matrix total = Matrix::Zero(dim_of(n), dim_of(n));
  for (const auto& [s, c] : p.terms()) {
    Matrix m = Matrix::Identity(1, 1);
    for (int q = n - 1; q >= 0; --q) m = kron(m, pauli_matrix(s.at(q)));
    total += c * s.phase_factor() * m;
  }
  return DenseOperator(n, std::move(total));
}

DenseOperator dense_hadamard() {
  Matrix m(2, 2);
  const double r = 1.0 / std::numbers::sqrt2;
  m << r, r, r, -r;
  return DenseOperator(1, m);
}

DenseOperator dense_rz(double angle) {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = std::polar(1.0, -angle / 2);
  m(1, 1) = std::polar(1.0, angle / 2);
  return DenseOperator(1, m);
}

DenseOperator simulate_circuit(const Circuit& c) {
  check_dense(c.n_qubits());
  Matrix m = Matrix::Identity(dim_of(c.n_qubits()), dim_of(c.n_qubits()));
  const Matrix x = pauli_matrix(Pauli::X);
  for (const Gate& g : c.gates()) {
    const auto bit = [](int q) { return std::uint64_t{1} << q; };
    switch (g.kind) {
      case GateKind::kCnot: apply_2x2(m, x, g.qubits[1], bit(g.qubits[0])); break;
      case GateKind::kX: apply_2x2(m, x, g.qubits[0], 0); break;
      case GateKind::kH: apply_2x2(m, dense_hadamard().matrix(), g.qubits[0], 0); break;
      case GateKind::kRz: apply_2x2(m, dense_rz(g.angle).matrix(), g.qubits[0], 0); break;
      case GateKind::kCrz:
        apply_2x2(m, dense_rz(g.angle).matrix(), g.qubits[1], bit(g.qubits[0]));
        break;
      case GateKind::kCcrz:
        apply_2x2(m, dense_rz(g.angle).matrix(), g.qubits[2],
                  bit(g.qubits[0]) | bit(g.qubits[1]));
        break;
    }
  }
  return DenseOperator(c.n_qubits(), std::polar(1.0, c.global_phase()) * m);
}

DenseOperator exp_diagonal(const DiagonalHamiltonian& h, double t) {
  check_dense(h.n_qubits());
  const Index dim = dim_of(h.n_qubits());
  Matrix m = Matrix::Zero(dim, dim);
  for (Index x = 0; x < dim; ++x) {
    m(x, x) = std::polar(1.0, -t * h.evaluate(static_cast<std::uint64_t>(x)));
  }
  return DenseOperator(h.n_qubits(), std::move(m));
}

DenseOperator exp_hermitian(const DenseOperator& h, double t) {
  if (!h.is_hermitian(1e-12 * std::max(1.0, h.matrix().cwiseAbs().maxCoeff()))) {
    throw std::invalid_argument("exp_hermitian needs a Hermitian matrix");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h.matrix());
  if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  Eigen::VectorXcd phases(eig.eigenvalues().size());
  for (Index k = 0; k < phases.size(); ++k) phases(k) = std::polar(1.0, -t * eig.eigenvalues()(k));
  const Matrix& v = eig.eigenvectors();
  return DenseOperator(h.n_qubits(), v * phases.asDiagonal() * v.adjoint());
}

DenseOperator tensor(const DenseOperator& low, const DenseOperator& high) {
  const int n = low.n_qubits() + high.n_qubits();
  check_dense(n);
  return DenseOperator(n, kron(high.matrix(), low.matrix()));
}

DenseOperator place(const DenseOperator& u, std::span<const int> targets, int n_qubits,
                    std::span<const int> controls) {
  check_dense(n_qubits);
  if (static_cast<int>(targets.size()) != u.n_qubits()) {
    throw DimensionMismatch("target list length differs from the operator's qubit count");
  }
  std::uint64_t target_mask = 0, control_mask = 0;
  for (int q : targets) {
    if (q < 0 || q >= n_qubits || ((target_mask >> q) & 1U)) {
      throw std::invalid_argument("bad target qubit");
    }
    target_mask |= std::uint64_t{1} << q;
  }
  for (int q : controls) {
    if (q < 0 || q >= n_qubits || ((target_mask >> q) & 1U)) {
      throw std::invalid_argument("bad control qubit");
    }
    control_mask |= std::uint64_t{1} << q;
  }
  const auto sub_index = [&](std::uint64_t full) {
    Index s = 0;
    for (std::size_t k = 0; k < targets.size(); ++k) {
      if ((full >> targets[k]) & 1U) s |= Index{1} << k;
    }
    return s;
  };
  const auto with_sub = [&](std::uint64_t full, Index s) {
    std::uint64_t out = full & ~target_mask;
    for (std::size_t k = 0; k < targets.size(); ++k) {
      if ((s >> k) & 1) out |= std::uint64_t{1} << targets[k];
    }
    return static_cast<Index>(out);
  };
  const Index dim = dim_of(n_qubits);
  Matrix m = Matrix::Zero(dim, dim);
  for (Index col = 0; col < dim; ++col) {
    const auto c = static_cast<std::uint64_t>(col);
    if ((c & control_mask) != control_mask) {
      m(col, col) = 1.0;
      continue;
    }
    const Index sc = sub_index(c);
    for (Index sr = 0; sr < u.dim(); ++sr) m(with_sub(c, sr), col) = u(sr, sc);
  }
  return DenseOperator(n_qubits, std::move(m));
}

DenseOperator dense_controlled(const BoolExpr& f, int n_controls, const DenseOperator& u) {
  if (f.max_var() > n_controls) {
    throw std::invalid_argument("control function uses more variables than controls");
  }
  const int n = n_controls + u.n_qubits();
  check_dense(n);
  const Index block = u.dim();
  const Index dim = dim_of(n);
  Matrix m = Matrix::Zero(dim, dim);
  const Index n_ctrl_states = dim_of(n_controls);
  // Index = y + 2^k * x, so fixing y selects a strided sub-block.
  for (Index y = 0; y < n_ctrl_states; ++y) {
    const bool fire = f.evaluate(static_cast<std::uint64_t>(y));
    for (Index r = 0; r < block; ++r) {
      for (Index c = 0; c < block; ++c) {
        const Complex v = fire ? u(r, c) : (r == c ? Complex(1.0) : Complex(0.0));
        m(y + n_ctrl_states * r, y + n_ctrl_states * c) = v;
      }
    }
  }
  return DenseOperator(n, std::move(m));
}

DenseOperator dense_bit_query(const BoolExpr& f, int n_qubits) {
  if (f.max_var() > n_qubits) throw std::invalid_argument("function uses more variables than qubits");
  check_dense(n_qubits + 1);
  const Index half = dim_of(n_qubits);
  Matrix m = Matrix::Zero(2 * half, 2 * half);
  for (Index x = 0; x < half; ++x) {
    const Index fx = f.evaluate(static_cast<std::uint64_t>(x)) ? 1 : 0;
    for (Index a = 0; a < 2; ++a) m(x + half * (a ^ fx), x + half * a) = 1.0;
  }
  return DenseOperator(n_qubits + 1, std::move(m));
}

double max_entry_distance(const DenseOperator& a, const DenseOperator& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionMismatch("dense comparison");
  return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

double phase_aligned_distance(const DenseOperator& a, const DenseOperator& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionMismatch("dense comparison");
  Index r = 0, c = 0;
  b.matrix().cwiseAbs().maxCoeff(&r, &c);
  const Complex ra = a(r, c);
  const Complex rb = b(r, c);
  Complex rotation = 1.0;
  if (std::abs(ra) > 0.0 && std::abs(rb) > 0.0) {
    rotation = (rb / std::abs(rb)) / (ra / std::abs(ra));
  }
  return (rotation * a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

std::vector<std::uint64_t> DiagonalSpectrum::argmin(double tol) const {
  std::vector<std::uint64_t> out;
  for (const Level& l : levels) {
    if (l.value <= min() + tol) out.push_back(l.basis);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> DiagonalSpectrum::argmax(double tol) const {
  std::vector<std::uint64_t> out;
  for (const Level& l : levels) {
    if (l.value >= max() - tol) out.push_back(l.basis);
  }
  std::sort(out.begin(), out.end());
  return out;
}

DiagonalSpectrum spectrum(const DiagonalHamiltonian& h) {
  if (h.n_qubits() > kMaxTableVars) {
    throw CapExceeded("diagonal spectrum limited to " + std::to_string(kMaxTableVars) +
                      " qubits");
  }
  DiagonalSpectrum s;
  s.n_qubits = h.n_qubits();
  const TruthTable values = table_from_fourier(h);
  s.levels.reserve(values.values().size());
  for (std::uint64_t x = 0; x < values.values().size(); ++x) s.levels.push_back({values[x], x});
  std::sort(s.levels.begin(), s.levels.end(), [](const auto& a, const auto& b) {
    return a.value != b.value ? a.value < b.value : a.basis < b.basis;
  });
  return s;
}

std::vector<double> spectrum(const DenseOperator& h) {
  if (!h.is_hermitian(1e-9)) throw std::invalid_argument("spectrum needs a Hermitian matrix");
  Eigen::SelfAdjointEigenSolver<Matrix> eig(h.matrix(), Eigen::EigenvaluesOnly);
  const auto& ev = eig.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

}  // namespace boolham
