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


#include <gtest/gtest.h>

#include <numbers>

#include "boolham/compiler.hpp"
#include "boolham/corpus.hpp"
#include "boolham/errors.hpp"
#include "boolham/fourier.hpp"
#include "boolham/kickback.hpp"
#include "boolham/oracle.hpp"
#include "oracles.hpp"

namespace boolham {
namespace {

using std::numbers::pi;

BoolExpr x(int j) { return BoolExpr::var(j); }

double gap(const DenseOperator& a, const oracle::Matrix& b) { return oracle::max_abs(a.matrix() - b); }

class CapGuard {
 public:
  CapGuard() : saved_(dense_cap()) {}
  ~CapGuard() { set_dense_cap(saved_); }

 private:
  int saved_;
};

TEST(DenseOfZham, SingleBit) {
  EXPECT_LE(gap(dense_of_zham(DiagonalHamiltonian::bit(1, 0)),
                oracle::diagonal([](std::uint64_t v) { return double(v); }, 1)),
            0.0);
}

TEST(DenseOfZham, TwoQubitParity) {
  const oracle::Matrix want = oracle::diagonal(
      [](std::uint64_t v) { return std::vector<double>{1, -1, -1, 1}[v]; }, 2);
  EXPECT_EQ(gap(dense_of_zham(DiagonalHamiltonian(2, {{ZTermKey(3), 1.0}})), want), 0.0);
}

TEST(DenseOfPauli, Y) {
  const DenseOperator y = dense_of_pauli(PauliOperator::from_string(PauliString::single(1, 0, Pauli::Y)));
  EXPECT_EQ(y(0, 1), Complex(0, -1));
  EXPECT_EQ(y(1, 0), Complex(0, 1));
  EXPECT_EQ(y(0, 0), Complex(0, 0));
}

TEST(DenseOfPauli, MatchesExplicitKroneckerProducts) {
  Rng rng(1);
  std::uniform_int_distribution<std::uint64_t> mask(0, 31);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<PauliOperator::Term> terms;
    for (int t = 0; t < 5; ++t) terms.emplace_back(PauliString(5, mask(rng), mask(rng)), Complex(g(rng), g(rng)));
    const PauliOperator p(5, terms);
    EXPECT_LE(gap(dense_of_pauli(p), oracle::dense(p)), 1e-12);
  }
}

TEST(SimulateCircuit, EmptyIsIdentity) {
  EXPECT_LE(gap(simulate_circuit(Circuit(3)), oracle::Matrix::Identity(8, 8)), 0.0);
}

TEST(SimulateCircuit, ParityLadderIsExponential) {
  const double gamma = 1.234;
  const Circuit c = emit_evolution(DiagonalHamiltonian(3, {{ZTermKey(7), 1.0}}), gamma);
  EXPECT_LE(gap(simulate_circuit(c), oracle::expm(oracle::pauli_string("ZZZ"), gamma)), 1e-12);
}

TEST(SimulateCircuit, BitQueryOfAndIsToffoli) {
  EXPECT_LE(gap(simulate_circuit(emit_bit_query(x(1) & x(2), 2)),
                oracle::controlled(3, {0, 1}, 2, oracle::pauli('X'))),
            1e-12);
}

TEST(SimulateCircuit, AgreesWithKroneckerSimulatorOnRandomCircuits) {
  Rng rng(2);
  std::uniform_int_distribution<int> kind(0, 5), qubit(0, 4);
  std::uniform_real_distribution<double> angle(-pi, pi);
  for (int trial = 0; trial < 20; ++trial) {
    Circuit c(5, angle(rng));
    for (int g = 0; g < 25; ++g) {
      int a = qubit(rng), b = qubit(rng), d = qubit(rng);
      while (b == a) b = qubit(rng);
      while (d == a || d == b) d = qubit(rng);
      switch (kind(rng)) {
        case 0: c.add(Gate::cnot(a, b)); break;
        case 1: c.add(Gate::rz(a, angle(rng))); break;
        case 2: c.add(Gate::h(a)); break;
        case 3: c.add(Gate::x(a)); break;
        case 4: c.add(Gate::crz(a, b, angle(rng))); break;
        default: c.add(Gate::ccrz(a, b, d, angle(rng))); break;
      }
    }
    EXPECT_LE(gap(simulate_circuit(c), oracle::unitary(c)), 1e-12);
  }
}

TEST(DenseControlled, XControlledByBitIsCnot) {
  const DenseOperator x_gate(1, oracle::pauli('X'));
  EXPECT_LE(gap(dense_controlled(x(1), 1, x_gate), oracle::controlled(2, {0}, 1, oracle::pauli('X'))), 0.0);
}

TEST(DenseControlled, NeverFiringIsIdentity) {
  const DenseOperator x_gate(1, oracle::pauli('X'));
  EXPECT_LE(gap(dense_controlled(BoolExpr::constant(false), 2, x_gate), oracle::Matrix::Identity(8, 8)), 0.0);
}

TEST(DenseControlled, OrControlledRotationIsExponentialOfTensorGenerator) {
  const DenseOperator u(1, oracle::expm(oracle::pauli('X'), 1.0));
  const DiagonalHamiltonian h_or = compile(x(1) | x(2), 2);
  const oracle::Matrix generator = oracle::kron(
      oracle::pauli('X'), oracle::diagonal([&](std::uint64_t v) { return h_or.evaluate(v); }, 2));
  EXPECT_LE(gap(dense_controlled(x(1) | x(2), 2, u), oracle::expm(generator, 1.0)), 1e-9);
}

TEST(DenseControlled, RandomControlledEvolutions) {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 1 + trial % 3;
    const int n = 1 + (trial / 3) % 3;
    const BoolExpr f = random_expression(rng, k, 3);
    const DiagonalHamiltonian h = random_hamiltonian(rng, n, std::min(4, 1 << n));
    const DiagonalHamiltonian hf = compile(f, k);
    for (double t : {0.5, pi}) {
      const oracle::Matrix generator =
          oracle::diagonal([&](std::uint64_t v) { return hf.evaluate(v & ((1u << k) - 1)) * h.evaluate(v >> k); },
                           k + n);
      EXPECT_LE(gap(dense_controlled(f, k, exp_diagonal(h, t)), oracle::expm(generator, t)), 1e-9);
    }
  }
}

TEST(ExpHermitian, MatchesPadeExponential) {
  Rng rng(4);
  std::normal_distribution<double> g;
  for (int n = 1; n <= 4; ++n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    oracle::Matrix a(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) a(i, j) = Complex(g(rng), g(rng));
    }
    const oracle::Matrix h = (a + a.adjoint()) / 2.0;
    EXPECT_LE(gap(exp_hermitian(DenseOperator(n, h), 0.7), oracle::expm(h, 0.7)), 1e-9);
  }
}

TEST(DenseCap, EnforcedAndConfigurable) {
  CapGuard guard;
  EXPECT_EQ(dense_cap(), kDefaultDenseCap);
  set_dense_cap(3);
  EXPECT_THROW(DenseOperator::identity(4), CapExceeded);
  EXPECT_THROW(dense_of_zham(DiagonalHamiltonian::zero(4)), CapExceeded);
  EXPECT_THROW(verify_kickback_suite(x(1) & x(2), 2), CapExceeded);
  EXPECT_THROW(set_dense_cap(kHardDenseCap + 1), std::invalid_argument);
  EXPECT_THROW(set_dense_cap(0), std::invalid_argument);
}

TEST(Kickback, SingleBit) {
  const KickbackReport r = verify_kickback_suite(x(1), 1);
  EXPECT_TRUE(r.passed());
  for (const CheckResult& c : r.checks) EXPECT_LE(c.residual, 1e-9) << c.name;
}

TEST(Kickback, OneInThree) {
  const BoolExpr f = parse_expr("x1 & !x2 & !x3 | !x1 & x2 & !x3 | !x1 & !x2 & x3", 3);
  EXPECT_TRUE(verify_kickback_suite(f, 3).passed());
}

TEST(Kickback, UnsatisfiableHasIdentityBitQuery) {
  const BoolExpr f = BoolExpr::constant(false);
  EXPECT_LE(gap(dense_bit_query(f, 2), oracle::Matrix::Identity(8, 8)), 0.0);
  EXPECT_TRUE(verify_kickback_suite(f, 2).passed());
}

TEST(Kickback, HoldsForNegativeTimes) {
  EXPECT_TRUE(verify_kickback_suite(x(1) | x(2), 2, {-1.0, -pi}).passed());
}

TEST(Spectrum, MajorityLevels) {
  const auto s = spectrum(compile((x(1) & x(2)) | (x(1) & x(3)) | (x(2) & x(3)), 3));
  EXPECT_NEAR(s.min(), 0.0, 1e-12);
  EXPECT_NEAR(s.max(), 1.0, 1e-12);
  EXPECT_EQ(s.argmin(), (std::vector<std::uint64_t>{0, 1, 2, 4}));
  EXPECT_EQ(s.argmax(), (std::vector<std::uint64_t>{3, 5, 6, 7}));
}

TEST(Spectrum, NegatedMaxTwoSatGroundEnergy) {
  Rng rng(5);
  const PseudoBooleanObjective obj = random_max2sat(rng, 5, 9);
  int best = 0;
  for (std::uint64_t v = 0; v < 32; ++v) {
    int sat = 0;
    for (const auto& c : obj.clauses) sat += c.expr.evaluate(v);
    best = std::max(best, sat);
  }
  EXPECT_NEAR(spectrum(-compile_pseudo(obj, 5)).min(), -best, 1e-9);
}

TEST(Spectrum, GroundStateLogicHasOneGroundStatePerInput) {
  const BoolExpr f = parse_expr("x1 ^ x2 | x3", 3);
  const auto s = spectrum(ground_state_logic(f, 3));
  EXPECT_NEAR(s.min(), 0.0, 1e-12);
  EXPECT_EQ(s.argmin().size(), 8u);
}

TEST(Spectrum, DenseEigenvalues) {
  const PauliOperator p = PauliOperator::from_string(PauliString::parse("X1 X2", 2)) +
                          PauliOperator::from_string(PauliString::parse("Z1", 2), 0.5);
  const std::vector<double> ev = spectrum(dense_of_pauli(p));
  Eigen::SelfAdjointEigenSolver<oracle::Matrix> es(oracle::dense(p));
  ASSERT_EQ(ev.size(), 4u);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], es.eigenvalues()(i), 1e-12);
}

class CorpusDense : public ::testing::TestWithParam<int> {};

TEST_P(CorpusDense, TraceGroverAndBitQueryIdentities) {
  const auto fs = bundled_corpus().functions;
  const CorpusFunction& cf = fs[GetParam() % fs.size()];
  const int n = cf.n_vars;
  const DiagonalHamiltonian h = compile(cf.expr, n);
  const DenseOperator d = dense_of_zham(h);
  EXPECT_TRUE(d.is_diagonal());
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
    EXPECT_EQ(d(v, v).real(), cf.expr.evaluate(v) ? 1.0 : 0.0);
  }
  EXPECT_NEAR(d.trace().real() / double(d.dim()), h.identity_coefficient(), 1e-9);
  const oracle::Matrix signs =
      oracle::diagonal([&](std::uint64_t v) { return cf.expr.evaluate(v) ? -1.0 : 1.0; }, n);
  EXPECT_LE(gap(exp_diagonal(h, pi), signs), 1e-9);
  const DenseOperator g = dense_bit_query(cf.expr, n);
  const oracle::Matrix generator = oracle::kron(
      oracle::pauli('X') - oracle::Matrix::Identity(2, 2),
      oracle::diagonal([&](std::uint64_t v) { return h.evaluate(v); }, n));
  EXPECT_LE(gap(g, oracle::expm(generator, pi / 2)), 1e-9);
  EXPECT_NEAR(g.trace().real() / double(g.dim()), 1.0 - h.identity_coefficient(), 1e-9);
}

INSTANTIATE_TEST_SUITE_P(Functions, CorpusDense, ::testing::Range(0, 64));

}  // namespace
}  // namespace boolham
