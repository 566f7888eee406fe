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

#include "boolham/compiler.hpp"
#include "boolham/corpus.hpp"
#include "boolham/errors.hpp"
#include "boolham/pauli_operator.hpp"
#include "oracles.hpp"

namespace boolham {
namespace {

const Complex kI(0, 1);

PauliOperator op(int n, std::string_view s, Complex w = 1.0) {
  return PauliOperator::from_string(PauliString::parse(s, n), w);
}

PauliString random_string(Rng& rng, int n) {
  std::uniform_int_distribution<std::uint64_t> mask(0, (std::uint64_t{1} << n) - 1);
  std::uniform_int_distribution<int> phase(0, 3);
  return PauliString(n, mask(rng), mask(rng), phase(rng));
}

oracle::Matrix dense_string(const PauliString& s) {
  std::string letters;
  for (int q = 0; q < s.n_qubits(); ++q) letters += "IXYZ"[static_cast<int>(s.at(q))];
  return s.phase_factor() * oracle::pauli_string(letters);
}

TEST(PauliMul, XTimesZIsMinusIY) {
  EXPECT_EQ(op(1, "X1") * op(1, "Z1"), op(1, "Y1", -kI));
}

TEST(PauliMul, CyclicProducts) {
  EXPECT_EQ(op(1, "X1") * op(1, "Y1"), op(1, "Z1", kI));
  EXPECT_EQ(op(1, "Y1") * op(1, "Z1"), op(1, "X1", kI));
  EXPECT_EQ(op(1, "Z1") * op(1, "X1"), op(1, "Y1", kI));
  EXPECT_EQ(op(1, "Y1") * op(1, "Y1"), PauliOperator::identity(1));
}

TEST(PauliAdjoint, SpinAnnihilationAdjoint) {
  const auto b = op(1, "X1", 0.5) + op(1, "Y1", 0.5 * kI);
  EXPECT_EQ(b.adjoint(), op(1, "X1", 0.5) + op(1, "Y1", -0.5 * kI));
  EXPECT_FALSE(b.is_hermitian());
  EXPECT_TRUE((b + b.adjoint()).is_hermitian());
}

TEST(PauliAnticommutator, SpinPairOnOneQubitIsIdentityDensely) {
  const auto b = spin_lowering(1, 0);
  const auto ac = anticommutator(b, b.adjoint());
  EXPECT_EQ(ac, PauliOperator::identity(1));
  const oracle::Matrix db = oracle::dense(b);
  const oracle::Matrix ref = db * db.adjoint() + db.adjoint() * db;
  EXPECT_LE(oracle::max_abs(ref - oracle::Matrix::Identity(2, 2)), 1e-12);
}

TEST(PauliOperator, RejectsQubitCountMismatch) {
  EXPECT_THROW(op(1, "X1") * op(2, "X1"), DimensionMismatch);
  EXPECT_THROW(op(1, "X1") + op(2, "X1"), DimensionMismatch);
}

TEST(PauliOperator, ParseErrors) {
  EXPECT_THROW(PauliString::parse("X3", 2), ParseError);
  EXPECT_THROW(PauliString::parse("Q1", 2), ParseError);
  EXPECT_THROW(PauliString::parse("X1 Z1", 2), ParseError);
  EXPECT_EQ(PauliString::parse("X1 Y3", 3), PauliString::parse("X1Y3", 3));
  EXPECT_EQ(PauliString::parse("I", 3), PauliString::identity(3));
}

TEST(PauliOperator, DiagonalRoundTrip) {
  const auto h = compile(parse_expr("x1 | x2 & x3", 3), 3);
  const auto p = PauliOperator::from_diagonal(h);
  EXPECT_TRUE(p.is_diagonal());
  EXPECT_EQ(p.to_diagonal(), h);
  EXPECT_THROW(op(1, "X1").to_diagonal(), std::invalid_argument);
}

TEST(Spin, LoweringMapsOneToZeroAndAnnihilatesZero) {
  const oracle::Matrix b = oracle::dense(spin_lowering(1, 0));
  Eigen::VectorXcd zero(2), one(2);
  zero << 1, 0;
  one << 0, 1;
  EXPECT_LE((b * one - zero).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LE((b * zero).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Spin, NumberOperatorIsBit) {
  for (int n = 1; n <= 4; ++n) {
    for (int q = 0; q < n; ++q) {
      const auto num = spin_raising(n, q) * spin_lowering(n, q);
      EXPECT_EQ(num, PauliOperator::from_diagonal(DiagonalHamiltonian::bit(n, q)));
      EXPECT_EQ(num, 0.5 * (PauliOperator::identity(n) -
                            PauliOperator::from_string(PauliString::single(n, q, Pauli::Z))));
    }
  }
}

TEST(Spin, IndexOutOfRange) {
  EXPECT_THROW(spin_lowering(2, 2), std::out_of_range);
  EXPECT_THROW(spin_raising(2, -1), std::out_of_range);
  EXPECT_THROW(jordan_wigner(3, 3, Ladder::kLowering), std::out_of_range);
}

TEST(JordanWigner, FirstModeHasNoParityString) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(jordan_wigner(n, 0, Ladder::kLowering), spin_lowering(n, 0));
    EXPECT_EQ(jordan_wigner(n, 0, Ladder::kRaising), spin_raising(n, 0));
  }
}

TEST(JordanWigner, DifferentModesAnticommuteDensely) {
  const oracle::Matrix a1 = oracle::dense(jordan_wigner(2, 0, Ladder::kLowering));
  const oracle::Matrix a2d = oracle::dense(jordan_wigner(2, 1, Ladder::kRaising));
  EXPECT_LE(oracle::max_abs(a1 * a2d + a2d * a1), 1e-12);
  EXPECT_TRUE(anticommutator(jordan_wigner(2, 0, Ladder::kLowering),
                             jordan_wigner(2, 1, Ladder::kRaising))
                  .is_zero());
}

TEST(JordanWigner, CanonicalAnticommutationRelationsDensely) {
  for (int n = 1; n <= 6; ++n) {
    const auto dim = Eigen::Index{1} << n;
    std::vector<oracle::Matrix> a, ad;
    for (int j = 0; j < n; ++j) {
      a.push_back(oracle::dense(jordan_wigner(n, j, Ladder::kLowering)));
      ad.push_back(oracle::dense(jordan_wigner(n, j, Ladder::kRaising)));
      EXPECT_LE(oracle::max_abs(ad[j] - a[j].adjoint()), 1e-12);
    }
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const oracle::Matrix delta =
            (j == k ? 1.0 : 0.0) * oracle::Matrix::Identity(dim, dim);
        ASSERT_LE(oracle::max_abs(a[j] * a[k] + a[k] * a[j]), 1e-12) << n << j << k;
        ASSERT_LE(oracle::max_abs(ad[j] * ad[k] + ad[k] * ad[j]), 1e-12) << n << j << k;
        ASSERT_LE(oracle::max_abs(a[j] * ad[k] + ad[k] * a[j] - delta), 1e-12) << n << j << k;
      }
    }
  }
}

TEST(JordanWigner, SymbolicRelationsForThreeModes) {
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const auto ac = anticommutator(jordan_wigner(3, j, Ladder::kLowering),
                                     jordan_wigner(3, k, Ladder::kRaising));
      EXPECT_EQ(ac, j == k ? PauliOperator::identity(3) : PauliOperator(3));
    }
  }
}

TEST(PauliString, ProductsMatchDenseMatricesAndAssociate) {
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 6;
    const auto a = random_string(rng, n);
    const auto b = random_string(rng, n);
    const auto c = random_string(rng, n);
    ASSERT_LE(oracle::max_abs(dense_string(a * b) - dense_string(a) * dense_string(b)), 1e-12);
    ASSERT_EQ((a * b) * c, a * (b * c));
    const oracle::Matrix ab = dense_string(a) * dense_string(b);
    const oracle::Matrix ba = dense_string(b) * dense_string(a);
    ASSERT_LE(oracle::max_abs(anticommutes(a, b) ? oracle::Matrix(ab + ba) : oracle::Matrix(ab - ba)), 1e-12);
  }
}

TEST(PauliOperator, CoefficientsAreTraceProjections) {
  Rng rng(91);
  std::normal_distribution<double> gauss;
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 1 + trial % 5;
    std::vector<PauliOperator::Term> terms;
    for (int t = 0; t < 6; ++t) terms.emplace_back(random_string(rng, n), Complex(gauss(rng), gauss(rng)));
    const PauliOperator p(n, terms);
    const oracle::Matrix m = oracle::dense(p);
    const double dim = static_cast<double>(Eigen::Index{1} << n);
    for (const auto& [s, c] : p.terms()) {
      const Complex proj = (dense_string(s) * m).trace() / dim;
      ASSERT_LE(std::abs(proj - c), 1e-9);
    }
    EXPECT_LE(oracle::max_abs(oracle::dense(p.adjoint()) - m.adjoint()), 1e-12);
  }
}

TEST(PauliOperator, HermitianIffRealCanonicalCoefficients) {
  EXPECT_TRUE((op(2, "X1 Y2", 0.5) + op(2, "Z1", -1.0)).is_hermitian());
  EXPECT_FALSE(op(2, "X1 Y2", kI).is_hermitian());
  EXPECT_TRUE((op(1, "X1") * op(1, "Y1") * Complex(0, -1)).is_hermitian());
}

}  // namespace
}  // namespace boolham
