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

#include "boolham/kickback.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "boolham/compiler.hpp"
#include "boolham/errors.hpp"

namespace boolham {

namespace {

// Max entry distance over the columns whose `qubit` bit is 0.
double restricted_distance(const DenseOperator& a, const DenseOperator& b, int qubit) {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < a.dim(); ++c) {
    if ((c >> qubit) & 1) continue;
    worst = std::max(worst, (a.matrix().col(c) - b.matrix().col(c)).cwiseAbs().maxCoeff());
  }
  return worst;
}

}  // namespace

bool KickbackReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

KickbackReport verify_kickback_suite(const BoolExpr& f, int n_qubits,
                                     const std::vector<double>& times) {
  if (n_qubits + 2 > dense_cap()) {
    throw CapExceeded("kickback suite needs n + 2 <= dense cap");
  }
  const int n = n_qubits;
  const int a = n;
  const int b = n + 1;
  const int total = n + 2;
  std::vector<int> data(n);
  std::iota(data.begin(), data.end(), 0);
  std::vector<int> data_and_b(data);
  data_and_b.push_back(b);
  const std::vector<int> ctrl_a{a};
  const std::vector<int> ctrl_b{b};

  const DiagonalHamiltonian hf = compile(f, n);
  const DenseOperator g_small = dense_bit_query(f, n);
  const DenseOperator grover = exp_diagonal(hf, std::numbers::pi);

  KickbackReport report;
  report.checks[0].name = "phase kickback G_f|x>|-> = (-1)^f(x)|x>|->";
  report.checks[1].name = "bit query from controlled phase query";
  report.checks[2].name = "controlled evolution from two bit queries";
  report.checks[3].name = "controlled evolution from controlled phase queries";

  // 1. kickback on the (n+1)-qubit bit query, ancilla in |->.
  {
    const Eigen::Index half = Eigen::Index{1} << n;
    const double r = 1.0 / std::numbers::sqrt2;
    double worst = 0.0;
    for (Eigen::Index x = 0; x < half; ++x) {
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2 * half);
      v(x) = r;
      v(x + half) = -r;
      const double sign = f.evaluate(static_cast<std::uint64_t>(x)) ? -1.0 : 1.0;
      worst = std::max(worst, (g_small.matrix() * v - sign * v).cwiseAbs().maxCoeff());
    }
    report.checks[0].residual = worst;
  }

  // 2. H_a Lambda_a(e^{-i pi H_f}) H_a = G_f as full operators.
  const DenseOperator h_small = place(dense_hadamard(), ctrl_a, n + 1);
  {
    const DenseOperator lam = place(grover, data, n + 1, ctrl_a);
    report.checks[1].residual = max_entry_distance(h_small * lam * h_small, g_small);
  }

  // 3 and 4 on the (n+2)-qubit register, ancilla b prepared in |0>.
  const DenseOperator g_b = place(g_small, data_and_b, total);
  const DenseOperator h_b = place(dense_hadamard(), ctrl_b, total);
  const DenseOperator g_b_from_phase =
      h_b * place(grover, data, total, ctrl_b) * h_b;
  double worst3 = 0.0;
  double worst4 = 0.0;
  for (double t : times) {
    const DenseOperator target = place(exp_diagonal(hf, t), data, total, ctrl_a);
    const DenseOperator rotation =
        place(std::polar(1.0, -t / 2) * dense_rz(-t), ctrl_b, total, ctrl_a);
    worst3 = std::max(worst3, restricted_distance(g_b * rotation * g_b, target, b));
    worst4 = std::max(worst4, restricted_distance(
                                  g_b_from_phase * rotation * g_b_from_phase, target, b));
  }
  report.checks[2].residual = worst3;
  report.checks[3].residual = worst4;

  for (CheckResult& c : report.checks) c.passed = c.residual <= kDenseTolerance;
  return report;
}

}  // namespace boolham
