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
#include <string>
#include <vector>

#include "boolham/boolexpr.hpp"
#include "boolham/oracle.hpp"

namespace boolham {

/** Residual of one dense equivalence check. */
struct CheckResult {
  std::string name;
  double residual = 0.0;
  bool passed = false;
};

/**
 * Dense demonstrations that phase queries, controlled phase queries and
 * bit queries simulate one another. Register layout: data qubits 0..n-1,
 * ancilla a = n, ancilla b = n+1; G_f computes into the qubit right above
 * the data it reads.
 *
 *  1. phase kickback: G_f |x>|-> = (-1)^{f(x)} |x>|->
 *  2. bit from phase: H_a Lambda_a(exp(-i pi H_f)) H_a = G_f
 *  3. controlled phase from two bit queries: on ancilla b = |0>,
 *     G_f Lambda_{a,b} G_f = Lambda_a(exp(-i t H_f)), where Lambda_{a,b} is
 *     R_Z(-t) on b controlled by a, with the global phase e^{-it/2} of the
 *     uncontrolled identity carried inside the control
 *  4. the same operator with each G_f replaced by H_b Lambda_b(exp(-i pi
 *     H_f)) H_b, i.e. from controlled phase queries only
 */
struct KickbackReport {
  std::array<CheckResult, 4> checks;

  bool passed() const;
};

/// Runs all four checks at every time in `times`; each residual is the
/// worst over the times. Needs n + 2 <= dense_cap().
KickbackReport verify_kickback_suite(const BoolExpr& f, int n_qubits,
                                     const std::vector<double>& times = {0.3, 1.0, 2.5});

}  // namespace boolham
