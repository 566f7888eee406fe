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

#include <string>
#include <vector>

#include "boolham/boolexpr.hpp"
#include "boolham/compiler.hpp"
#include "boolham/corpus.hpp"

namespace boolham {

/** One invariant evaluated on one subject. */
struct VerifyCheck {
  enum class Status { kPass, kFail, kSkip };

  std::string subject;
  std::string name;
  double residual = 0.0;
  Status status = Status::kSkip;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;

  bool passed() const;
  std::size_t failures() const;
  void append(const VerifyReport& other);
  /// One line per check plus a summary line; deterministic.
  std::string to_text() const;
};

/// Residual tolerance of every sparse and dense check.
inline constexpr double kVerifyTolerance = 1e-9;

/**
 * Every invariant that applies to a Boolean function on n variables:
 * soundness against the truth table, the Fourier path, Parseval and
 * coefficient bounds, projector, model count, and, within the dense cap,
 * evolution circuits, phase and bit queries, controlled evolution, the
 * kickback suite and ground-state logic. Dense checks above the cap are
 * reported as skipped.
 */
VerifyReport verify_function(const BoolExpr& f, int n_vars, const std::string& subject);

/// Closed form against the composition path, gate-count bounds, evolution.
VerifyReport verify_qubo(const QuboInstance& q, const std::string& subject);

VerifyReport verify_corpus(const Corpus& corpus);

}  // namespace boolham
