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

#include "boolham/compiler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "boolham/errors.hpp"

namespace boolham {

namespace {

class Composer {
 public:
  Composer(int n_qubits, const CompileOptions& options)
      : n_(n_qubits), options_(options), identity_(DiagonalHamiltonian::identity(n_qubits)) {}

  DiagonalHamiltonian operator()(const BoolExpr& e) const {
    using Op = BoolExpr::Op;
    switch (e.op()) {
      case Op::kConst:
        return e.value() ? identity_ : DiagonalHamiltonian::zero(n_);
      case Op::kVar:
        return DiagonalHamiltonian::bit(n_, e.index() - 1);
      case Op::kNot:
        return guard(identity_ - (*this)(e.children()[0]));
      case Op::kAnd:
        return fold(e, [](const auto& f, const auto& g) { return f * g; });
      case Op::kOr:
        return fold(e, [](const auto& f, const auto& g) { return f + g - f * g; });
      case Op::kXor:
        return fold(e, [](const auto& f, const auto& g) {
          return f + g - 2.0 * (f * g);
        });
      case Op::kImplies: {
        const DiagonalHamiltonian f = (*this)(e.children()[0]);
        const DiagonalHamiltonian g = (*this)(e.children()[1]);
        return guard(identity_ - f + guard(f * g));
      }
    }
    throw std::logic_error("unhandled expression node");
  }

 private:
  template <typename Rule>
  DiagonalHamiltonian fold(const BoolExpr& e, Rule rule) const {
    auto children = e.children();
    DiagonalHamiltonian acc = (*this)(children[0]);
    for (std::size_t i = 1; i < children.size(); ++i) {
      acc = guard(rule(acc, (*this)(children[i])));
    }
    return acc;
  }

  DiagonalHamiltonian guard(DiagonalHamiltonian h) const {
    if (h.size() > options_.max_terms) {
      throw CapExceeded("intermediate Hamiltonian has " + std::to_string(h.size()) +
                        " terms, above the cap of " +
                        std::to_string(options_.max_terms));
    }
    return h;
  }

  int n_;
  const CompileOptions& options_;
  DiagonalHamiltonian identity_;
};

void check_vars(const BoolExpr& e, int n_qubits) {
  if (e.max_var() > n_qubits) {
    throw std::invalid_argument("expression uses x" + std::to_string(e.max_var()) +
                                " but the register has " + std::to_string(n_qubits) +
                                " qubits");
  }
}

}  // namespace

DiagonalHamiltonian compile(const BoolExpr& e, int n_qubits,
                            const CompileOptions& options) {
  check_vars(e, n_qubits);
  return Composer(n_qubits, options)(e);
}

DiagonalHamiltonian compile_pseudo(const PseudoBooleanObjective& objective,
                                   int n_qubits, const CompileOptions& options) {
  DiagonalHamiltonian h(n_qubits);
  const Composer composer(n_qubits, options);
  for (const auto& clause : objective.clauses) {
    check_vars(clause.expr, n_qubits);
    h = h + clause.weight * composer(clause.expr);
  }
  return h;
}

QuboInstance::QuboInstance(int n_vars, double constant, std::vector<double> linear,
                           std::vector<std::vector<double>> quadratic)
    : n_vars_(n_vars),
      constant_(constant),
      linear_(std::move(linear)),
      quadratic_(std::move(quadratic)) {
  if (n_vars < 0 || n_vars > kMaxSparseQubits) {
    throw CapExceeded("QUBO with " + std::to_string(n_vars) + " variables");
  }
  if (static_cast<int>(linear_.size()) != n_vars) {
    throw DimensionMismatch("linear vector length differs from n");
  }
  if (static_cast<int>(quadratic_.size()) != n_vars) {
    throw DimensionMismatch("quadratic matrix row count differs from n");
  }
  for (int j = 0; j < n_vars; ++j) {
    if (static_cast<int>(quadratic_[j].size()) != n_vars) {
      throw DimensionMismatch("quadratic matrix is not square");
    }
    if (quadratic_[j][j] != 0.0) {
      throw std::invalid_argument("quadratic matrix has a nonzero diagonal entry at " +
                                  std::to_string(j + 1));
    }
    for (int k = 0; k < j; ++k) {
      if (quadratic_[j][k] != quadratic_[k][j]) {
        throw std::invalid_argument("quadratic matrix is not symmetric at (" +
                                    std::to_string(k + 1) + ", " +
                                    std::to_string(j + 1) + ")");
      }
    }
  }
}

QuboInstance::QuboInstance(int n_vars, double constant, std::vector<double> linear)
    : QuboInstance(n_vars, constant, std::move(linear),
                   std::vector<std::vector<double>>(
                       std::max(n_vars, 0), std::vector<double>(std::max(n_vars, 0)))) {}

double QuboInstance::evaluate(std::uint64_t x) const {
  double v = constant_;
  for (int j = 0; j < n_vars_; ++j) {
    if (!((x >> j) & 1U)) continue;
    v += linear_[j];
    for (int k = j + 1; k < n_vars_; ++k) {
      if ((x >> k) & 1U) v += quadratic_[j][k];
    }
  }
  return v;
}

PseudoBooleanObjective QuboInstance::as_objective() const {
  PseudoBooleanObjective obj;
  obj.n_vars = n_vars_;
  if (constant_ != 0.0) obj.clauses.push_back({constant_, BoolExpr::constant(true)});
  for (int j = 0; j < n_vars_; ++j) {
    if (linear_[j] != 0.0) obj.clauses.push_back({linear_[j], BoolExpr::var(j + 1)});
  }
  for (int j = 0; j < n_vars_; ++j) {
    for (int k = j + 1; k < n_vars_; ++k) {
      if (quadratic_[j][k] != 0.0) {
        obj.clauses.push_back(
            {quadratic_[j][k], BoolExpr::var(j + 1) & BoolExpr::var(k + 1)});
      }
    }
  }
  return obj;
}

DiagonalHamiltonian compile_qubo(const QuboInstance& q) {
  const int n = q.n_vars();
  double c = 0.0;
  double d = 0.0;
  for (int j = 0; j < n; ++j) {
    c += 0.5 * q.linear(j);
    for (int k = j + 1; k < n; ++k) d += 0.25 * q.quadratic(j, k);
  }
  std::vector<DiagonalHamiltonian::Term> terms;
  terms.reserve(1 + n + n * (n - 1) / 2);
  terms.emplace_back(ZTermKey{}, q.constant() + c + d);
  for (int j = 0; j < n; ++j) {
    double dj = 0.0;
    for (int k = 0; k < n; ++k) {
      if (k != j) dj += 0.5 * q.quadratic(j, k);
    }
    terms.emplace_back(ZTermKey::single(j), -0.5 * (q.linear(j) + dj));
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      terms.emplace_back(ZTermKey::single(j) * ZTermKey::single(k),
                         0.25 * q.quadratic(j, k));
    }
  }
  return DiagonalHamiltonian(n, std::move(terms));
}

double auto_penalty_weight(const DiagonalHamiltonian& objective) {
  return 2.0 * objective.one_norm() + 1.0;
}

DiagonalHamiltonian augment_penalties(const PenaltySpec& spec,
                                      const CompileOptions& options) {
  const int n = spec.objective.n_qubits();
  DiagonalHamiltonian h = spec.objective;
  const double fallback = auto_penalty_weight(spec.objective);
  for (const auto& p : spec.penalties) {
    const double w = p.weight.value_or(fallback);
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("penalty weights must be positive and finite");
    }
    h = h + w * compile(p.constraint, n, options);
  }
  return h;
}

DiagonalHamiltonian ground_state_logic(const BoolExpr& f, int n_qubits,
                                       const CompileOptions& options) {
  const DiagonalHamiltonian hf = compile(f, n_qubits, options);
  return tensor(DiagonalHamiltonian::identity(n_qubits), DiagonalHamiltonian::bit(1, 0)) +
         tensor(hf, DiagonalHamiltonian::z(1, 0));
}

}  // namespace boolham
