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


#include "boolham/verify.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>

#include "boolham/circuit.hpp"
#include "boolham/format.hpp"
#include "boolham/fourier.hpp"
#include "boolham/kickback.hpp"
#include "boolham/oracle.hpp"

namespace boolham {

namespace {

constexpr double kGammas[] = {0.3, 1.0, std::numbers::pi};

class Recorder {
 public:
  explicit Recorder(std::string subject) : subject_(std::move(subject)) {}

  void check(std::string name, double residual) {
    const bool ok = std::isfinite(residual) && residual <= kVerifyTolerance;
    report_.checks.push_back({subject_, std::move(name), residual,
                              ok ? VerifyCheck::Status::kPass : VerifyCheck::Status::kFail});
  }

  void skip(std::string name) {
    report_.checks.push_back({subject_, std::move(name), 0.0, VerifyCheck::Status::kSkip});
  }

  VerifyReport take() { return std::move(report_); }

 private:
  std::string subject_;
  VerifyReport report_;
};

double diagonal_distance(const DenseOperator& a, const std::vector<Complex>& diag) {
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.dim(); ++i) {
    for (Eigen::Index j = 0; j < a.dim(); ++j) {
      const Complex want = i == j ? diag[i] : Complex{};
      worst = std::max(worst, std::abs(a(i, j) - want));
    }
  }
  return worst;
}

std::size_t expected_cnots(const DiagonalHamiltonian& h) {
  std::size_t total = 0;
  for (const auto& [key, w] : h.terms()) {
    if (key.degree() > 1) total += 2 * (key.degree() - 1);
  }
  return total;
}

void check_evolution(Recorder& r, const DiagonalHamiltonian& h, const std::string& what) {
  for (double gamma : kGammas) {
    const Circuit c = emit_evolution(h, gamma);
    r.check(what + " circuit = exp(-i gamma H) at gamma " + format_real(gamma, 6),
            max_entry_distance(simulate_circuit(c), exp_diagonal(h, gamma)));
  }
  const GateCounts counts = count_gates(emit_evolution(h, 1.0));
  const std::size_t rotations =
      h.size() - (h.coefficient(ZTermKey{}) != 0.0 ? 1 : 0);
  r.check(what + " CNOT count = sum 2(|S|-1)",
          std::abs(static_cast<double>(counts.cnot) - static_cast<double>(expected_cnots(h))));
  r.check(what + " RZ count = non-identity terms",
          std::abs(static_cast<double>(counts.rz) - static_cast<double>(rotations)));
}

}  // namespace

bool VerifyReport::passed() const { return failures() == 0; }

std::size_t VerifyReport::failures() const {
  return std::count_if(checks.begin(), checks.end(), [](const VerifyCheck& c) {
    return c.status == VerifyCheck::Status::kFail;
  });
}

void VerifyReport::append(const VerifyReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

std::string VerifyReport::to_text() const {
  std::string out;
  std::size_t skipped = 0;
  for (const VerifyCheck& c : checks) {
    switch (c.status) {
      case VerifyCheck::Status::kPass: out += "PASS "; break;
      case VerifyCheck::Status::kFail: out += "FAIL "; break;
      case VerifyCheck::Status::kSkip: out += "SKIP "; ++skipped; break;
    }
    out += c.subject + ": " + c.name;
    if (c.status != VerifyCheck::Status::kSkip) out += "  residual " + format_real(c.residual, 3);
    out += '\n';
  }
  out += std::to_string(checks.size()) + " checks, " + std::to_string(failures()) +
         " failed, " + std::to_string(skipped) + " skipped\n";
  return out;
}

VerifyReport verify_function(const BoolExpr& f, int n, const std::string& subject) {
  Recorder r(subject);
  const DiagonalHamiltonian h = compile(f, n);

  if (n > kMaxTableVars) {
    r.skip("truth-table checks (n above table cap)");
    return r.take();
  }
  const TruthTable table = TruthTable::of(f, n);
  double sound = 0.0;
  std::uint64_t models = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    sound = std::max(sound, std::abs(h.evaluate(x) - table[x]));
    models += table[x] != 0.0;
  }
  r.check("H_f|x> = f(x)|x> on every input", sound);
  r.check("compile = Fourier transform of the truth table",
          max_coefficient_distance(h, fourier_from_table(table)));
  r.check("Parseval: sum f^(S)^2 = f^(empty)",
          std::abs(h.squared_norm() - h.identity_coefficient()));
  r.check("sum f^(S) = f(0^n)", std::abs(h.coefficient_sum() - table[0]));
  double range = std::max({0.0, -h.identity_coefficient(), h.identity_coefficient() - 1.0});
  for (const auto& [key, w] : h.terms()) {
    if (!key.is_identity()) range = std::max(range, std::abs(w) - 0.5);
  }
  r.check("f^(empty) in [0,1] and |f^(S)| <= 1/2", range);
  r.check("projector: H_f^2 = H_f", max_coefficient_distance(h * h, h));
  r.check("model count from f^(empty)",
          std::abs(static_cast<double>(count_models(h)) - static_cast<double>(models)));

  const int cap = dense_cap();
  if (n > cap) {
    r.skip("dense checks (n above dense cap)");
    return r.take();
  }
  const DenseOperator dh = dense_of_zham(h);
  r.check("tr(H_f)/2^n = f^(empty)",
          std::abs(dh.trace().real() / static_cast<double>(dh.dim()) - h.identity_coefficient()));
  check_evolution(r, h, "H_f");
  std::vector<Complex> signs(dh.dim());
  for (std::size_t x = 0; x < signs.size(); ++x) signs[x] = table[x] != 0.0 ? -1.0 : 1.0;
  r.check("exp(-i pi H_f) = diag((-1)^f(x))", diagonal_distance(exp_diagonal(h, std::numbers::pi), signs));

  if (n + 1 > cap) {
    r.skip("bit query and ground-state logic (n + 1 above dense cap)");
    return r.take();
  }
  const DenseOperator g = dense_bit_query(f, n);
  const DenseOperator gc = simulate_circuit(emit_bit_query(f, n));
  r.check("bit query circuit maps |x>|a> to |x>|a xor f(x)>", max_entry_distance(gc, g));
  r.check("G_f^2 = I", max_entry_distance(gc * gc, DenseOperator::identity(n + 1)));
  r.check("tr(G_f)/2^(n+1) = 1 - f^(empty)",
          std::abs(gc.trace() / static_cast<double>(gc.dim()) - (1.0 - h.identity_coefficient())));
  const PauliOperator x_minus_i =
      PauliOperator::from_string(PauliString::single(1, 0, Pauli::X)) - PauliOperator::identity(1);
  const DenseOperator generator = dense_of_pauli(tensor(PauliOperator::from_diagonal(h), x_minus_i));
  r.check("G_f = exp(-i pi/2 H_f (x) (X - I))",
          max_entry_distance(exp_hermitian(generator, std::numbers::pi / 2), g));

  const DiagonalHamiltonian hg = ground_state_logic(f, n);
  double gs = 0.0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    for (std::uint64_t y = 0; y < 2; ++y) {
      const double want = (y == static_cast<std::uint64_t>(table[x] != 0.0)) ? 0.0 : 1.0;
      gs = std::max(gs, std::abs(hg.evaluate(x | (y << n)) - want));
    }
  }
  r.check("ground-state logic: zero exactly on |x>|f(x)>, one elsewhere", gs);

  if (n + 2 > cap) {
    r.skip("controlled evolution and kickback suite (n + 2 above dense cap)");
    return r.take();
  }
  const DiagonalHamiltonian target(2, {{ZTermKey{}, 0.25}, {ZTermKey(1), 0.7}, {ZTermKey(3), -0.4}});
  for (double t : {0.5, std::numbers::pi}) {
    r.check("Lambda_f(exp(-i H t)) circuit at t " + format_real(t, 6),
            max_entry_distance(simulate_circuit(emit_controlled_evolution(f, n, target, t)),
                               dense_controlled(f, n, exp_diagonal(target, t))));
  }
  for (const CheckResult& c : verify_kickback_suite(f, n).checks) r.check(c.name, c.residual);
  return r.take();
}

VerifyReport verify_qubo(const QuboInstance& q, const std::string& subject) {
  Recorder r(subject);
  const int n = q.n_vars();
  const DiagonalHamiltonian closed = compile_qubo(q);
  r.check("closed form = composition path",
          max_coefficient_distance(closed, compile_pseudo(q.as_objective(), n)));
  if (n <= kMaxTableVars) {
    double worst = 0.0;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
      worst = std::max(worst, std::abs(closed.evaluate(x) - q.evaluate(x)));
    }
    r.check("H|x> = f(x)|x> on every input", worst);
  }
  const QuboEvolution evo = emit_qubo_evolution(q, 1.0);
  const GateCounts counts = count_gates(evo.circuit);
  const double rz = static_cast<double>(evo.rz_blocks);
  const double rzz = static_cast<double>(evo.rzz_blocks);
  r.check("at most n RZ blocks", std::max(0.0, rz - n));
  r.check("at most n(n-1)/2 RZZ blocks", std::max(0.0, rzz - n * (n - 1) / 2.0));
  r.check("CNOT count = 2 per RZZ block",
          std::abs(static_cast<double>(counts.cnot) - 2.0 * rzz));
  if (n > dense_cap()) {
    r.skip("dense evolution (n above dense cap)");
  } else {
    check_evolution(r, closed, "H_qubo");
  }
  return r.take();
}

VerifyReport verify_corpus(const Corpus& corpus) {
  VerifyReport report;
  for (const CorpusFunction& f : corpus.functions) {
    report.append(verify_function(f.expr, f.n_vars, f.name));
  }
  for (std::size_t i = 0; i < corpus.qubos.size(); ++i) {
    report.append(verify_qubo(corpus.qubos[i], "qubo " + std::to_string(i + 1)));
  }
  return report;
}

}  // namespace boolham
