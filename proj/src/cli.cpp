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


#include "boolham/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "boolham/boolexpr.hpp"
#include "boolham/circuit.hpp"
#include "boolham/compiler.hpp"
#include "boolham/corpus.hpp"
#include "boolham/errors.hpp"
#include "boolham/format.hpp"
#include "boolham/fourier.hpp"
#include "boolham/oracle.hpp"
#include "boolham/pauli_operator.hpp"
#include "boolham/serialize.hpp"
#include "boolham/verify.hpp"

namespace boolham {

namespace {

// Restores process-wide knobs on scope exit.
class SettingsGuard {
 public:
  SettingsGuard() : cap_(dense_cap()), eps_(prune_epsilon()) {}
  ~SettingsGuard() {
    set_dense_cap(cap_);
    set_prune_epsilon(eps_);
  }
  SettingsGuard(const SettingsGuard&) = delete;
  SettingsGuard& operator=(const SettingsGuard&) = delete;

 private:
  int cap_;
  double eps_;
};

/** Parsed command line; at most one input source is set. */
struct CliConfig {
  std::string expr;
  std::string expr_file;
  std::string dimacs;
  std::string qubo;
  std::string hamiltonian;
  std::string mode;
  std::optional<int> n;
  std::string format = "text";
  std::string table_bits;
  std::string table_file;
  std::string inverse;
  std::string input;
  double gamma = 0.0;
  double time = 1.0;
  bool ground_states = false;
  bool lower = false;
  int jw_n = 0;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void add_expr_options(CLI::App* cmd, CliConfig& s) {
  auto* e = cmd->add_option("-e,--expr", s.expr, "Boolean expression over x1..xN");
  auto* f = cmd->add_option("--expr-file", s.expr_file, "file holding an expression ('-' = stdin)");
  e->excludes(f);
  cmd->add_option("-n,--n-vars", s.n, "register size (default: largest variable index)")
      ->check(CLI::Range(1, kMaxSparseQubits));
}

void add_format_option(CLI::App* cmd, CliConfig& s) {
  cmd->add_option("--format", s.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

std::optional<std::pair<BoolExpr, int>> load_expr(const CliConfig& s, std::istream& in) {
  std::string text;
  if (!s.expr.empty()) {
    text = s.expr;
  } else if (!s.expr_file.empty()) {
    text = read_input(s.expr_file, in);
  } else {
    return std::nullopt;
  }
  BoolExpr e = parse_expr(text, s.n.value_or(kMaxSparseQubits));
  return std::pair{e, s.n.value_or(std::max(1, e.max_var()))};
}

/// Expression or DIMACS formula (SAT reading).
std::pair<BoolExpr, int> load_function(const CliConfig& s, std::istream& in) {
  if (auto e = load_expr(s, in)) return *e;
  if (!s.dimacs.empty()) {
    if (!s.mode.empty() && s.mode != "sat") {
      throw std::invalid_argument("this subcommand reads DIMACS as a SAT formula only");
    }
    DimacsProblem p = parse_dimacs(read_input(s.dimacs, in));
    return {p.formula, p.objective.n_vars};
  }
  throw std::invalid_argument("no input: give --expr, --expr-file or --dimacs");
}

/// Any source that denotes a diagonal Hamiltonian.
DiagonalHamiltonian load_hamiltonian(const CliConfig& s, std::istream& in) {
  if (auto e = load_expr(s, in)) return compile(e->first, e->second);
  if (!s.dimacs.empty()) {
    DimacsProblem p = parse_dimacs(read_input(s.dimacs, in));
    if (s.mode == "sat") return compile(p.formula, p.objective.n_vars);
    if (s.mode == "maxsat") return compile_pseudo(p.objective, p.objective.n_vars);
    throw std::invalid_argument("DIMACS input needs --mode sat|maxsat");
  }
  if (!s.qubo.empty()) return compile_qubo(parse_qubo_json(read_input(s.qubo, in)));
  if (!s.hamiltonian.empty()) return parse_hamiltonian_json(read_input(s.hamiltonian, in));
  throw std::invalid_argument("no input given");
}

void print(std::ostream& out, const DiagonalHamiltonian& h, const std::string& format) {
  out << (format == "json" ? to_json(h) : to_text(h)) << '\n';
}

/// Inputs are exclusive; a second source is an error, never a silent choice.
void require_single_source(const CliConfig& s) {
  const int sources = !s.expr.empty() + !s.expr_file.empty() + !s.dimacs.empty() +
                      !s.qubo.empty() + !s.hamiltonian.empty() + !s.table_bits.empty() +
                      !s.table_file.empty() + !s.inverse.empty() + !s.input.empty();
  if (sources > 1) throw std::invalid_argument("give exactly one input source");
}

int dispatch(const std::string& cmd, const CliConfig& s, std::istream& in,
             std::ostream& out) {
  if (cmd == "compile") {
    print(out, load_hamiltonian(s, in), s.format);
    return kExitOk;
  }

  if (cmd == "fourier") {
    if (!s.inverse.empty()) {
      const TruthTable t = table_from_fourier(parse_hamiltonian_json(read_input(s.inverse, in)));
      const bool boolean = std::all_of(t.values().begin(), t.values().end(),
                                       [](double v) { return v == 0.0 || v == 1.0; });
      std::string line;
      for (double v : t.values()) {
        if (boolean) {
          line += v == 1.0 ? '1' : '0';
        } else {
          if (!line.empty()) line += ' ';
          line += format_real(v, 12);
        }
      }
      out << line << '\n';
      return kExitOk;
    }
    DiagonalHamiltonian h;
    if (!s.table_bits.empty()) {
      h = fourier_from_table(TruthTable::parse_bits(s.table_bits));
    } else if (!s.table_file.empty()) {
      const std::string text = read_input(s.table_file, in);
      const auto first = text.find_first_not_of(" \t\r\n");
      h = fourier_from_table(first != std::string::npos && text[first] == '['
                                 ? TruthTable::parse_json(text)
                                 : TruthTable::parse_bits(text));
    } else {
      const auto [e, n] = load_function(s, in);
      h = fourier_from_table(TruthTable::of(e, n));
    }
    if (s.format == "json") {
      print(out, h, s.format);
    } else {
      for (const auto& [key, w] : h.terms()) {
        std::string label = PauliString(h.n_qubits(), 0, key.mask()).to_string();
        std::erase(label, ' ');
        out << label << ' ' << format_real(w, 12) << '\n';
      }
    }
    return kExitOk;
  }

  if (cmd == "circuit") {
    Circuit c = emit_evolution(load_hamiltonian(s, in), s.gamma);
    if (s.lower) c = lower_controlled_rotations(c);
    out << serialize(c);
    return kExitOk;
  }

  if (cmd == "qubo") {
    const QuboInstance q = parse_qubo_json(read_input(s.input, in));
    const QuboEvolution evo = emit_qubo_evolution(q, s.time);
    print(out, compile_qubo(q), s.format);
    out << "# rz blocks " << evo.rz_blocks << ", rzz blocks " << evo.rzz_blocks << '\n'
        << serialize(evo.circuit);
    return kExitOk;
  }

  if (cmd == "count") {
    const auto [e, n] = load_function(s, in);
    out << count_models(compile(e, n)) << '\n';
    return kExitOk;
  }

  if (cmd == "gslogic") {
    const auto [e, n] = load_function(s, in);
    const DiagonalHamiltonian hg = ground_state_logic(e, n);
    print(out, hg, s.format);
    if (s.ground_states) {
      for (std::uint64_t x : spectrum(hg).argmin()) out << basis_label(x, n + 1) << '\n';
    }
    return kExitOk;
  }

  if (cmd == "penalize") {
    const DiagonalHamiltonian hp = augment_penalties(parse_penalty_json(read_input(s.input, in)));
    print(out, hp, s.format);
    if (s.ground_states) {
      for (std::uint64_t x : spectrum(hp).argmin()) out << basis_label(x, hp.n_qubits()) << '\n';
    }
    return kExitOk;
  }

  if (cmd == "jw") {
    for (int j = 0; j < s.jw_n; ++j) {
      for (Ladder kind : {Ladder::kLowering, Ladder::kRaising}) {
        const PauliOperator a = jordan_wigner(s.jw_n, j, kind);
        const std::string name =
            "a" + std::to_string(j + 1) + (kind == Ladder::kRaising ? "^dag" : "");
        if (s.format == "json") {
          out << "{\"operator\": \"" << name << "\", \"value\": " << to_json(a) << "}\n";
        } else {
          out << name << " = " << to_text(a) << '\n';
        }
      }
    }
    return kExitOk;
  }

  if (cmd == "approx") {
    const DiagonalHamiltonian h = parse_hamiltonian_json(read_input(s.hamiltonian, in));
    const BoolExpr f = parse_expr(s.expr, h.n_qubits());
    const ApproxReport r = check_approx(h, f);
    out << r.describe(h.n_qubits()) << '\n';
    return r.ok ? kExitOk : kExitVerifyFailed;
  }

  // verify
  VerifyReport report;
  if (!s.qubo.empty()) {
    report = verify_qubo(parse_qubo_json(read_input(s.qubo, in)), "qubo");
  } else if (s.expr.empty() && s.expr_file.empty() && s.dimacs.empty()) {
    report = verify_corpus(bundled_corpus());
  } else {
    const auto [e, n] = load_function(s, in);
    report = verify_function(e, n, e.to_string());
  }
  out << report.to_text();
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  SettingsGuard guard;
  CLI::App app{"Compile Boolean functions into diagonal Hamiltonians and circuits", "boolham"};
  app.require_subcommand(1);
  std::optional<int> cap;
  std::optional<double> eps;
  app.add_option("--dense-cap", cap, "qubit cap of the dense oracle")
      ->check(CLI::Range(1, kHardDenseCap));
  app.add_option("--prune-eps", eps, "coefficient pruning epsilon")
      ->check(CLI::NonNegativeNumber);

  CliConfig s;

  auto* compile_cmd = app.add_subcommand("compile", "expression, DIMACS or QUBO to Hamiltonian");
  add_expr_options(compile_cmd, s);
  compile_cmd->add_option("--dimacs", s.dimacs, "DIMACS CNF/WCNF file ('-' = stdin)");
  compile_cmd->add_option("--mode", s.mode, "reading of DIMACS input")
      ->check(CLI::IsMember({"sat", "maxsat"}));
  compile_cmd->add_option("--qubo", s.qubo, "QUBO JSON file ('-' = stdin)");
  add_format_option(compile_cmd, s);

  auto* fourier_cmd = app.add_subcommand("fourier", "truth table to Fourier coefficients and back");
  add_expr_options(fourier_cmd, s);
  fourier_cmd->add_option("--table", s.table_bits, "truth table as a 0/1 string, x1 the LSB");
  fourier_cmd->add_option("--table-file", s.table_file, "bit string or JSON array file");
  fourier_cmd->add_option("--inverse", s.inverse, "Hamiltonian JSON to turn back into a table");
  fourier_cmd->add_option("--dimacs", s.dimacs, "DIMACS CNF file (SAT reading)");
  add_format_option(fourier_cmd, s);

  auto* circuit_cmd = app.add_subcommand("circuit", "exp(-i gamma H) as circuit text");
  add_expr_options(circuit_cmd, s);
  circuit_cmd->add_option("--hamiltonian", s.hamiltonian, "Hamiltonian JSON file");
  circuit_cmd->add_option("--gamma", s.gamma, "evolution angle")->required();
  circuit_cmd->add_flag("--lower", s.lower, "lower controlled rotations to CNOT and RZ");

  auto* qubo_cmd = app.add_subcommand("qubo", "QUBO JSON to Hamiltonian and circuit");
  qubo_cmd->add_option("input", s.input, "QUBO JSON file ('-' = stdin)")->required();
  qubo_cmd->add_option("-t,--time", s.time, "evolution time");
  add_format_option(qubo_cmd, s);

  auto* count_cmd = app.add_subcommand("count", "model count from the identity coefficient");
  add_expr_options(count_cmd, s);
  count_cmd->add_option("--dimacs", s.dimacs, "DIMACS CNF file (SAT reading)");

  auto* gs_cmd = app.add_subcommand("gslogic", "ground-state logic Hamiltonian on n+1 qubits");
  add_expr_options(gs_cmd, s);
  gs_cmd->add_option("--dimacs", s.dimacs, "DIMACS CNF file (SAT reading)");
  gs_cmd->add_flag("--ground-states", s.ground_states, "also list the ground states");
  add_format_option(gs_cmd, s);

  auto* pen_cmd = app.add_subcommand("penalize", "objective plus weighted penalties");
  pen_cmd->add_option("input", s.input, "penalty JSON file ('-' = stdin)")->required();
  pen_cmd->add_flag("--ground-states", s.ground_states, "also list the ground states");
  add_format_option(pen_cmd, s);

  auto* jw_cmd = app.add_subcommand("jw", "Jordan-Wigner operator table");
  jw_cmd->add_option("-n,--n-modes", s.jw_n, "number of modes")
      ->required()
      ->check(CLI::Range(1, kMaxSparseQubits));
  add_format_option(jw_cmd, s);

  auto* approx_cmd = app.add_subcommand("approx", "max-norm check of an approximating Hamiltonian");
  approx_cmd->add_option("--hamiltonian", s.hamiltonian, "Hamiltonian JSON file")->required();
  approx_cmd->add_option("-e,--expr", s.expr, "target Boolean expression")->required();

  auto* verify_cmd = app.add_subcommand("verify", "invariant suite (bundled corpus by default)");
  add_expr_options(verify_cmd, s);
  verify_cmd->add_option("--dimacs", s.dimacs, "DIMACS CNF file (SAT reading)");
  verify_cmd->add_option("--qubo", s.qubo, "QUBO JSON file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (cap) set_dense_cap(*cap);
    if (eps) set_prune_epsilon(*eps);
    if (!std::isfinite(s.gamma) || !std::isfinite(s.time)) {
      throw std::invalid_argument("angles must be finite");
    }
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd != "approx") require_single_source(s);
    return dispatch(cmd, s, in, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const CapExceeded& e) {
    err << "cap exceeded: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParseError;
  }
}

}  // namespace boolham
