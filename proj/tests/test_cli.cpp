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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "boolham/circuit.hpp"
#include "boolham/cli.hpp"
#include "boolham/compiler.hpp"
#include "boolham/fourier.hpp"
#include "boolham/oracle.hpp"
#include "boolham/pauli_core.hpp"

namespace boolham {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("boolham_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const char* kQubo = R"({"n": 2, "a": 1, "linear": [1, -2], "quadratic": [[1, 2, 3]]})";

TEST(Cli, CompileOrExpression) {
  const Outcome r = invoke({"compile", "-e", "x1 | x2", "-n", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0.75 I - 0.25 Z1 - 0.25 Z2 - 0.25 Z1Z2\n");
}

TEST(Cli, CountUnsatisfiable) {
  const Outcome r = invoke({"count", "-e", "x1 & !x1", "-n", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "0\n");
}

TEST(Cli, CountDimacsFromStdin) {
  // (x1 | !x2) & (x2 | x3), counted by enumeration.
  const std::string cnf = "p cnf 3 2\n1 -2 0\n2 3 0\n";
  int models = 0;
  for (int v = 0; v < 8; ++v) {
    const bool x1 = v & 1, x2 = v & 2, x3 = v & 4;
    models += (x1 || !x2) && (x2 || x3);
  }
  ASSERT_EQ(models, 4);
  const Outcome r = invoke({"count", "--dimacs", "-"}, cnf);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "4\n");
}

TEST(Cli, CompileDimacsNeedsMode) {
  const std::string path = write_temp("mode.cnf", "p cnf 2 2\n1 2 0\n-1 0\n");
  EXPECT_EQ(invoke({"compile", "--dimacs", path}).code, kExitParseError);
  const Outcome sat = invoke({"compile", "--dimacs", path, "--mode", "sat"});
  EXPECT_EQ(sat.code, kExitOk);
  // Only x = 10 (x2 = 1, x1 = 0) satisfies both clauses.
  EXPECT_EQ(sat.out, "0.25 I + 0.25 Z1 - 0.25 Z2 - 0.25 Z1Z2\n");
  const Outcome maxsat = invoke({"compile", "--dimacs", path, "--mode", "maxsat"});
  EXPECT_EQ(maxsat.code, kExitOk);
  // Clause sum: (0.75 I - 0.25 Z1 - 0.25 Z2 - 0.25 Z1Z2) + (0.5 I + 0.5 Z1).
  EXPECT_EQ(maxsat.out, "1.25 I + 0.25 Z1 - 0.25 Z2 - 0.25 Z1Z2\n");
}

TEST(Cli, CompileQuboAndJson) {
  const std::string path = write_temp("q.json", kQubo);
  EXPECT_EQ(invoke({"compile", "--qubo", path}).out, "1.25 I - 1.25 Z1 + 0.25 Z2 + 0.75 Z1Z2\n");
  const Outcome j = invoke({"compile", "-e", "x1", "--format", "json"});
  EXPECT_EQ(j.code, kExitOk);
  EXPECT_NE(j.out.find("\"paulis\": \"Z1\""), std::string::npos);
}

TEST(Cli, FourierTableAndInverse) {
  const Outcome r = invoke({"fourier", "--table", "0111"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "I 0.75\nZ1 -0.25\nZ2 -0.25\nZ1Z2 -0.25\n");
  const Outcome j = invoke({"fourier", "--table", "0111", "--format", "json"});
  const std::string path = write_temp("or.json", j.out);
  EXPECT_EQ(invoke({"fourier", "--inverse", path}).out, "0111\n");
  EXPECT_EQ(invoke({"fourier", "--table-file", "-"}, "[0, 0.5, 0.5, 1]").out, "I 0.5\nZ1 -0.25\nZ2 -0.25\n");
}

TEST(Cli, CircuitText) {
  const Outcome r = invoke({"circuit", "-e", "x1 & x2", "-n", "2", "--gamma", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "qubits 2\nphase -0.25\nrz 1 -0.5\nrz 2 -0.5\ncx 1 2\nrz 2 0.5\ncx 1 2\n");
  EXPECT_EQ(parse_circuit(r.out), emit_evolution(compile(parse_expr("x1 & x2", 2), 2), 1.0));
}

TEST(Cli, QuboCountsBlocks) {
  const Outcome r = invoke({"qubo", "-", "-t", "0.5"}, kQubo);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("# rz blocks 2, rzz blocks 1\n"), std::string::npos);
}

TEST(Cli, GroundStateLogicListsGraph) {
  const Outcome r = invoke({"gslogic", "-e", "x1 ^ x2", "--ground-states"});
  EXPECT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  int states = 0;
  while (std::getline(lines, line)) ++states;
  EXPECT_EQ(states, 4);
}

TEST(Cli, PenalizeSelectsFeasibleMinimum) {
  // Minimize -x1 - x2 subject to not both; ground states are 01 and 10.
  const std::string spec = R"({"n": 2, "objective": [{"weight": -1, "expr": "x1"}, {"weight": -1, "expr": "x2"}],
                               "penalties": [{"constraint": "x1 & x2"}]})";
  const Outcome r = invoke({"penalize", "-", "--ground-states"}, spec);
  EXPECT_EQ(r.code, kExitOk);
  const auto nl = r.out.find('\n');
  EXPECT_EQ(r.out.substr(nl + 1), basis_label(1, 2) + "\n" + basis_label(2, 2) + "\n");
}

TEST(Cli, JordanWignerTable) {
  const Outcome r = invoke({"jw", "-n", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "a1 = 0.5 X1 + 0.5i Y1\na1^dag = 0.5 X1 - 0.5i Y1\n"
            "a2 = 0.5 Z1X2 + 0.5i Z1Y2\na2^dag = 0.5 Z1X2 - 0.5i Z1Y2\n");
}

TEST(Cli, ApproxExitCodes) {
  const std::string h = write_temp(
      "approx.json",
      R"({"n": 2, "terms": [{"paulis": "I", "coeff": 0.3333333333333333},
          {"paulis": "Z1", "coeff": -0.16666666666666666}, {"paulis": "Z2", "coeff": -0.16666666666666666}]})");
  const Outcome and_r = invoke({"approx", "--hamiltonian", h, "-e", "x1 & x2"});
  EXPECT_EQ(and_r.code, kExitOk);
  EXPECT_EQ(and_r.out, "max_error 0.333333333333 at x=10 <= 1/3: ok\n");
  const Outcome or_r = invoke({"approx", "--hamiltonian", h, "-e", "x1 | x2"});
  EXPECT_EQ(or_r.code, kExitVerifyFailed);
  EXPECT_EQ(or_r.out, "max_error 0.666666666667 at x=10 > 1/3: FAIL\n");
}

TEST(Cli, VerifySingleFunction) {
  const Outcome r = invoke({"verify", "-e", "x1 & x2 | x3", "-n", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find(" 0 failed, 0 skipped\n"), std::string::npos);
}

TEST(Cli, ParseErrorsExitOne) {
  EXPECT_EQ(invoke({"compile", "-e", "x1 &", "-n", "1"}).code, kExitParseError);
  EXPECT_EQ(invoke({"compile", "-e", "x3", "-n", "2"}).code, kExitParseError);
  EXPECT_EQ(invoke({"count", "--dimacs", "-"}, "p cnf 2 1\n1 5 0\n").code, kExitParseError);
  EXPECT_EQ(invoke({"bogus"}).code, kExitParseError);
  EXPECT_EQ(invoke({"circuit", "-e", "x1"}).code, kExitParseError);
  EXPECT_EQ(invoke({"compile", "-e", "x1", "--qubo", "-"}, kQubo).code, kExitParseError);
  const Outcome r = invoke({"compile", "-e", "x1 & & x2", "-n", "2"});
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, CapExceededExitsTwo) {
  EXPECT_EQ(invoke({"fourier", "-e", "x1", "-n", "30"}).code, kExitCapExceeded);
  EXPECT_EQ(invoke({"--dense-cap", "15", "verify", "-e", "x1"}).code, kExitParseError);
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, kExitOk); }

TEST(Cli, SettingsAreRestored) {
  const int cap = dense_cap();
  const double eps = prune_epsilon();
  EXPECT_EQ(invoke({"--dense-cap", "2", "--prune-eps", "0.1", "verify", "-e", "x1 & x2 & x3", "-n", "3"}).code,
            kExitOk);
  EXPECT_EQ(dense_cap(), cap);
  EXPECT_EQ(prune_epsilon(), eps);
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  for (const std::vector<std::string>& args :
       std::vector<std::vector<std::string>>{{"compile", "-e", "x1 ^ x2 ^ x3 | x4 & !x1", "-n", "4"},
                                             {"circuit", "-e", "x1 ^ x2 ^ x3", "--gamma", "0.7"},
                                             {"jw", "-n", "3", "--format", "json"},
                                             {"verify", "-e", "x1 => x2"}}) {
    EXPECT_EQ(invoke(args).out, invoke(args).out);
  }
}

}  // namespace
}  // namespace boolham
