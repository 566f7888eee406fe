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

#include <set>

#include "boolham/oracle.hpp"
#include "boolham/verify.hpp"

namespace boolham {
namespace {

class CapGuard {
 public:
  CapGuard() : saved_(dense_cap()) {}
  ~CapGuard() { set_dense_cap(saved_); }

 private:
  int saved_;
};

std::size_t count_status(const VerifyReport& r, VerifyCheck::Status s) {
  std::size_t k = 0;
  for (const VerifyCheck& c : r.checks) k += c.status == s;
  return k;
}

TEST(Corpus, Composition) {
  const Corpus c = bundled_corpus();
  EXPECT_EQ(closed_form_functions().size(), 14u);
  EXPECT_EQ(c.functions.size(), 14u + 50u);
  EXPECT_EQ(c.qubos.size(), 20u);
  std::set<std::string> names;
  for (const CorpusFunction& f : c.functions) {
    names.insert(f.name);
    EXPECT_GE(f.n_vars, f.expr.max_var());
  }
  EXPECT_EQ(names.size(), c.functions.size());
}

TEST(Corpus, ClosedFormTruthTables) {
  // Expected truth tables as bit strings, x1 the least significant bit.
  const std::vector<std::pair<std::string, std::uint64_t>> want = {
      {"maj3", 0b11101000}, {"nae3", 0b01111110}, {"1in3", 0b00010110}, {"mod3", 0b10000001}};
  const auto fs = closed_form_functions();
  for (const auto& [name, table] : want) {
    auto it = std::find_if(fs.begin(), fs.end(), [&](const CorpusFunction& f) { return f.name == name; });
    ASSERT_NE(it, fs.end()) << name;
    for (std::uint64_t v = 0; v < 8; ++v) EXPECT_EQ(it->expr.evaluate(v), bool((table >> v) & 1)) << name;
  }
}

TEST(Corpus, Deterministic) {
  const Corpus a = bundled_corpus();
  const Corpus b = bundled_corpus();
  for (std::size_t i = 0; i < a.functions.size(); ++i) EXPECT_EQ(a.functions[i].expr, b.functions[i].expr);
  for (std::size_t i = 0; i < a.qubos.size(); ++i) {
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << a.qubos[i].n_vars()); ++v) {
      EXPECT_EQ(a.qubos[i].evaluate(v), b.qubos[i].evaluate(v));
    }
  }
}

TEST(VerifyCorpus, AllChecksPassWithoutSkips) {
  const VerifyReport r = verify_corpus(bundled_corpus());
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.failures(), 0u);
  EXPECT_EQ(count_status(r, VerifyCheck::Status::kSkip), 0u);
  EXPECT_GT(r.checks.size(), 1000u);
  for (const VerifyCheck& c : r.checks) EXPECT_LE(c.residual, kVerifyTolerance) << c.subject << ": " << c.name;
}

TEST(VerifyFunction, SmallCapSkipsFromTheFirstOversizedRegister) {
  CapGuard guard;
  const BoolExpr f = parse_expr("x1 & x2 & x3", 3);
  set_dense_cap(4);
  VerifyReport r = verify_function(f, 3, "and3");
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(count_status(r, VerifyCheck::Status::kSkip), 1u);
  EXPECT_NE(r.to_text().find("SKIP and3: controlled evolution"), std::string::npos);
  set_dense_cap(3);
  r = verify_function(f, 3, "and3");
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(count_status(r, VerifyCheck::Status::kSkip), 1u);
  EXPECT_NE(r.to_text().find("SKIP and3: bit query"), std::string::npos);
  set_dense_cap(2);
  r = verify_function(f, 3, "and3");
  EXPECT_NE(r.to_text().find("SKIP and3: dense checks"), std::string::npos);
}

TEST(VerifyReport, TextFormat) {
  VerifyReport r;
  r.checks.push_back({"f", "a", 0.0, VerifyCheck::Status::kPass});
  r.checks.push_back({"f", "b", 0.5, VerifyCheck::Status::kFail});
  r.checks.push_back({"g", "c", 0.0, VerifyCheck::Status::kSkip});
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failures(), 1u);
  EXPECT_EQ(r.to_text(), "PASS f: a  residual 0\nFAIL f: b  residual 0.5\nSKIP g: c\n3 checks, 1 failed, 1 skipped\n");
}

TEST(VerifyQubo, SingleVariable) {
  const VerifyReport r = verify_qubo(QuboInstance(1, 2.0, {3.0}), "q");
  EXPECT_TRUE(r.passed());
}

}  // namespace
}  // namespace boolham
