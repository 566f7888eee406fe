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

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <string>

#include "boolham/boolexpr.hpp"
#include "boolham/errors.hpp"

namespace boolham {

namespace {

struct Token {
  std::string_view text;
  std::size_t offset;
};

// Splits one line into whitespace separated tokens with absolute offsets.
std::vector<Token> tokenize(std::string_view line, std::size_t base) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back({line.substr(start, i - start), base + start});
  }
  return out;
}

std::optional<long long> to_integer(std::string_view s) {
  long long v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<double> to_real(std::string_view s) {
  std::string buf(s);
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

}  // namespace

DimacsProblem parse_dimacs(std::string_view text) {
  bool have_header = false;
  bool weighted = false;
  long long n_vars = 0;
  long long n_clauses = 0;

  DimacsProblem out{{}, BoolExpr::constant(true)};
  std::vector<BoolExpr> clause_exprs;
  std::vector<BoolExpr> literals;
  double weight = 1.0;
  bool have_weight = false;
  std::size_t clause_start = 0;

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);
    const auto tokens = tokenize(line, line_start);
    const std::size_t next = line_end + 1;

    if (tokens.empty() || tokens[0].text[0] == 'c') {
      line_start = next;
      continue;
    }
    if (tokens[0].text[0] == '%') break;

    if (tokens[0].text == "p") {
      if (have_header) throw ParseError("duplicate problem line", tokens[0].offset);
      if (tokens.size() < 4 || (tokens[1].text != "cnf" && tokens[1].text != "wcnf")) {
        throw ParseError("malformed header, expected 'p cnf <vars> <clauses>'",
                         tokens[0].offset);
      }
      weighted = tokens[1].text == "wcnf";
      const auto nv = to_integer(tokens[2].text);
      const auto nc = to_integer(tokens[3].text);
      if (!nv || !nc || *nv < 0 || *nc < 0) {
        throw ParseError("malformed header counts", tokens[2].offset);
      }
      if (tokens.size() > (weighted ? 5u : 4u)) {
        throw ParseError("malformed header, trailing tokens", tokens[4].offset);
      }
      if (weighted && tokens.size() == 5 && !to_real(tokens[4].text)) {
        throw ParseError("malformed top weight", tokens[4].offset);
      }
      n_vars = *nv;
      n_clauses = *nc;
      have_header = true;
      line_start = next;
      continue;
    }

    if (!have_header) {
      throw ParseError("clause before 'p cnf' header", tokens[0].offset);
    }

    for (const Token& tok : tokens) {
      if (weighted && !have_weight) {
        const auto w = to_real(tok.text);
        if (!w) throw ParseError("malformed clause weight", tok.offset);
        weight = *w;
        have_weight = true;
        clause_start = tok.offset;
        continue;
      }
      const auto lit = to_integer(tok.text);
      if (!lit) throw ParseError("malformed literal '" + std::string(tok.text) + "'", tok.offset);
      if (literals.empty() && !weighted) clause_start = tok.offset;
      if (*lit == 0) {
        BoolExpr clause = BoolExpr::any_of(std::move(literals));
        literals.clear();
        out.objective.clauses.push_back({weight, clause});
        clause_exprs.push_back(std::move(clause));
        weight = 1.0;
        have_weight = false;
        continue;
      }
      if (std::llabs(*lit) > n_vars) {
        throw ParseError("literal " + std::to_string(*lit) + " outside 1.." +
                             std::to_string(n_vars),
                         tok.offset);
      }
      BoolExpr v = BoolExpr::var(static_cast<int>(std::llabs(*lit)));
      literals.push_back(*lit > 0 ? v : BoolExpr::negate(v));
    }
    line_start = next;
  }

  if (!have_header) throw ParseError("missing 'p cnf' header", 0);
  if (!literals.empty() || have_weight) {
    throw ParseError("clause missing terminating 0", clause_start);
  }
  if (static_cast<long long>(out.objective.clauses.size()) != n_clauses) {
    throw ParseError("header declares " + std::to_string(n_clauses) +
                     " clauses but " +
                     std::to_string(out.objective.clauses.size()) + " were read");
  }
  out.objective.n_vars = static_cast<int>(n_vars);
  out.formula = BoolExpr::all_of(std::move(clause_exprs));
  return out;
}

}  // namespace boolham
