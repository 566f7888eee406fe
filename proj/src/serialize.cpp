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


#include "boolham/serialize.hpp"

#include <cmath>
#include <json.hpp>

#include "boolham/boolexpr.hpp"
#include "boolham/errors.hpp"
#include "boolham/format.hpp"

namespace boolham {

namespace {

using nlohmann::json;

constexpr int kDigits = 12;

std::string compact_label(const PauliString& s) {
  std::string label = s.to_string();
  std::erase(label, ' ');
  return label;
}

// Joins "<coeff> <label>" pieces, folding a leading minus into " - ".
void append_real(std::string& out, double c, const std::string& label) {
  if (out.empty()) {
    out = format_real(c, kDigits);
  } else {
    out += c < 0 ? " - " : " + ";
    out += format_real(std::abs(c), kDigits);
  }
  out += ' ' + label;
}

json parse_document(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what(), e.byte);
  }
}

const json& field(const json& doc, const char* key, const char* what) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw ParseError(std::string(what) + ": missing \"" + key + "\"");
  }
  return doc.at(key);
}

double real_of(const json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string(what) + ": expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(std::string(what) + ": non-finite number");
  return d;
}

int register_size(const json& doc, const char* what, int max) {
  const json& n = field(doc, "n", what);
  if (!n.is_number_integer() || n.get<long long>() < 0 || n.get<long long>() > max) {
    throw ParseError(std::string(what) + ": \"n\" must be an integer in [0, " +
                     std::to_string(max) + "]");
  }
  return n.get<int>();
}

std::vector<PauliOperator::Term> read_terms(const json& doc, int n, const char* what) {
  const json& terms = field(doc, "terms", what);
  if (!terms.is_array()) throw ParseError(std::string(what) + ": \"terms\" must be an array");
  std::vector<PauliOperator::Term> out;
  for (const json& t : terms) {
    const json& paulis = field(t, "paulis", what);
    if (!paulis.is_string()) throw ParseError(std::string(what) + ": \"paulis\" must be a string");
    const json& coeff = field(t, "coeff", what);
    Complex c;
    if (coeff.is_array()) {
      if (coeff.size() != 2) throw ParseError(std::string(what) + ": complex coeff is [re, im]");
      c = {real_of(coeff[0], what), real_of(coeff[1], what)};
    } else {
      c = real_of(coeff, what);
    }
    out.emplace_back(PauliString::parse(paulis.get<std::string>(), n), c);
  }
  return out;
}

}  // namespace

std::string to_text(const DiagonalHamiltonian& h) {
  std::string out;
  for (const auto& [key, c] : h.terms()) {
    append_real(out, c, compact_label(PauliString(h.n_qubits(), 0, key.mask())));
  }
  return out.empty() ? "0" : out;
}

std::string to_text(const PauliOperator& p) {
  std::string out;
  for (const auto& [s, c] : p.terms()) {
    const std::string label = compact_label(s);
    if (c.imag() == 0.0) {
      append_real(out, c.real(), label);
      continue;
    }
    if (c.real() == 0.0) {
      append_real(out, c.imag(), label);
      out.insert(out.size() - label.size() - 1, "i");
      continue;
    }
    if (!out.empty()) out += " + ";
    out += '(' + format_real(c.real(), kDigits) + (c.imag() < 0 ? "-" : "+") +
           format_real(std::abs(c.imag()), kDigits) + "i) " + label;
  }
  return out.empty() ? "0" : out;
}

std::string to_json(const DiagonalHamiltonian& h) {
  json terms = json::array();
  for (const auto& [key, c] : h.terms()) {
    terms.push_back({{"paulis", PauliString(h.n_qubits(), 0, key.mask()).to_string()},
                     {"coeff", c}});
  }
  return json{{"n", h.n_qubits()}, {"terms", terms}}.dump(2);
}

std::string to_json(const PauliOperator& p) {
  json terms = json::array();
  for (const auto& [s, c] : p.terms()) {
    json coeff = c.imag() == 0.0 ? json(c.real()) : json::array({c.real(), c.imag()});
    terms.push_back({{"paulis", s.to_string()}, {"coeff", coeff}});
  }
  return json{{"n", p.n_qubits()}, {"terms", terms}}.dump(2);
}

DiagonalHamiltonian parse_hamiltonian_json(std::string_view text) {
  constexpr const char* what = "Hamiltonian JSON";
  const json doc = parse_document(text, what);
  const int n = register_size(doc, what, kMaxSparseQubits);
  std::vector<DiagonalHamiltonian::Term> terms;
  for (const auto& [s, c] : read_terms(doc, n, what)) {
    if (!s.is_diagonal()) throw ParseError(std::string(what) + ": X or Y in a diagonal Hamiltonian");
    if (c.imag() != 0.0) throw ParseError(std::string(what) + ": complex coefficient");
    terms.emplace_back(ZTermKey(s.z_mask()), c.real());
  }
  return DiagonalHamiltonian(n, std::move(terms));
}

PauliOperator parse_pauli_json(std::string_view text) {
  constexpr const char* what = "Pauli operator JSON";
  const json doc = parse_document(text, what);
  const int n = register_size(doc, what, kMaxSparseQubits);
  return PauliOperator(n, read_terms(doc, n, what));
}

QuboInstance parse_qubo_json(std::string_view text) {
  constexpr const char* what = "QUBO JSON";
  const json doc = parse_document(text, what);
  const int n = register_size(doc, what, kMaxSparseQubits);
  const double a = doc.contains("a") ? real_of(doc.at("a"), what) : 0.0;
  std::vector<double> linear(n, 0.0);
  if (doc.contains("linear")) {
    const json& lin = doc.at("linear");
    if (!lin.is_array() || lin.size() != static_cast<std::size_t>(n)) {
      throw ParseError(std::string(what) + ": \"linear\" must hold n numbers");
    }
    for (int j = 0; j < n; ++j) linear[j] = real_of(lin[j], what);
  }
  std::vector<std::vector<double>> quad(n, std::vector<double>(n, 0.0));
  if (doc.contains("quadratic")) {
    const json& q = doc.at("quadratic");
    if (!q.is_array()) throw ParseError(std::string(what) + ": \"quadratic\" must be an array");
    for (const json& e : q) {
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        throw ParseError(std::string(what) + ": quadratic entries are [j, k, d]");
      }
      const long long j = e[0].get<long long>();
      const long long k = e[1].get<long long>();
      if (j < 1 || k < 1 || j > n || k > n || j == k) {
        throw ParseError(std::string(what) + ": quadratic index out of range or diagonal");
      }
      const double d = real_of(e[2], what);
      quad[j - 1][k - 1] += d;
      quad[k - 1][j - 1] += d;
    }
  }
  return QuboInstance(n, a, std::move(linear), std::move(quad));
}

std::string to_json(const QuboInstance& q) {
  const int n = q.n_vars();
  json linear = json::array();
  json quadratic = json::array();
  for (int j = 0; j < n; ++j) {
    linear.push_back(q.linear(j));
    for (int k = j + 1; k < n; ++k) {
      if (q.quadratic(j, k) != 0.0) quadratic.push_back({j + 1, k + 1, q.quadratic(j, k)});
    }
  }
  return json{{"n", n}, {"a", q.constant()}, {"linear", linear}, {"quadratic", quadratic}}
      .dump(2);
}

PenaltySpec parse_penalty_json(std::string_view text) {
  constexpr const char* what = "penalty JSON";
  const json doc = parse_document(text, what);
  const int n = register_size(doc, what, kMaxSparseQubits);
  auto expr_of = [&](const json& obj, const char* key) {
    const json& s = field(obj, key, what);
    if (!s.is_string()) throw ParseError(std::string(what) + ": \"" + key + "\" must be a string");
    return parse_expr(s.get<std::string>(), n);
  };
  PseudoBooleanObjective objective{n, {}};
  if (doc.contains("objective")) {
    const json& obj = doc.at("objective");
    if (!obj.is_array()) throw ParseError(std::string(what) + ": \"objective\" must be an array");
    for (const json& c : obj) {
      objective.clauses.push_back({real_of(field(c, "weight", what), what), expr_of(c, "expr")});
    }
  }
  PenaltySpec spec{compile_pseudo(objective, n), {}};
  const json& pens = field(doc, "penalties", what);
  if (!pens.is_array()) throw ParseError(std::string(what) + ": \"penalties\" must be an array");
  for (const json& p : pens) {
    std::optional<double> w;
    if (p.contains("weight")) w = real_of(p.at("weight"), what);
    spec.penalties.push_back({w, expr_of(p, "constraint")});
  }
  return spec;
}

}  // namespace boolham
