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

#include "boolham/fourier.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <json.hpp>

#include "boolham/errors.hpp"
#include "boolham/format.hpp"

namespace boolham {

namespace {

void check_table_size(int n) {
  if (n < 0 || n > kMaxTableVars) {
    throw CapExceeded("dense tables need n <= " + std::to_string(kMaxTableVars) +
                      ", got " + std::to_string(n));
  }
}

int log2_exact(std::size_t size) {
  if (size == 0 || !std::has_single_bit(size)) {
    throw std::invalid_argument("table length " + std::to_string(size) +
                                " is not a power of two");
  }
  return std::countr_zero(size);
}

}  // namespace

TruthTable::TruthTable(int n_vars, std::vector<double> values)
    : n_vars_(n_vars), values_(std::move(values)) {
  check_table_size(n_vars);
  if (values_.size() != (std::size_t{1} << n_vars)) {
    throw DimensionMismatch("truth table length must be 2^n");
  }
}

TruthTable TruthTable::of(const BoolExpr& e, int n_vars) {
  const auto bits = truth_table(e, n_vars);
  return TruthTable(n_vars, std::vector<double>(bits.begin(), bits.end()));
}

TruthTable TruthTable::parse_bits(std::string_view bits) {
  std::vector<double> values;
  values.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '0' || bits[i] == '1') {
      values.push_back(bits[i] == '1' ? 1.0 : 0.0);
    } else if (!std::isspace(static_cast<unsigned char>(bits[i]))) {
      throw ParseError("truth table strings contain only 0 and 1", i);
    }
  }
  const int n = log2_exact(values.size());
  check_table_size(n);
  return TruthTable(n, std::move(values));
}

TruthTable TruthTable::parse_json(std::string_view json) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("truth table JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_array()) throw ParseError("truth table JSON must be an array");
  std::vector<double> values;
  values.reserve(doc.size());
  for (const auto& v : doc) {
    if (!v.is_number()) throw ParseError("truth table JSON entries must be numbers");
    values.push_back(v.get<double>());
  }
  const int n = log2_exact(values.size());
  check_table_size(n);
  return TruthTable(n, std::move(values));
}

void walsh_hadamard(std::span<double> data) {
  const std::size_t size = data.size();
  log2_exact(size);
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const double a = data[i];
        const double b = data[i + half];
        data[i] = a + b;
        data[i + half] = a - b;
      }
    }
  }
}

DiagonalHamiltonian fourier_from_table(const TruthTable& t) {
  std::vector<double> coeffs(t.values().begin(), t.values().end());
  walsh_hadamard(coeffs);
  const double scale = std::ldexp(1.0, -t.n_vars());
  std::vector<DiagonalHamiltonian::Term> terms;
  for (std::size_t s = 0; s < coeffs.size(); ++s) {
    if (coeffs[s] != 0.0) terms.emplace_back(ZTermKey(s), coeffs[s] * scale);
  }
  return DiagonalHamiltonian(t.n_vars(), std::move(terms));
}

TruthTable table_from_fourier(const DiagonalHamiltonian& h) {
  check_table_size(h.n_qubits());
  std::vector<double> values(std::size_t{1} << h.n_qubits(), 0.0);
  for (const auto& [key, c] : h.terms()) values[key.mask()] = c;
  walsh_hadamard(values);
  return TruthTable(h.n_qubits(), std::move(values));
}

std::uint64_t count_models(const DiagonalHamiltonian& h) {
  if (max_coefficient_distance(h * h, h) > 1e-6) {
    throw NotBoolean("Hamiltonian is not a projector, so it does not represent a "
                     "Boolean function");
  }
  const double scaled = std::ldexp(h.identity_coefficient(), h.n_qubits());
  return static_cast<std::uint64_t>(std::llround(scaled));
}

std::string basis_label(std::uint64_t x, int n_bits) {
  std::string s(static_cast<std::size_t>(n_bits), '0');
  for (int q = 0; q < n_bits; ++q) {
    if ((x >> q) & 1U) s[q] = '1';
  }
  return s;
}

std::string ApproxReport::describe(int n_vars) const {
  return "max_error " + format_real(max_error, 12) + " at x=" +
         basis_label(worst_input, n_vars) + (ok ? " <= 1/3: ok" : " > 1/3: FAIL");
}

ApproxReport check_approx(const DiagonalHamiltonian& approx, const BoolExpr& f) {
  const int n = approx.n_qubits();
  check_table_size(n);
  if (f.max_var() > n) {
    throw DimensionMismatch("function uses more variables than the approximation");
  }
  const TruthTable values = table_from_fourier(approx);
  ApproxReport report;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    const double err = std::abs(values[x] - (f.evaluate(x) ? 1.0 : 0.0));
    // Ties within rounding keep the first input so reports are stable.
    if (err > report.max_error + 1e-12) report.worst_input = x;
    report.max_error = std::max(report.max_error, err);
  }
  report.ok = report.max_error <= 1.0 / 3.0 + 1e-12;
  return report;
}

}  // namespace boolham
