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

#include "boolham/pauli_core.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <unordered_map>

#include "boolham/errors.hpp"

namespace boolham {

namespace {

std::atomic<double> g_prune_epsilon{kDefaultPruneEpsilon};

void check_register(int n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxSparseQubits) {
    throw CapExceeded("register of " + std::to_string(n_qubits) +
                      " qubits outside [0, " +
                      std::to_string(kMaxSparseQubits) + "]");
  }
}

std::uint64_t register_mask(int n_qubits) {
  return n_qubits == 64 ? ~std::uint64_t{0}
                        : (std::uint64_t{1} << n_qubits) - 1;
}

bool keep(double c, double eps) { return c != 0.0 && std::abs(c) >= eps; }

void check_same_register(const DiagonalHamiltonian& a,
                         const DiagonalHamiltonian& b, const char* op) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionMismatch(std::string(op) + ": qubit counts differ (" +
                            std::to_string(a.n_qubits()) + " vs " +
                            std::to_string(b.n_qubits()) + ")");
  }
}

}  // namespace

double prune_epsilon() noexcept { return g_prune_epsilon.load(); }

void set_prune_epsilon(double eps) {
  if (!std::isfinite(eps) || eps < 0.0) {
    throw std::invalid_argument("prune epsilon must be finite and >= 0");
  }
  g_prune_epsilon.store(eps);
}

DiagonalHamiltonian::DiagonalHamiltonian(int n_qubits) : n_qubits_(n_qubits) {
  check_register(n_qubits);
}

DiagonalHamiltonian::DiagonalHamiltonian(int n_qubits, std::vector<Term> terms)
    : n_qubits_(n_qubits) {
  check_register(n_qubits);
  const std::uint64_t allowed = register_mask(n_qubits);
  for (const auto& [key, c] : terms) {
    if (key.mask() & ~allowed) {
      throw std::invalid_argument("term touches a qubit outside the register");
    }
    if (!std::isfinite(c)) {
      throw std::invalid_argument("non-finite coefficient");
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  const double eps = prune_epsilon();
  terms_.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    const ZTermKey key = terms[i].first;
    double sum = 0.0;
    for (; i < terms.size() && terms[i].first == key; ++i) sum += terms[i].second;
    if (keep(sum, eps)) terms_.emplace_back(key, sum);
  }
}

DiagonalHamiltonian DiagonalHamiltonian::zero(int n_qubits) {
  return DiagonalHamiltonian(n_qubits);
}

DiagonalHamiltonian DiagonalHamiltonian::identity(int n_qubits, double weight) {
  return DiagonalHamiltonian(n_qubits, {{ZTermKey{}, weight}});
}

DiagonalHamiltonian DiagonalHamiltonian::z(int n_qubits, int qubit) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::out_of_range("qubit " + std::to_string(qubit) +
                            " outside register of " +
                            std::to_string(n_qubits));
  }
  return DiagonalHamiltonian(n_qubits, {{ZTermKey::single(qubit), 1.0}});
}

DiagonalHamiltonian DiagonalHamiltonian::bit(int n_qubits, int qubit) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::out_of_range("qubit " + std::to_string(qubit) +
                            " outside register of " +
                            std::to_string(n_qubits));
  }
  return DiagonalHamiltonian(
      n_qubits, {{ZTermKey{}, 0.5}, {ZTermKey::single(qubit), -0.5}});
}

double DiagonalHamiltonian::coefficient(ZTermKey key) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), key,
      [](const Term& t, ZTermKey k) { return t.first < k; });
  return (it != terms_.end() && it->first == key) ? it->second : 0.0;
}

int DiagonalHamiltonian::degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.degree());
  return d;
}

double DiagonalHamiltonian::evaluate(std::uint64_t x) const {
  if (n_qubits_ < 64 && (x >> n_qubits_) != 0) {
    throw std::out_of_range("basis index outside register");
  }
  double v = 0.0;
  for (const auto& [key, c] : terms_) v += key.character(x) * c;
  return v;
}

double DiagonalHamiltonian::evaluate(std::string_view bits) const {
  if (static_cast<int>(bits.size()) != n_qubits_) {
    throw DimensionMismatch("basis string has length " +
                            std::to_string(bits.size()) + ", expected " +
                            std::to_string(n_qubits_));
  }
  std::uint64_t x = 0;
  for (std::size_t q = 0; q < bits.size(); ++q) {
    if (bits[q] == '1') {
      x |= std::uint64_t{1} << q;
    } else if (bits[q] != '0') {
      throw std::invalid_argument("basis string must contain only 0 and 1");
    }
  }
  return evaluate(x);
}

double DiagonalHamiltonian::one_norm() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.second);
  return s;
}

double DiagonalHamiltonian::squared_norm() const {
  double s = 0.0;
  for (const auto& t : terms_) s += t.second * t.second;
  return s;
}

double DiagonalHamiltonian::coefficient_sum() const {
  double s = 0.0;
  for (const auto& t : terms_) s += t.second;
  return s;
}

DiagonalHamiltonian operator+(const DiagonalHamiltonian& a,
                              const DiagonalHamiltonian& b) {
  check_same_register(a, b, "add");
  const double eps = prune_epsilon();
  DiagonalHamiltonian out(a.n_qubits_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first)) {
      out.terms_.push_back(*ia++);
    } else if (ia == a.terms_.end() || ib->first < ia->first) {
      out.terms_.push_back(*ib++);
    } else {
      const double c = ia->second + ib->second;
      if (keep(c, eps)) out.terms_.emplace_back(ia->first, c);
      ++ia;
      ++ib;
    }
  }
  return out;
}

DiagonalHamiltonian operator-(const DiagonalHamiltonian& a,
                              const DiagonalHamiltonian& b) {
  check_same_register(a, b, "subtract");
  return a + (-1.0) * b;
}

DiagonalHamiltonian operator*(const DiagonalHamiltonian& a,
                              const DiagonalHamiltonian& b) {
  check_same_register(a, b, "multiply");
  if (a.is_zero() || b.is_zero()) return DiagonalHamiltonian(a.n_qubits_);
  std::unordered_map<std::uint64_t, double> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), std::size_t{1} << 22));
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) acc[(ka * kb).mask()] += ca * cb;
  }
  std::vector<DiagonalHamiltonian::Term> terms;
  terms.reserve(acc.size());
  for (const auto& [mask, c] : acc) terms.emplace_back(ZTermKey(mask), c);
  return DiagonalHamiltonian(a.n_qubits_, std::move(terms));
}

DiagonalHamiltonian operator*(double w, const DiagonalHamiltonian& a) {
  if (!std::isfinite(w)) throw std::invalid_argument("non-finite scale factor");
  const double eps = prune_epsilon();
  DiagonalHamiltonian out(a.n_qubits_);
  if (w == 0.0) return out;
  out.terms_.reserve(a.terms_.size());
  for (const auto& [key, c] : a.terms_) {
    const double s = w * c;
    if (keep(s, eps)) out.terms_.emplace_back(key, s);
  }
  return out;
}

double max_coefficient_distance(const DiagonalHamiltonian& a,
                                const DiagonalHamiltonian& b) {
  check_same_register(a, b, "compare");
  double worst = 0.0;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  while (ia != a.terms().end() || ib != b.terms().end()) {
    if (ib == b.terms().end() ||
        (ia != a.terms().end() && ia->first < ib->first)) {
      worst = std::max(worst, std::abs(ia->second));
      ++ia;
    } else if (ia == a.terms().end() || ib->first < ia->first) {
      worst = std::max(worst, std::abs(ib->second));
      ++ib;
    } else {
      worst = std::max(worst, std::abs(ia->second - ib->second));
      ++ia;
      ++ib;
    }
  }
  return worst;
}

bool approx_equal(const DiagonalHamiltonian& a, const DiagonalHamiltonian& b,
                  double tol) {
  return a.n_qubits() == b.n_qubits() && max_coefficient_distance(a, b) <= tol;
}

DiagonalHamiltonian tensor(const DiagonalHamiltonian& low,
                           const DiagonalHamiltonian& high) {
  const int n = low.n_qubits() + high.n_qubits();
  check_register(n);
  std::vector<DiagonalHamiltonian::Term> terms;
  terms.reserve(low.size() * high.size());
  for (const auto& [kl, cl] : low.terms()) {
    for (const auto& [kh, ch] : high.terms()) {
      terms.emplace_back(ZTermKey(kl.mask() | (kh.mask() << low.n_qubits())),
                         cl * ch);
    }
  }
  return DiagonalHamiltonian(n, std::move(terms));
}

DiagonalHamiltonian widen(const DiagonalHamiltonian& h, int n_qubits) {
  if (n_qubits < h.n_qubits()) {
    throw DimensionMismatch("cannot narrow a register");
  }
  return DiagonalHamiltonian(
      n_qubits, std::vector<DiagonalHamiltonian::Term>(h.terms().begin(),
                                                       h.terms().end()));
}

}  // namespace boolham
