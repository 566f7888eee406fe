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

#include "boolham/pauli_operator.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <map>

#include "boolham/errors.hpp"

namespace boolham {

namespace {

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_register(int n_qubits) {
  if (n_qubits < 0 || n_qubits > kMaxSparseQubits) {
    throw CapExceeded("register of " + std::to_string(n_qubits) +
                      " qubits outside [0, " +
                      std::to_string(kMaxSparseQubits) + "]");
  }
}

std::uint64_t register_mask(int n_qubits) {
  return (std::uint64_t{1} << n_qubits) - 1;
}

// Cyclic code X=1, Y=2, Z=3 so that a*b = +i c when b follows a.
int letter_code(bool x, bool z) { return x ? (z ? 2 : 1) : (z ? 3 : 0); }

void check_qubit(int n_qubits, int qubit) {
  if (qubit < 0 || qubit >= n_qubits) {
    throw std::out_of_range("qubit index " + std::to_string(qubit) +
                            " outside register of " + std::to_string(n_qubits));
  }
}

void check_same_register(int a, int b, const char* op) {
  if (a != b) {
    throw DimensionMismatch(std::string(op) + ": qubit counts differ (" +
                            std::to_string(a) + " vs " + std::to_string(b) +
                            ")");
  }
}

}  // namespace

PauliString::PauliString(int n_qubits, std::uint64_t x_mask,
                         std::uint64_t z_mask, int phase)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask), phase_(((phase % 4) + 4) % 4) {
  check_register(n_qubits);
  if ((x_mask | z_mask) & ~register_mask(n_qubits)) {
    throw std::invalid_argument("Pauli string touches a qubit outside the register");
  }
}

PauliString PauliString::identity(int n_qubits) { return {n_qubits, 0, 0, 0}; }

PauliString PauliString::single(int n_qubits, int qubit, Pauli p) {
  check_qubit(n_qubits, qubit);
  const std::uint64_t bit = std::uint64_t{1} << qubit;
  switch (p) {
    case Pauli::I: return {n_qubits, 0, 0};
    case Pauli::X: return {n_qubits, bit, 0};
    case Pauli::Y: return {n_qubits, bit, bit};
    case Pauli::Z: return {n_qubits, 0, bit};
  }
  return {n_qubits, 0, 0};
}

PauliString PauliString::parse(std::string_view text, int n_qubits) {
  std::uint64_t x = 0, z = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == 'I' && (i + 1 == text.size() || !std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      ++i;
      continue;
    }
    if (c != 'X' && c != 'Y' && c != 'Z') {
      throw ParseError("expected one of I, X, Y, Z in Pauli string", i);
    }
    const std::size_t start = i++;
    int q = 0;
    if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      throw ParseError("Pauli letter without qubit index", start);
    }
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      q = q * 10 + (text[i++] - '0');
      if (q > kMaxSparseQubits) break;
    }
    if (q < 1 || q > n_qubits) {
      throw ParseError("qubit index out of range in Pauli string", start);
    }
    const std::uint64_t bit = std::uint64_t{1} << (q - 1);
    if ((x | z) & bit) throw ParseError("qubit repeated in Pauli string", start);
    if (c != 'Z') x |= bit;
    if (c != 'X') z |= bit;
  }
  return {n_qubits, x, z, 0};
}

Pauli PauliString::at(int qubit) const {
  const bool xb = (x_ >> qubit) & 1U;
  const bool zb = (z_ >> qubit) & 1U;
  if (xb && zb) return Pauli::Y;
  if (xb) return Pauli::X;
  if (zb) return Pauli::Z;
  return Pauli::I;
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

Complex PauliString::phase_factor() const { return kIPowers[phase_]; }

std::string PauliString::to_string() const {
  std::string out;
  for (int q = 0; q < n_qubits_; ++q) {
    const Pauli p = at(q);
    if (p == Pauli::I) continue;
    if (!out.empty()) out += ' ';
    out += "IXYZ"[static_cast<int>(p)];
    out += std::to_string(q + 1);
  }
  return out.empty() ? "I" : out;
}

PauliString operator*(const PauliString& a, const PauliString& b) {
  check_same_register(a.n_qubits_, b.n_qubits_, "Pauli string product");
  int phase = a.phase_ + b.phase_;
  std::uint64_t both = (a.x_ | a.z_) & (b.x_ | b.z_);
  while (both) {
    const int q = std::countr_zero(both);
    both &= both - 1;
    const int ca = letter_code((a.x_ >> q) & 1U, (a.z_ >> q) & 1U);
    const int cb = letter_code((b.x_ >> q) & 1U, (b.z_ >> q) & 1U);
    if (ca == cb) continue;
    phase += ((cb - ca + 3) % 3 == 1) ? 1 : 3;
  }
  return {a.n_qubits_, a.x_ ^ b.x_, a.z_ ^ b.z_, phase};
}

bool anticommutes(const PauliString& a, const PauliString& b) {
  return std::popcount((a.x_ & b.z_) ^ (a.z_ & b.x_)) & 1;
}

PauliOperator::PauliOperator(int n_qubits) : n_qubits_(n_qubits) {
  check_register(n_qubits);
}

PauliOperator::PauliOperator(int n_qubits, std::vector<Term> terms)
    : n_qubits_(n_qubits) {
  check_register(n_qubits);
  for (auto& [s, c] : terms) {
    check_same_register(n_qubits, s.n_qubits(), "Pauli operator term");
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw std::invalid_argument("non-finite coefficient");
    }
    c *= s.phase_factor();
    s = s.canonical();
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return canonical_less(a.first, b.first);
  });
  const double eps = prune_epsilon();
  for (std::size_t i = 0; i < terms.size();) {
    const PauliString key = terms[i].first;
    Complex sum = 0.0;
    for (; i < terms.size() && terms[i].first == key; ++i) sum += terms[i].second;
    if (sum != Complex(0.0) && std::abs(sum) >= eps) terms_.emplace_back(key, sum);
  }
}

PauliOperator PauliOperator::identity(int n_qubits, Complex weight) {
  return PauliOperator(n_qubits, {{PauliString::identity(n_qubits), weight}});
}

PauliOperator PauliOperator::from_string(const PauliString& s, Complex weight) {
  return PauliOperator(s.n_qubits(), {{s, weight}});
}

PauliOperator PauliOperator::from_diagonal(const DiagonalHamiltonian& h) {
  std::vector<Term> terms;
  terms.reserve(h.size());
  for (const auto& [key, c] : h.terms()) {
    terms.emplace_back(PauliString(h.n_qubits(), 0, key.mask()), c);
  }
  return PauliOperator(h.n_qubits(), std::move(terms));
}

Complex PauliOperator::coefficient(const PauliString& s) const {
  check_same_register(n_qubits_, s.n_qubits(), "coefficient lookup");
  const PauliString key = s.canonical();
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, const PauliString& k) {
                               return canonical_less(t.first, k);
                             });
  if (it == terms_.end() || !(it->first == key)) return 0.0;
  return it->second / s.phase_factor();
}

PauliOperator PauliOperator::adjoint() const {
  PauliOperator out(n_qubits_);
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second = std::conj(t.second);
  return out;
}

bool PauliOperator::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(), [tol](const Term& t) {
    return std::abs(t.second.imag()) <= tol;
  });
}

bool PauliOperator::is_diagonal() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.first.is_diagonal(); });
}

DiagonalHamiltonian PauliOperator::to_diagonal(double tol) const {
  std::vector<DiagonalHamiltonian::Term> out;
  out.reserve(terms_.size());
  for (const auto& [s, c] : terms_) {
    if (!s.is_diagonal()) {
      throw std::invalid_argument("operator has off-diagonal term " + s.to_string());
    }
    if (std::abs(c.imag()) > tol) {
      throw std::invalid_argument("operator has complex coefficient on " + s.to_string());
    }
    out.emplace_back(ZTermKey(s.z_mask()), c.real());
  }
  return DiagonalHamiltonian(n_qubits_, std::move(out));
}

PauliOperator operator+(const PauliOperator& a, const PauliOperator& b) {
  check_same_register(a.n_qubits_, b.n_qubits_, "add");
  std::vector<PauliOperator::Term> terms(a.terms_);
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return PauliOperator(a.n_qubits_, std::move(terms));
}

PauliOperator operator-(const PauliOperator& a, const PauliOperator& b) {
  return a + Complex(-1.0) * b;
}

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  check_same_register(a.n_qubits_, b.n_qubits_, "multiply");
  std::map<std::pair<std::uint64_t, std::uint64_t>, Complex> acc;
  for (const auto& [sa, ca] : a.terms_) {
    for (const auto& [sb, cb] : b.terms_) {
      const PauliString p = sa * sb;
      acc[{p.x_mask(), p.z_mask()}] += ca * cb * p.phase_factor();
    }
  }
  std::vector<PauliOperator::Term> terms;
  terms.reserve(acc.size());
  for (const auto& [key, c] : acc) {
    terms.emplace_back(PauliString(a.n_qubits_, key.first, key.second), c);
  }
  return PauliOperator(a.n_qubits_, std::move(terms));
}

PauliOperator operator*(Complex w, const PauliOperator& a) {
  std::vector<PauliOperator::Term> terms(a.terms_);
  for (auto& t : terms) t.second *= w;
  return PauliOperator(a.n_qubits_, std::move(terms));
}

PauliOperator anticommutator(const PauliOperator& a, const PauliOperator& b) {
  return a * b + b * a;
}

PauliOperator commutator(const PauliOperator& a, const PauliOperator& b) {
  return a * b - b * a;
}

double max_coefficient_distance(const PauliOperator& a, const PauliOperator& b) {
  check_same_register(a.n_qubits(), b.n_qubits(), "compare");
  const PauliOperator diff = a - b;
  double worst = 0.0;
  for (const auto& t : diff.terms()) worst = std::max(worst, std::abs(t.second));
  // Pruning may hide differences below epsilon; those count as zero.
  return worst;
}

PauliOperator tensor(const PauliOperator& low, const PauliOperator& high) {
  const int n = low.n_qubits() + high.n_qubits();
  check_register(n);
  const int shift = low.n_qubits();
  std::vector<PauliOperator::Term> terms;
  terms.reserve(low.size() * high.size());
  for (const auto& [sl, cl] : low.terms()) {
    for (const auto& [sh, ch] : high.terms()) {
      terms.emplace_back(PauliString(n, sl.x_mask() | (sh.x_mask() << shift),
                                     sl.z_mask() | (sh.z_mask() << shift)),
                         cl * ch);
    }
  }
  return PauliOperator(n, std::move(terms));
}

PauliOperator spin_lowering(int n_qubits, int qubit) {
  check_qubit(n_qubits, qubit);
  return PauliOperator(
      n_qubits, {{PauliString::single(n_qubits, qubit, Pauli::X), 0.5},
                 {PauliString::single(n_qubits, qubit, Pauli::Y), Complex(0, 0.5)}});
}

PauliOperator spin_raising(int n_qubits, int qubit) {
  check_qubit(n_qubits, qubit);
  return PauliOperator(
      n_qubits, {{PauliString::single(n_qubits, qubit, Pauli::X), 0.5},
                 {PauliString::single(n_qubits, qubit, Pauli::Y), Complex(0, -0.5)}});
}

PauliOperator jordan_wigner(int n_qubits, int mode, Ladder kind) {
  check_qubit(n_qubits, mode);
  const PauliString parity(n_qubits, 0, (std::uint64_t{1} << mode) - 1);
  const PauliOperator spin = kind == Ladder::kLowering
                                 ? spin_lowering(n_qubits, mode)
                                 : spin_raising(n_qubits, mode);
  return PauliOperator::from_string(parity) * spin;
}

}  // namespace boolham
