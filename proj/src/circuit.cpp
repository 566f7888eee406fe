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

#include "boolham/circuit.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <optional>
#include <sstream>

#include "boolham/errors.hpp"
#include "boolham/format.hpp"

namespace boolham {

int Gate::arity() const {
  switch (kind) {
    case GateKind::kRz:
    case GateKind::kH:
    case GateKind::kX: return 1;
    case GateKind::kCnot:
    case GateKind::kCrz: return 2;
    case GateKind::kCcrz: return 3;
  }
  return 0;
}

bool Gate::has_angle() const {
  return kind == GateKind::kRz || kind == GateKind::kCrz || kind == GateKind::kCcrz;
}

Circuit::Circuit(int n_qubits, double global_phase)
    : n_qubits_(n_qubits), global_phase_(global_phase) {
  if (n_qubits < 0 || n_qubits > kMaxSparseQubits) {
    throw CapExceeded("circuit register of " + std::to_string(n_qubits) + " qubits");
  }
  if (!std::isfinite(global_phase)) throw std::invalid_argument("non-finite phase");
}

Circuit& Circuit::add(const Gate& g) {
  const auto ops = g.operands();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i] < 0 || ops[i] >= n_qubits_) {
      throw std::out_of_range("gate qubit " + std::to_string(ops[i] + 1) +
                              " outside register of " + std::to_string(n_qubits_));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (ops[i] == ops[j]) throw std::invalid_argument("gate repeats a qubit");
    }
  }
  if (g.has_angle() && !std::isfinite(g.angle)) {
    throw std::invalid_argument("non-finite gate angle");
  }
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::add_phase(double radians) {
  if (!std::isfinite(radians)) throw std::invalid_argument("non-finite phase");
  global_phase_ += radians;
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw DimensionMismatch("appending a circuit on a different register");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  global_phase_ += other.global_phase_;
  return *this;
}

GateCounts count_gates(const Circuit& c) {
  GateCounts counts;
  for (const Gate& g : c.gates()) {
    switch (g.kind) {
      case GateKind::kCnot: ++counts.cnot; break;
      case GateKind::kRz: ++counts.rz; break;
      case GateKind::kH: ++counts.h; break;
      case GateKind::kX: ++counts.x; break;
      case GateKind::kCrz: ++counts.crz; break;
      case GateKind::kCcrz: ++counts.ccrz; break;
    }
  }
  return counts;
}

Circuit emit_evolution(const DiagonalHamiltonian& h, double gamma) {
  if (!std::isfinite(gamma)) throw std::invalid_argument("non-finite evolution time");
  Circuit c(h.n_qubits());
  for (const auto& [key, w] : h.terms()) {
    if (key.is_identity()) {
      c.add_phase(-gamma * w);
      continue;
    }
    std::vector<int> support;
    for (std::uint64_t m = key.mask(); m; m &= m - 1) support.push_back(std::countr_zero(m));
    for (std::size_t i = 0; i + 1 < support.size(); ++i) {
      c.add(Gate::cnot(support[i], support[i + 1]));
    }
    c.add(Gate::rz(support.back(), 2.0 * gamma * w));
    for (std::size_t i = support.size() - 1; i > 0; --i) {
      c.add(Gate::cnot(support[i - 1], support[i]));
    }
  }
  return c;
}

QuboEvolution emit_qubo_evolution(const QuboInstance& q, double t) {
  const DiagonalHamiltonian h = compile_qubo(q);
  QuboEvolution out{emit_evolution(h, t), 0, 0};
  for (const auto& [key, w] : h.terms()) {
    if (key.degree() == 1) ++out.rz_blocks;
    if (key.degree() == 2) ++out.rzz_blocks;
  }
  return out;
}

Circuit emit_bit_query(const BoolExpr& f, int n_qubits) {
  const DiagonalHamiltonian hf = compile(f, n_qubits);
  const int ancilla = n_qubits;
  Circuit c(n_qubits + 1);
  c.add(Gate::h(ancilla));
  c.append(emit_evolution(tensor(hf, DiagonalHamiltonian::bit(1, 0)), std::numbers::pi));
  c.add(Gate::h(ancilla));
  return c;
}

Circuit emit_controlled_evolution(const BoolExpr& f, int n_controls,
                                  const DiagonalHamiltonian& h, double t) {
  return emit_evolution(tensor(compile(f, n_controls), h), t);
}

Circuit lower_controlled_rotations(const Circuit& c) {
  Circuit out(c.n_qubits(), c.global_phase());
  auto crz = [&out](int control, int target, double angle) {
    out.add(Gate::rz(target, angle / 2));
    out.add(Gate::cnot(control, target));
    out.add(Gate::rz(target, -angle / 2));
    out.add(Gate::cnot(control, target));
  };
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::kCrz) {
      crz(g.qubits[0], g.qubits[1], g.angle);
    } else if (g.kind == GateKind::kCcrz) {
      const int c1 = g.qubits[0], c2 = g.qubits[1], t = g.qubits[2];
      crz(c2, t, g.angle / 2);
      out.add(Gate::cnot(c1, c2));
      crz(c2, t, -g.angle / 2);
      out.add(Gate::cnot(c1, c2));
      crz(c1, t, g.angle / 2);
    } else {
      out.add(g);
    }
  }
  return out;
}

namespace {

const char* mnemonic(GateKind k) {
  switch (k) {
    case GateKind::kCnot: return "cx";
    case GateKind::kRz: return "rz";
    case GateKind::kH: return "h";
    case GateKind::kX: return "x";
    case GateKind::kCrz: return "crz";
    case GateKind::kCcrz: return "ccrz";
  }
  return "?";
}

}  // namespace

std::string serialize(const Circuit& c) {
  std::string out = "qubits " + std::to_string(c.n_qubits()) + "\n";
  out += "phase " + format_real(c.global_phase(), 15) + "\n";
  for (const Gate& g : c.gates()) {
    out += mnemonic(g.kind);
    for (int q : g.operands()) out += ' ' + std::to_string(q + 1);
    if (g.has_angle()) out += ' ' + format_real(g.angle, 15);
    out += '\n';
  }
  return out;
}

Circuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t offset = 0;
  std::optional<Circuit> circuit;
  bool seen_gate = false;
  while (std::getline(in, line)) {
    const std::size_t line_offset = offset;
    offset += line.size() + 1;
    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word) || word[0] == '#') continue;
    auto fail = [&](const std::string& what) -> void {
      throw ParseError("circuit text: " + what, line_offset);
    };
    if (word == "qubits") {
      int n = -1;
      if (circuit || !(fields >> n) || n < 0) fail("bad or repeated 'qubits' line");
      circuit.emplace(n);
    } else if (word == "phase") {
      double p = 0.0;
      if (!circuit || seen_gate || !(fields >> p)) fail("'phase' must follow 'qubits'");
      circuit->add_phase(p);
    } else {
      if (!circuit) fail("missing 'qubits' header");
      GateKind kind{};
      if (word == "cx") kind = GateKind::kCnot;
      else if (word == "rz") kind = GateKind::kRz;
      else if (word == "h") kind = GateKind::kH;
      else if (word == "x") kind = GateKind::kX;
      else if (word == "crz") kind = GateKind::kCrz;
      else if (word == "ccrz") kind = GateKind::kCcrz;
      else fail("unknown gate '" + word + "'");
      Gate g{kind, {0, 0, 0}, 0.0};
      for (int i = 0; i < g.arity(); ++i) {
        int q = 0;
        if (!(fields >> q)) fail("missing qubit operand");
        g.qubits[i] = q - 1;
      }
      if (g.has_angle() && !(fields >> g.angle)) fail("missing angle");
      std::string extra;
      if (fields >> extra) fail("trailing tokens");
      try {
        circuit->add(g);
      } catch (const std::logic_error& e) {
        fail(e.what());
      }
      seen_gate = true;
    }
  }
  if (!circuit) throw ParseError("circuit text: missing 'qubits' header", 0);
  return *circuit;
}

}  // namespace boolham
