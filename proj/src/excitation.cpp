// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/excitation.hpp"

#include <algorithm>
#include <array>
#include <bit>

#include "surge/errors.hpp"
#include "surge/hamiltonian.hpp"

namespace surge {

std::string to_string(OpKind k) {
  switch (k) {
    case OpKind::paired_double: return "paired_double";
    case OpKind::single: return "single";
    case OpKind::double_excitation: return "double";
  }
  return "?";
}

std::string to_string(Flavor f) { return f == Flavor::fermionic ? "fermionic" : "qubit"; }

Flavor parse_flavor(const std::string& s) {
  if (s == "fermionic") return Flavor::fermionic;
  if (s == "qubit") return Flavor::qubit;
  throw ConfigError("unknown flavor '" + s + "'");
}

ExcitationOp ExcitationOp::paired(int i, int a, Flavor f) {
  ExcitationOp op;
  op.kind = OpKind::paired_double;
  op.i = i;
  op.a = a;
  op.flavor = f;
  return op;
}

ExcitationOp ExcitationOp::single(int p, int q, Flavor f) {
  ExcitationOp op;
  op.kind = OpKind::single;
  op.i = std::min(p, q);
  op.a = std::max(p, q);
  op.flavor = f;
  return op;
}

ExcitationOp ExcitationOp::double_exc(int i, int j, int a, int b, Flavor f) {
  ExcitationOp op;
  op.kind = OpKind::double_excitation;
  op.i = std::min(i, j);
  op.j = std::max(i, j);
  op.a = std::min(a, b);
  op.b = std::max(a, b);
  op.flavor = f;
  return op;
}

std::vector<int> ExcitationOp::annihilated() const {
  switch (kind) {
    case OpKind::paired_double: return {2 * i, 2 * i + 1};
    case OpKind::single: return {i};
    case OpKind::double_excitation: return {i, j};
  }
  return {};
}

std::vector<int> ExcitationOp::created() const {
  switch (kind) {
    case OpKind::paired_double: return {2 * a + 1, 2 * a};
    case OpKind::single: return {a};
    case OpKind::double_excitation: return {b, a};
  }
  return {};
}

int ExcitationOp::min_qubits() const {
  int m = 0;
  for (int p : annihilated()) m = std::max(m, p + 1);
  for (int p : created()) m = std::max(m, p + 1);
  return m;
}

void ExcitationOp::validate(int n_qubits) const {
  const auto ann = annihilated();
  const auto cre = created();
  for (int p : ann) {
    if (p < 0 || p >= n_qubits) throw IndexError(label() + ": index outside register");
  }
  for (int p : cre) {
    if (p < 0 || p >= n_qubits) throw IndexError(label() + ": index outside register");
  }
  switch (kind) {
    case OpKind::paired_double:
      if (i == a) throw InvalidOperator(label() + ": source and target orbital coincide");
      break;
    case OpKind::single:
      if (i == a) throw InvalidOperator(label() + ": p == q");
      if (flavor == Flavor::fermionic && ((i ^ a) & 1)) {
        throw InvalidOperator(label() + ": single changes spin");
      }
      break;
    case OpKind::double_excitation: {
      if (i == j || a == b) throw InvalidOperator(label() + ": repeated index");
      if (i == a || i == b || j == a || j == b) {
        throw InvalidOperator(label() + ": annihilated and created orbitals overlap");
      }
      if (flavor == Flavor::fermionic && (i & 1) + (j & 1) != (a & 1) + (b & 1)) {
        throw InvalidOperator(label() + ": double changes Sz");
      }
      break;
    }
  }
}

ExcitationOp ExcitationOp::spin_complement() const {
  if (kind != OpKind::single) return *this;
  return single(i ^ 1, a ^ 1, flavor);
}

std::string ExcitationOp::label() const {
  const char* f = flavor == Flavor::qubit ? "q" : "";
  switch (kind) {
    case OpKind::paired_double:
      return std::string(f) + "P(" + std::to_string(i) + "->" + std::to_string(a) + ")";
    case OpKind::single:
      return std::string(f) + "S(" + std::to_string(i) + "->" + std::to_string(a) + ")";
    case OpKind::double_excitation:
      return std::string(f) + "D(" + std::to_string(i) + "," + std::to_string(j) + "->" +
             std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return "?";
}

nlohmann::json to_json(const ExcitationOp& op) {
  nlohmann::json j{{"kind", to_string(op.kind)}};
  switch (op.kind) {
    case OpKind::paired_double:
      j["i"] = op.i;
      j["a"] = op.a;
      break;
    case OpKind::single:
      j["p"] = op.i;
      j["q"] = op.a;
      break;
    case OpKind::double_excitation:
      j["i"] = op.i;
      j["j"] = op.j;
      j["a"] = op.a;
      j["b"] = op.b;
      break;
  }
  j["flavor"] = to_string(op.flavor);
  return j;
}

ExcitationOp excitation_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const Flavor f = parse_flavor(j.value("flavor", std::string("fermionic")));
  if (kind == "paired_double") return ExcitationOp::paired(j.at("i"), j.at("a"), f);
  if (kind == "single") return ExcitationOp::single(j.at("p"), j.at("q"), f);
  if (kind == "double") return ExcitationOp::double_exc(j.at("i"), j.at("j"), j.at("a"), j.at("b"), f);
  throw ConfigError("unknown operator kind '" + kind + "'");
}

namespace {

// Applies one ladder operator to a determinant in place; returns the JW sign,
// or 0 when the result vanishes.
int apply_ladder(std::uint64_t& det, int p, bool create) {
  const std::uint64_t bit = std::uint64_t{1} << p;
  const bool occ = det & bit;
  if (occ == create) return 0;
  const int parity = std::popcount(det & (bit - 1)) & 1;
  det ^= bit;
  return parity ? -1 : 1;
}

}  // namespace

CompiledGenerator compile_generator(const ExcitationOp& op, int n_qubits) {
  op.validate(n_qubits);
  if (n_qubits > 32) throw ResourceError("statevector register limited to 32 qubits");
  const auto ann = op.annihilated();
  const auto cre = op.created();
  std::uint64_t ann_mask = 0, cre_mask = 0;
  for (int p : ann) ann_mask |= std::uint64_t{1} << p;
  for (int p : cre) cre_mask |= std::uint64_t{1} << p;
  const std::uint64_t all = (n_qubits == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n_qubits) - 1;
  const std::uint64_t free = all & ~(ann_mask | cre_mask);

  CompiledGenerator g;
  const std::size_t n_pairs = std::size_t{1} << std::popcount(free);
  g.lo.reserve(n_pairs);
  g.hi.reserve(n_pairs);
  g.sign.reserve(n_pairs);
  std::uint64_t sub = 0;
  do {
    const std::uint64_t lo = sub | ann_mask;
    std::uint64_t det = lo;
    int sign = 1;
    for (int p : ann) sign *= apply_ladder(det, p, false);
    for (int p : cre) sign *= apply_ladder(det, p, true);
    if (op.flavor == Flavor::qubit) sign = 1;
    g.lo.push_back(static_cast<std::uint32_t>(lo));
    g.hi.push_back(static_cast<std::uint32_t>(det));
    g.sign.push_back(static_cast<double>(sign));
    sub = (sub - free) & free;
  } while (sub != 0);
  return g;
}

namespace {

QubitOperator qubit_ladder(int p, bool create, int n_qubits) {
  const std::uint64_t bit = std::uint64_t{1} << p;
  QubitOperator q(n_qubits);
  q.add(bit, 0, cplx{0.5, 0.0});
  q.add(bit, bit, cplx{0.0, create ? -0.5 : 0.5});
  return q;
}

}  // namespace

QubitOperator generator_operator(const ExcitationOp& op, int n_qubits,
                                 std::span<const int> qubit_of) {
  op.validate(n_qubits);
  if (!qubit_of.empty() && static_cast<int>(qubit_of.size()) != n_qubits) {
    throw ShapeError("qubit map length differs from register width");
  }
  const auto ann = op.annihilated();
  const auto cre = op.created();
  QubitOperator t = QubitOperator::identity(n_qubits);
  // Application order is ann..., then cre...; the operator word is its reverse.
  std::vector<std::pair<int, bool>> word;
  for (int p : ann) word.emplace_back(p, false);
  for (int p : cre) word.emplace_back(p, true);
  std::reverse(word.begin(), word.end());
  for (auto [p, create] : word) {
    if (!qubit_of.empty()) p = qubit_of[static_cast<std::size_t>(p)];
    const QubitOperator f = op.flavor == Flavor::fermionic
                                ? jw_ladder(p, create ? Ladder::creation : Ladder::annihilation, n_qubits)
                                : qubit_ladder(p, create, n_qubits);
    t = t * f;
  }
  t.simplify();
  QubitOperator tau = t - t.adjoint();
  return tau.simplify();
}

}  // namespace surge
