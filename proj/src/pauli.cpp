// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/pauli.hpp"

#include <algorithm>
#include <cmath>

#include "surge/errors.hpp"

namespace surge {

namespace {

constexpr cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_width(int n) {
  if (n < 0 || n > 64) throw ShapeError("qubit count must be in [0, 64]");
}

}  // namespace

std::string PauliTerm::label() const {
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  for (int k = 0; k < n_qubits; ++k) {
    const bool xb = (x >> k) & 1U;
    const bool zb = (z >> k) & 1U;
    s[static_cast<std::size_t>(k)] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return s;
}

PauliTerm PauliTerm::from_label(std::string_view label, cplx coeff) {
  PauliTerm t;
  t.n_qubits = static_cast<int>(label.size());
  check_width(t.n_qubits);
  t.coeff = coeff;
  for (std::size_t k = 0; k < label.size(); ++k) {
    const std::uint64_t bit = std::uint64_t{1} << k;
    switch (label[k]) {
      case 'I': break;
      case 'X': t.x |= bit; break;
      case 'Y': t.x |= bit; t.z |= bit; break;
      case 'Z': t.z |= bit; break;
      default: throw Error(std::string("bad Pauli symbol '") + label[k] + "'");
    }
  }
  return t;
}

PauliTerm multiply_terms(const PauliTerm& a, const PauliTerm& b) {
  if (a.n_qubits != b.n_qubits) {
    throw ShapeError("Pauli product of " + std::to_string(a.n_qubits) + "- and " +
                     std::to_string(b.n_qubits) + "-qubit strings");
  }
  PauliTerm r;
  r.n_qubits = a.n_qubits;
  r.x = a.x ^ b.x;
  r.z = a.z ^ b.z;
  // i^{|xa za|} X^xa Z^za i^{|xb zb|} X^xb Z^zb = i^{..} (-1)^{|za xb|} X^x Z^z
  const int e = std::popcount(a.x & a.z) + std::popcount(b.x & b.z) +
                2 * std::popcount(a.z & b.x) - std::popcount(r.x & r.z);
  r.coeff = a.coeff * b.coeff * kPhase[((e % 4) + 4) % 4];
  return r;
}

QubitOperator QubitOperator::identity(int n_qubits, cplx c) {
  QubitOperator op(n_qubits);
  op.add(0, 0, c);
  return op;
}

void QubitOperator::add(const PauliTerm& t) {
  if (t.n_qubits != n_qubits_) throw ShapeError("term width differs from operator width");
  terms_.push_back(t);
}

void QubitOperator::add(std::uint64_t x, std::uint64_t z, cplx c) {
  terms_.push_back(PauliTerm{x, z, c, n_qubits_});
}

QubitOperator& QubitOperator::simplify(double threshold) {
  std::sort(terms_.begin(), terms_.end(), [](const PauliTerm& a, const PauliTerm& b) {
    return a.x != b.x ? a.x < b.x : a.z < b.z;
  });
  std::vector<PauliTerm> merged;
  merged.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().x == t.x && merged.back().z == t.z) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [threshold](const PauliTerm& t) { return std::abs(t.coeff) <= threshold; });
  terms_ = std::move(merged);
  return *this;
}

QubitOperator QubitOperator::adjoint() const {
  QubitOperator out = *this;
  for (auto& t : out.terms_) t.coeff = std::conj(t.coeff);
  return out;
}

QubitOperator QubitOperator::operator*(const QubitOperator& other) const {
  if (other.n_qubits_ != n_qubits_) throw ShapeError("operator widths differ");
  QubitOperator out(n_qubits_);
  out.terms_.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) out.terms_.push_back(multiply_terms(a, b));
  }
  out.simplify(0.0);
  return out;
}

QubitOperator QubitOperator::operator+(const QubitOperator& other) const {
  if (other.n_qubits_ != n_qubits_) throw ShapeError("operator widths differ");
  QubitOperator out = *this;
  out.terms_.insert(out.terms_.end(), other.terms_.begin(), other.terms_.end());
  out.simplify(0.0);
  return out;
}

QubitOperator QubitOperator::operator-(const QubitOperator& other) const {
  return *this + other * cplx{-1.0, 0.0};
}

QubitOperator QubitOperator::operator*(cplx c) const {
  QubitOperator out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

double QubitOperator::max_imag() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff.imag()));
  return m;
}

cplx QubitOperator::identity_coeff() const {
  cplx c{0.0, 0.0};
  for (const auto& t : terms_) {
    if (t.is_identity()) c += t.coeff;
  }
  return c;
}

QubitOperator commutator(const QubitOperator& a, const QubitOperator& b) {
  return (a * b - b * a).simplify(0.0);
}

}  // namespace surge
