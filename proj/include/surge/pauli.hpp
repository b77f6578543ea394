// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file pauli.hpp
 * @brief Pauli strings in symplectic (x-mask, z-mask) form and sums of them.
 *
 * Per qubit k: (x_k, z_k) = (0,0) I, (1,0) X, (1,1) Y, (0,1) Z, so the term
 * with masks (x, z) is the operator i^{|x&z|} X^x Z^z. Acting on a basis
 * state, P|j> = i^{|x&z|} (-1)^{|z&j|} |j ^ x>. Strings print qubit 0 first.
 */

#include <bit>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace surge {

using cplx = std::complex<double>;

struct PauliTerm {
  std::uint64_t x = 0;
  std::uint64_t z = 0;
  cplx coeff{1.0, 0.0};
  int n_qubits = 0;

  int weight() const noexcept { return std::popcount(x | z); }
  bool is_identity() const noexcept { return (x | z) == 0; }
  std::string label() const;

  /// Parse "XZIY" (qubit 0 first).
  static PauliTerm from_label(std::string_view label, cplx coeff = 1.0);
};

/// Exact product a*b with the phase folded into the coefficient.
/// Throws ShapeError on a qubit-count mismatch.
PauliTerm multiply_terms(const PauliTerm& a, const PauliTerm& b);

/// True when the two strings commute.
inline bool commutes(const PauliTerm& a, const PauliTerm& b) {
  return ((std::popcount(a.x & b.z) + std::popcount(a.z & b.x)) & 1) == 0;
}

/// Sum of Pauli strings, deduplicated by masks after simplify().
class QubitOperator {
 public:
  static constexpr double kDropThreshold = 1e-12;

  QubitOperator() = default;
  explicit QubitOperator(int n_qubits) : n_qubits_(n_qubits) {}

  static QubitOperator identity(int n_qubits, cplx c = 1.0);

  int n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  void add(const PauliTerm& t);
  void add(std::uint64_t x, std::uint64_t z, cplx c);

  /// Merge equal masks, drop |coeff| <= threshold, sort by (x, z).
  QubitOperator& simplify(double threshold = kDropThreshold);

  QubitOperator adjoint() const;
  QubitOperator operator*(const QubitOperator& other) const;
  QubitOperator operator+(const QubitOperator& other) const;
  QubitOperator operator-(const QubitOperator& other) const;
  QubitOperator operator*(cplx c) const;

  /// Largest |Im(coeff)|.
  double max_imag() const;
  /// Coefficient of the identity string (0 if absent).
  cplx identity_coeff() const;

 private:
  int n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

/// [a, b] = ab - ba.
QubitOperator commutator(const QubitOperator& a, const QubitOperator& b);

}  // namespace surge
