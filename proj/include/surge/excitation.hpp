// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file excitation.hpp
 * @brief Anti-Hermitian excitation generators tau = T - T^dagger.
 *
 * Kinds and their excitation operator T:
 *  - paired_double(i, a), spatial:  a+_{a,alpha} a+_{a,beta} a_{i,beta} a_{i,alpha}
 *  - single(p, q), spin-orbitals, p < q, same spin:  a+_q a_p
 *  - double(i, j, a, b), spin-orbitals, i < j, a < b:  a+_a a+_b a_j a_i
 *
 * The qubit flavor replaces every ladder operator by its parity-free qubit
 * counterpart Q_p = (X_p + iY_p)/2, so T acts on basis states with sign +1.
 */

#include <compare>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <vector>

#include "surge/pauli.hpp"

namespace surge {

enum class OpKind { paired_double = 0, single = 1, double_excitation = 2 };
enum class Flavor { fermionic = 0, qubit = 1 };

std::string to_string(OpKind k);
std::string to_string(Flavor f);
Flavor parse_flavor(const std::string& s);

struct ExcitationOp {
  OpKind kind = OpKind::single;
  // paired_double uses (i, a); single stores (p, q) in (i, a).
  int i = 0;
  int j = 0;
  int a = 0;
  int b = 0;
  Flavor flavor = Flavor::fermionic;

  static ExcitationOp paired(int i, int a, Flavor f = Flavor::fermionic);
  /// The unordered pair {p, q} maps to one generator, stored with p < q.
  static ExcitationOp single(int p, int q, Flavor f = Flavor::fermionic);
  static ExcitationOp double_exc(int i, int j, int a, int b, Flavor f = Flavor::fermionic);

  /// Spin-orbitals removed by T, in the order T annihilates them.
  std::vector<int> annihilated() const;
  /// Spin-orbitals filled by T.
  std::vector<int> created() const;

  /// Throws InvalidOperator (index overlap; spin change for fermionic ops) or
  /// IndexError. Qubit-flavor ops act on bare qubits and carry no spin rule.
  void validate(int n_qubits) const;

  /// Largest spin-orbital index touched, plus one.
  int min_qubits() const;

  /// Same operator acting on the opposite spin (singles only; others map to themselves).
  ExcitationOp spin_complement() const;

  std::string label() const;

  friend auto operator<=>(const ExcitationOp&, const ExcitationOp&) = default;
};

nlohmann::json to_json(const ExcitationOp& op);
ExcitationOp excitation_from_json(const nlohmann::json& j);

/// Invariant 1- and 2-dimensional subspaces of tau: T|lo_k> = sign_k |hi_k>,
/// and tau annihilates every basis state not listed.
struct CompiledGenerator {
  std::vector<std::uint32_t> lo;
  std::vector<std::uint32_t> hi;
  std::vector<double> sign;
  std::size_t size() const noexcept { return lo.size(); }
};

CompiledGenerator compile_generator(const ExcitationOp& op, int n_qubits);

/// tau as a Pauli sum (fermionic: Jordan-Wigner; qubit: parity-free).
/// `qubit_of`, when given, places spin-orbital p on qubit qubit_of[p].
QubitOperator generator_operator(const ExcitationOp& op, int n_qubits,
                                 std::span<const int> qubit_of = {});

}  // namespace surge
