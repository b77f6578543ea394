// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file hamiltonian.hpp
 * @brief Second-quantized molecular Hamiltonian under the Jordan-Wigner map.
 *
 *   H = E_core + sum_{pq,s} h_pq a+_{ps} a_{qs}
 *       + 1/2 sum_{pqrs,s,t} (pq|rs) a+_{ps} a+_{rt} a_{st} a_{qs}
 *
 * The chemists'-notation form above equals the antisymmetrized
 * 1/4 sum <pq||rs> a+_p a+_q a_s a_r form over spin-orbitals.
 */

#include <Eigen/Dense>
#include <nlohmann/json.hpp>
#include <span>

#include "surge/fcidump.hpp"
#include "surge/pauli.hpp"

namespace surge {

/// Hermitian qubit operator with real coefficients.
using QubitHamiltonian = QubitOperator;

enum class Ladder { creation, annihilation };

struct LadderOp {
  int index;
  Ladder kind;
};

/// Z_0..Z_{p-1} (X_p -/+ iY_p)/2. Throws IndexError for p outside [0, n).
QubitOperator jw_ladder(int spin_orbital, Ladder kind, int n_qubits);

/// Ordered product of ladder operators (leftmost acts last).
QubitOperator fermion_product(std::span<const LadderOp> ops, int n_qubits);

QubitHamiltonian build_qubit_hamiltonian(const MolecularProblem& problem);

/// sum_p (I - Z_p)/2.
QubitOperator number_operator(int n_qubits);
/// sum_p s_p (I - Z_p)/2 with s = +1/2 on even (alpha), -1/2 on odd (beta) qubits.
QubitOperator sz_operator(int n_qubits);

/// Dense 2^n x 2^n matrix. Throws ResourceError above 14 qubits.
Eigen::MatrixXcd to_dense(const QubitOperator& op);

nlohmann::json to_json(const QubitOperator& op);
QubitOperator qubit_operator_from_json(const nlohmann::json& j);

}  // namespace surge
