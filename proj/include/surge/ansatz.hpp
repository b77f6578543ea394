// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file ansatz.hpp
 * @brief Operator pools, block-structured ordered ansatze, and CNOT accounting.
 *
 * An OrderedAnsatz is a list of blocks; each block is a list of entries in
 * application order, and each entry binds an operator to a parameter slot.
 * U(theta) = prod over entries, first entry acting first on the reference.
 */

#include <nlohmann/json.hpp>
#include <span>
#include <string>
#include <vector>

#include "surge/excitation.hpp"
#include "surge/fcidump.hpp"

namespace surge {

struct AnsatzEntry {
  ExcitationOp op;
  int param = 0;
  friend bool operator==(const AnsatzEntry&, const AnsatzEntry&) = default;
};

struct AnsatzBlock {
  std::vector<AnsatzEntry> entries;
  friend bool operator==(const AnsatzBlock&, const AnsatzBlock&) = default;
};

class OrderedAnsatz {
 public:
  OrderedAnsatz() = default;
  explicit OrderedAnsatz(int n_qubits) : n_qubits_(n_qubits) {}

  int n_qubits() const noexcept { return n_qubits_; }
  int n_params() const noexcept { return n_params_; }
  std::size_t n_ops() const noexcept;
  const std::vector<AnsatzBlock>& blocks() const noexcept { return blocks_; }

  void begin_block();
  /// Append to the current block with a fresh parameter; returns the slot.
  int push(const ExcitationOp& op);
  /// Append to the current block reusing an existing slot.
  void push_shared(const ExcitationOp& op, int param);

  /// Entries flattened in application order.
  std::vector<AnsatzEntry> sequence() const;

  /// First k entries of sequence(), keeping the block boundaries.
  OrderedAnsatz prefix(std::size_t k) const;

  friend bool operator==(const OrderedAnsatz&, const OrderedAnsatz&) = default;

 private:
  int n_qubits_ = 0;
  int n_params_ = 0;
  std::vector<AnsatzBlock> blocks_;
};

/// {"n_qubits", "n_params", "blocks": [[{op..., "param"}]], "theta"?}
nlohmann::json to_json(const OrderedAnsatz& ansatz, std::span<const double> theta = {});
OrderedAnsatz ansatz_from_json(const nlohmann::json& j, std::vector<double>* theta = nullptr);

struct OperatorPool {
  std::vector<ExcitationOp> paired;
  std::vector<ExcitationOp> singles;
  std::vector<std::string> warnings;
};

/// Paired doubles occupied -> virtual, lexicographic in (i, a); same-spin
/// generalized singles p < q between orbitals of equal ORBSYM label.
OperatorPool build_pool(const MolecularProblem& problem, Flavor flavor = Flavor::fermionic);

/// Qubit placement used when counting fermionic CNOTs. The simulator always
/// runs interleaved; `blocked` counts as if all alpha spin-orbitals came
/// first, which is the layout most chemistry toolkits emit.
enum class SpinLayout { interleaved, blocked };

struct GateCostModel {
  Flavor flavor = Flavor::fermionic;
  int qubit_single = 2;
  int qubit_double = 13;
  SpinLayout layout = SpinLayout::interleaved;
  int n_spatial = 0;  // required for the blocked layout

  static GateCostModel for_flavor(Flavor f) {
    GateCostModel m;
    m.flavor = f;
    return m;
  }
};

SpinLayout parse_layout(const std::string& s);
std::string to_string(SpinLayout l);

/// Fermionic: sum over the Pauli strings of the JW generator of 2(weight - 1).
/// Qubit: constant per kind from the model.
long cnot_cost(const ExcitationOp& op, const GateCostModel& model);
long ansatz_cnot_total(const OrderedAnsatz& ansatz, const GateCostModel& model);

/// Circuit depth proxy: number of generator exponentials.
inline std::size_t depth_proxy(const OrderedAnsatz& ansatz) { return ansatz.n_ops(); }

}  // namespace surge
