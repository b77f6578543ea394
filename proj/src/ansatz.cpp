// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/ansatz.hpp"

#include <algorithm>

#include "surge/errors.hpp"

namespace surge {

std::size_t OrderedAnsatz::n_ops() const noexcept {
  std::size_t n = 0;
  for (const auto& b : blocks_) n += b.entries.size();
  return n;
}

void OrderedAnsatz::begin_block() { blocks_.emplace_back(); }

int OrderedAnsatz::push(const ExcitationOp& op) {
  op.validate(n_qubits_);
  if (blocks_.empty()) begin_block();
  blocks_.back().entries.push_back({op, n_params_});
  return n_params_++;
}

void OrderedAnsatz::push_shared(const ExcitationOp& op, int param) {
  op.validate(n_qubits_);
  if (param < 0 || param >= n_params_) throw IndexError("parameter slot does not exist");
  if (blocks_.empty()) begin_block();
  blocks_.back().entries.push_back({op, param});
}

std::vector<AnsatzEntry> OrderedAnsatz::sequence() const {
  std::vector<AnsatzEntry> seq;
  seq.reserve(n_ops());
  for (const auto& b : blocks_) seq.insert(seq.end(), b.entries.begin(), b.entries.end());
  return seq;
}

OrderedAnsatz OrderedAnsatz::prefix(std::size_t k) const {
  OrderedAnsatz out(n_qubits_);
  std::size_t taken = 0;
  for (const auto& b : blocks_) {
    if (taken == k) break;
    out.blocks_.emplace_back();
    for (const auto& e : b.entries) {
      if (taken == k) break;
      out.blocks_.back().entries.push_back(e);
      out.n_params_ = std::max(out.n_params_, e.param + 1);
      ++taken;
    }
  }
  return out;
}

nlohmann::json to_json(const OrderedAnsatz& ansatz, std::span<const double> theta) {
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto& b : ansatz.blocks()) {
    nlohmann::json ops = nlohmann::json::array();
    for (const auto& e : b.entries) {
      nlohmann::json o = to_json(e.op);
      o["param"] = e.param;
      ops.push_back(std::move(o));
    }
    blocks.push_back({{"ops", std::move(ops)}});
  }
  nlohmann::json j{{"n_qubits", ansatz.n_qubits()},
                   {"n_params", ansatz.n_params()},
                   {"blocks", std::move(blocks)}};
  if (!theta.empty()) j["theta"] = std::vector<double>(theta.begin(), theta.end());
  return j;
}

OrderedAnsatz ansatz_from_json(const nlohmann::json& j, std::vector<double>* theta) {
  OrderedAnsatz a(j.at("n_qubits").get<int>());
  for (const auto& b : j.at("blocks")) {
    a.begin_block();
    for (const auto& o : b.at("ops")) {
      const ExcitationOp op = excitation_from_json(o);
      const int slot = o.at("param").get<int>();
      if (slot == a.n_params()) {
        a.push(op);
      } else {
        a.push_shared(op, slot);
      }
    }
  }
  if (theta != nullptr) {
    theta->clear();
    if (j.contains("theta")) *theta = j["theta"].get<std::vector<double>>();
  }
  return a;
}

OperatorPool build_pool(const MolecularProblem& problem, Flavor flavor) {
  OperatorPool pool;
  const int n = problem.n_spatial();
  const int n_occ = problem.n_electrons() / 2;
  for (int i = 0; i < n_occ; ++i) {
    for (int a = n_occ; a < n; ++a) pool.paired.push_back(ExcitationOp::paired(i, a, flavor));
  }
  const bool sym = problem.has_orbsym();
  if (!sym) pool.warnings.emplace_back("missing_orbsym: singles not pruned by symmetry");
  const int nq = problem.n_qubits();
  for (int p = 0; p < nq; ++p) {
    for (int q = p + 1; q < nq; ++q) {
      if (spin_of(p) != spin_of(q)) continue;
      if (sym && problem.orbsym()[spatial_of(p)] != problem.orbsym()[spatial_of(q)]) continue;
      pool.singles.push_back(ExcitationOp::single(p, q, flavor));
    }
  }
  return pool;
}

SpinLayout parse_layout(const std::string& s) {
  if (s == "interleaved") return SpinLayout::interleaved;
  if (s == "blocked") return SpinLayout::blocked;
  throw ConfigError("unknown spin layout '" + s + "'");
}

std::string to_string(SpinLayout l) { return l == SpinLayout::blocked ? "blocked" : "interleaved"; }

long cnot_cost(const ExcitationOp& op, const GateCostModel& model) {
  if (model.flavor == Flavor::qubit) {
    return op.kind == OpKind::single ? model.qubit_single : model.qubit_double;
  }
  ExcitationOp f = op;
  f.flavor = Flavor::fermionic;
  long total = 0;
  QubitOperator tau;
  if (model.layout == SpinLayout::blocked) {
    if (2 * model.n_spatial < f.min_qubits()) throw ConfigError("blocked layout needs n_spatial");
    std::vector<int> qubit_of(static_cast<std::size_t>(2 * model.n_spatial));
    for (int p = 0; p < 2 * model.n_spatial; ++p) {
      qubit_of[static_cast<std::size_t>(p)] = spatial_of(p) + spin_of(p) * model.n_spatial;
    }
    tau = generator_operator(f, 2 * model.n_spatial, qubit_of);
  } else {
    tau = generator_operator(f, f.min_qubits());
  }
  for (const auto& t : tau.terms()) total += 2L * (t.weight() - 1);
  return total;
}

long ansatz_cnot_total(const OrderedAnsatz& ansatz, const GateCostModel& model) {
  long total = 0;
  for (const auto& b : ansatz.blocks()) {
    for (const auto& e : b.entries) total += cnot_cost(e.op, model);
  }
  return total;
}

}  // namespace surge
