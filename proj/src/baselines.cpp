// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "surge/errors.hpp"
#include "surge/parallel.hpp"

namespace surge {

namespace {

// Rank-two operator on spin-orbitals, using the paired kind when it moves a pair.
ExcitationOp rank_two(int i, int j, int a, int b) {
  if (i / 2 == j / 2 && a / 2 == b / 2 && i != j && a != b) return ExcitationOp::paired(i / 2, a / 2);
  return ExcitationOp::double_exc(i, j, a, b);
}

bool same_spin_content(int i, int j, int a, int b) { return (i & 1) + (j & 1) == (a & 1) + (b & 1); }

std::vector<ExcitationOp> occ_virt_singles(const MolecularProblem& p) {
  const int n_occ = p.n_electrons();
  std::vector<ExcitationOp> out;
  for (int i = 0; i < n_occ; ++i) {
    for (int a = n_occ; a < p.n_qubits(); ++a) {
      if ((i & 1) == (a & 1)) out.push_back(ExcitationOp::single(i, a));
    }
  }
  return out;
}

std::vector<ExcitationOp> occ_virt_doubles(const MolecularProblem& p) {
  const int n_occ = p.n_electrons();
  const int nq = p.n_qubits();
  std::vector<ExcitationOp> out;
  for (int i = 0; i < n_occ; ++i) {
    for (int j = i + 1; j < n_occ; ++j) {
      for (int a = n_occ; a < nq; ++a) {
        for (int b = a + 1; b < nq; ++b) {
          if (same_spin_content(i, j, a, b)) out.push_back(rank_two(i, j, a, b));
        }
      }
    }
  }
  return out;
}

std::vector<ExcitationOp> generalized_singles(const MolecularProblem& p) {
  std::vector<ExcitationOp> out;
  for (int a = 0; a < p.n_qubits(); ++a) {
    for (int b = a + 1; b < p.n_qubits(); ++b) {
      if ((a & 1) == (b & 1)) out.push_back(ExcitationOp::single(a, b));
    }
  }
  return out;
}

std::vector<ExcitationOp> generalized_paired(const MolecularProblem& p) {
  std::vector<ExcitationOp> out;
  for (int a = 0; a < p.n_spatial(); ++a) {
    for (int b = a + 1; b < p.n_spatial(); ++b) out.push_back(ExcitationOp::paired(a, b));
  }
  return out;
}

// Every rank-two generator once: T_{ij->ab} and T_{ab->ij} differ only in sign.
std::vector<ExcitationOp> generalized_doubles(const MolecularProblem& p) {
  const int nq = p.n_qubits();
  std::vector<ExcitationOp> out;
  for (int i = 0; i < nq; ++i) {
    for (int j = i + 1; j < nq; ++j) {
      for (int a = i; a < nq; ++a) {
        for (int b = a + 1; b < nq; ++b) {
          if (a == i || a == j || b == i || b == j) continue;
          if (same_spin_content(i, j, a, b)) out.push_back(rank_two(i, j, a, b));
        }
      }
    }
  }
  return out;
}

}  // namespace

OrderedAnsatz with_flavor(const OrderedAnsatz& ansatz, Flavor flavor) {
  OrderedAnsatz out(ansatz.n_qubits());
  for (const auto& b : ansatz.blocks()) {
    out.begin_block();
    for (auto e : b.entries) {
      e.op.flavor = flavor;
      if (e.param == out.n_params()) {
        out.push(e.op);
      } else {
        out.push_shared(e.op, e.param);
      }
    }
  }
  return out;
}

OrderedAnsatz uccsd_ansatz(const MolecularProblem& problem, UccsdOrder order) {
  const auto singles = occ_virt_singles(problem);
  const auto doubles = occ_virt_doubles(problem);
  OrderedAnsatz a(problem.n_qubits());
  a.begin_block();
  const auto& first = order == UccsdOrder::singles_first ? singles : doubles;
  const auto& second = order == UccsdOrder::singles_first ? doubles : singles;
  for (const auto& op : first) a.push(op);
  for (const auto& op : second) a.push(op);
  return a;
}

OrderedAnsatz kupccgsd_ansatz(const MolecularProblem& problem, int k) {
  if (k < 1) throw ConfigError("k must be >= 1");
  const auto paired = generalized_paired(problem);
  const auto singles = generalized_singles(problem);
  OrderedAnsatz a(problem.n_qubits());
  for (int rep = 0; rep < k; ++rep) {
    a.begin_block();
    for (const auto& op : paired) a.push(op);
    for (const auto& op : singles) a.push(op);
  }
  return a;
}

AdaptPool parse_adapt_pool(const std::string& s) {
  if (s == "sd" || s == "SD") return AdaptPool::sd;
  if (s == "gspd" || s == "gSpD") return AdaptPool::gspd;
  if (s == "gsd" || s == "gSD") return AdaptPool::gsd;
  throw ConfigError("unknown ADAPT pool '" + s + "'");
}

std::string to_string(AdaptPool p) {
  switch (p) {
    case AdaptPool::sd: return "SD";
    case AdaptPool::gspd: return "gSpD";
    case AdaptPool::gsd: return "gSD";
  }
  return "?";
}

std::vector<ExcitationOp> adapt_pool(const MolecularProblem& problem, AdaptPool kind) {
  std::vector<ExcitationOp> pool;
  auto append = [&](std::vector<ExcitationOp> v) { pool.insert(pool.end(), v.begin(), v.end()); };
  switch (kind) {
    case AdaptPool::sd:
      append(occ_virt_singles(problem));
      append(occ_virt_doubles(problem));
      break;
    case AdaptPool::gspd:
      append(generalized_singles(problem));
      append(generalized_paired(problem));
      break;
    case AdaptPool::gsd:
      append(generalized_singles(problem));
      append(generalized_doubles(problem));
      break;
  }
  return pool;
}

std::vector<double> pool_gradients(const StateVector& psi, const HamiltonianOperator& h,
                                   const std::vector<CompiledGenerator>& pool, int jobs) {
  StateVector hpsi(psi.n_qubits());
  h.apply(psi, hpsi);
  std::vector<double> g(pool.size());
  parallel_for(pool.size(), jobs,
               [&](std::size_t k) { g[k] = 2.0 * generator_inner(hpsi, psi, pool[k]).real(); });
  return g;
}

bool selection_cycles(std::span<const std::size_t> picks) {
  const std::size_t n = picks.size();
  if (n >= 2 && picks[n - 1] == picks[n - 2]) return true;
  for (std::size_t len = 2; 2 * len <= n; ++len) {
    if (std::equal(picks.end() - static_cast<std::ptrdiff_t>(len), picks.end(),
                   picks.end() - static_cast<std::ptrdiff_t>(2 * len))) {
      return true;
    }
  }
  return false;
}

AdaptResult adapt_vqe(const MolecularProblem& problem, std::shared_ptr<const HamiltonianOperator> h,
                      const AdaptConfig& config, const GateCostModel& model) {
  if (!(config.grad_threshold > 0) || !(config.eig_threshold > 0)) {
    throw ConfigError("ADAPT thresholds must be positive");
  }
  auto pool = adapt_pool(problem, config.pool);
  for (auto& op : pool) op.flavor = config.flavor;
  std::vector<CompiledGenerator> compiled;
  compiled.reserve(pool.size());
  for (const auto& op : pool) compiled.push_back(compile_generator(op, problem.n_qubits()));

  const StateVector ref = hf_state(problem);
  AdaptResult r;
  r.ansatz = OrderedAnsatz(problem.n_qubits());
  r.vqe.energy = r.vqe.initial_energy = h->expectation(ref);
  r.vqe.converged = true;
  std::vector<bool> used(pool.size(), false);
  std::vector<std::size_t> picks;
  long cnots = 0;
  std::size_t grad_meas = 0, energy_meas = 0;

  for (int it = 1;; ++it) {
    if (static_cast<int>(r.ansatz.n_ops()) >= config.max_ops) {
      r.stop_reason = "max_ops";
      break;
    }
    AnsatzEvaluator ev(ref, r.ansatz, h);
    const StateVector psi = ev.state(r.vqe.theta);
    const auto g = pool_gradients(psi, *h, compiled, config.jobs);
    grad_meas += pool.size();
    std::size_t best = pool.size();
    double best_g = -1.0;
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (!config.allow_repeats && used[k]) continue;
      if (std::abs(g[k]) > best_g) {
        best_g = std::abs(g[k]);
        best = k;
      }
    }
    if (best == pool.size()) {
      r.stop_reason = "pool_exhausted";
      break;
    }
    if (best_g < config.grad_threshold) {
      r.stop_reason = "gradient";
      break;
    }
    picks.push_back(best);
    if (config.stop_on_cycle && selection_cycles(picks)) {
      r.stop_reason = "cycle";
      break;
    }
    used[best] = true;
    r.ansatz.begin_block();
    r.ansatz.push(pool[best]);
    cnots += cnot_cost(pool[best], model);
    std::vector<double> theta = r.vqe.theta;
    theta.push_back(0.0);
    const double e_prev = r.vqe.energy;
    const VqeResult v = optimize(r.ansatz, h, ref, theta, config.vqe);
    energy_meas += v.energy_evals;
    const double initial = r.vqe.initial_energy;
    const std::size_t grad_evals = r.vqe.gradient_evals + v.gradient_evals;
    r.vqe = v;
    r.vqe.initial_energy = initial;
    r.vqe.energy_evals = energy_meas;
    r.vqe.gradient_evals = grad_evals;

    AdaptIteration row;
    row.iteration = it;
    row.op = pool[best].label();
    row.max_gradient = best_g;
    row.energy = v.energy;
    row.cumulative_cnot = cnots;
    row.n_params = r.ansatz.n_params();
    row.gradient_measurements = grad_meas;
    row.energy_measurements = energy_meas;
    r.trace.push_back(row);

    const double gain = e_prev - v.energy;
    if (gain < 1e-14) r.stalled = true;
    if (gain < config.eig_threshold) {
      r.stop_reason = "energy";
      break;
    }
  }
  return r;
}

}  // namespace surge
