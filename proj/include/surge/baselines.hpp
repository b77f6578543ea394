// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file baselines.hpp
 * @brief Comparison ansatze: Trotterized UCCSD, k-UpCCGSD, and ADAPT-VQE.
 */

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "surge/ansatz.hpp"
#include "surge/vqe.hpp"

namespace surge {

enum class UccsdOrder {
  singles_first,  // all singles, then all doubles, each lexicographic
  doubles_first,
};

/// Copy of the ansatz with every operator switched to the given flavor.
OrderedAnsatz with_flavor(const OrderedAnsatz& ansatz, Flavor flavor);

/// Occupied -> virtual singles and doubles (unpaired doubles use the rank-two kind).
OrderedAnsatz uccsd_ansatz(const MolecularProblem& problem, UccsdOrder order = UccsdOrder::singles_first);

/// k repetitions of [paired doubles over spatial pairs p < q, same-spin singles p < q].
OrderedAnsatz kupccgsd_ansatz(const MolecularProblem& problem, int k = 1);

enum class AdaptPool { sd, gspd, gsd };
AdaptPool parse_adapt_pool(const std::string& s);
std::string to_string(AdaptPool p);

std::vector<ExcitationOp> adapt_pool(const MolecularProblem& problem, AdaptPool kind);

struct AdaptConfig {
  AdaptPool pool = AdaptPool::gspd;
  Flavor flavor = Flavor::fermionic;
  double grad_threshold = 1e-8;
  double eig_threshold = 1e-8;  // stop once an iteration lowers E by less than this
  int max_ops = 500;
  bool allow_repeats = true;
  // Stop before appending an operator that would close a repeating selection
  // pattern (same op twice, or a run of >= 2 selections repeated back to back).
  bool stop_on_cycle = false;
  int jobs = 1;
  VqeOptions vqe;
};

/// True when the tail of `picks` is an immediately repeated run.
bool selection_cycles(std::span<const std::size_t> picks);

struct AdaptIteration {
  int iteration = 0;
  std::string op;
  double max_gradient = 0.0;
  double energy = 0.0;
  long cumulative_cnot = 0;
  int n_params = 0;
  std::size_t gradient_measurements = 0;  // cumulative pool-gradient evaluations
  std::size_t energy_measurements = 0;    // cumulative optimizer energy evaluations
};

struct AdaptResult {
  OrderedAnsatz ansatz;
  VqeResult vqe;
  std::vector<AdaptIteration> trace;
  std::string stop_reason;  // "gradient", "energy", "max_ops", "pool_exhausted"
  bool stalled = false;
};

AdaptResult adapt_vqe(const MolecularProblem& problem, std::shared_ptr<const HamiltonianOperator> h,
                      const AdaptConfig& config, const GateCostModel& model = {});

/// Pool gradients 2 Re <H psi| tau |psi> at the given state.
std::vector<double> pool_gradients(const StateVector& psi, const HamiltonianOperator& h,
                                   const std::vector<CompiledGenerator>& pool, int jobs = 1);

}  // namespace surge
