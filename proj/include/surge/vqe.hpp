// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "surge/ansatz.hpp"
#include "surge/lbfgs.hpp"
#include "surge/simulator.hpp"

namespace surge {

struct VqeOptions {
  LbfgsOptions lbfgs;
};

struct VqeResult {
  double energy = 0.0;
  double initial_energy = 0.0;
  std::vector<double> theta;
  int iterations = 0;
  std::size_t energy_evals = 0;
  std::size_t gradient_evals = 0;
  bool converged = false;
  double grad_inf = 0.0;
  std::string stop_reason;
};

/// Quasi-Newton minimization of <ref|U(theta)^+ H U(theta)|ref>, started
/// from `initial` (zeros when empty).
VqeResult optimize(const OrderedAnsatz& ansatz, std::shared_ptr<const HamiltonianOperator> h,
                   const StateVector& reference, std::vector<double> initial = {},
                   const VqeOptions& options = {});

struct LandscapeStep {
  std::size_t k = 0;
  std::string op;  // empty for the k = 0 reference row
  long cumulative_cnot = 0;
  double energy = 0.0;
  double warm_start_energy = 0.0;  // step-k circuit at (theta*_{k-1}, 0)
  bool converged = true;          // gradient criterion met at this step
  std::vector<double> theta;
};

struct LandscapeTrace {
  std::vector<LandscapeStep> steps;
  std::optional<double> e_fci;
};

/// Grows the ansatz one entry at a time in its own order; every step warm
/// starts from the previous optimum with the new parameter at zero and
/// re-optimizes all parameters.
LandscapeTrace growth_landscape(const OrderedAnsatz& ansatz,
                                std::shared_ptr<const HamiltonianOperator> h,
                                const StateVector& reference, const GateCostModel& model,
                                std::optional<double> e_fci = std::nullopt,
                                const VqeOptions& options = {});

/// "k,op,cumulative_cnot,energy,error_mEh"; error empty without an FCI energy.
std::string landscape_csv(const LandscapeTrace& trace);

}  // namespace surge
