// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file pipeline.hpp
 * @brief One call per method: build the ansatz, optimize it, count its CNOTs.
 * Shared by the command-line tool and the acceptance suite.
 */

#include <memory>
#include <nlohmann/json.hpp>
#include <string>

#include "surge/baselines.hpp"
#include "surge/reference.hpp"
#include "surge/surge.hpp"
#include "surge/vqe.hpp"

namespace surge {

/// Problem plus everything derived from it once: qubit Hamiltonian,
/// compiled operator, HF and FCI energies.
struct ProblemContext {
  MolecularProblem problem;
  QubitHamiltonian h;
  std::shared_ptr<const HamiltonianOperator> hop;
  double e_hf = 0.0;
  FciResult fci;

  static ProblemContext from_problem(MolecularProblem p);
  static ProblemContext load(const std::string& fcidump_path);
};

struct MethodSpec {
  std::string method = "surge";  // surge|uccsd|kupccgsd|adapt-sd|adapt-gspd|adapt-gsd
  Flavor flavor = Flavor::fermionic;
  SpinLayout layout = SpinLayout::interleaved;  // CNOT counting only
  SurgeOptions surge;             // epsilon, ordering switches
  int k = 1;                      // kupccgsd repetitions
  UccsdOrder uccsd_order = UccsdOrder::singles_first;
  double adapt_grad_threshold = 1e-8;
  double adapt_eig_threshold = 1e-8;
  int adapt_max_ops = 500;
  bool adapt_stop_on_cycle = false;
  VqeOptions vqe;
  int jobs = 1;
};

bool is_known_method(const std::string& method);

struct MethodResult {
  std::string method;
  OrderedAnsatz ansatz;
  VqeResult vqe;
  GateCostModel model;
  long cnot_total = 0;
  std::size_t screening_evals = 0;  // uni-parameter or pool-gradient circuits
  nlohmann::json report;            // method-specific construction record
  std::string deviations_csv;       // SURGE only
  LandscapeTrace adapt_trace;       // ADAPT only: one step per iteration
};

/// Throws ConfigError("unknown method ...") for an unrecognized method.
MethodResult run_method(const ProblemContext& ctx, const MethodSpec& spec);

GateCostModel cost_model_for(Flavor flavor, SpinLayout layout = SpinLayout::interleaved,
                             int n_spatial = 0);

/// {method, E, E_FCI, E_HF, error_mEh, n_params, cnot_total, eval_counts}
nlohmann::json energy_json(const ProblemContext& ctx, const MethodResult& r);

/// Round to the 12 significant digits used in every emitted energy.
double round12(double v);

}  // namespace surge
