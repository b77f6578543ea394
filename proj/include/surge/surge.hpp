// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file surge.hpp
 * @brief Seniority-driven ansatz construction: uni-parameter reference
 * tailoring, block ordering by energy deviation, single-excitation
 * prescreening on the tailored references, intra-block ordering.
 */

#include <array>
#include <memory>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "surge/ansatz.hpp"
#include "surge/simulator.hpp"

namespace surge {

struct UniparamResult {
  double theta = 0.0;
  double energy = 0.0;
  double energy_at_zero = 0.0;
  std::size_t n_evals = 0;  // circuit evaluations spent
};

/// Global minimum over [-pi, pi) of E(theta) = <ref| e^{-theta tau} H e^{theta tau} |ref>.
/// E is a trigonometric polynomial of degree 2 for every generator here, so
/// five equally spaced samples fix it; the minimum comes from the stationary
/// quartic in tan(theta/2), the point theta = -pi, and a confirming evaluation.
UniparamResult uniparam_minimize(const StateVector& ref, const ExcitationOp& op,
                                 const HamiltonianOperator& h);
UniparamResult uniparam_minimize(const StateVector& ref, const CompiledGenerator& g,
                                 const HamiltonianOperator& h);

/// Coefficients (a0, a1, b1, a2, b2) of E(theta) from five samples at 2 pi k / 5.
std::array<double, 5> trig_coefficients(const std::array<double, 5>& samples);

struct TailoredReference {
  ExcitationOp op;
  double theta = 0.0;
  double energy = 0.0;
  double delta_e = 0.0;  // E_HF - E
  StateVector state;
  std::size_t n_evals = 0;
};

std::vector<TailoredReference> tailor_references(const StateVector& hf, double e_hf,
                                                 const std::vector<ExcitationOp>& paired,
                                                 const HamiltonianOperator& h, int jobs = 1);

/// Indices sorted by delta_e descending, ties by the operator's lexicographic
/// order. Deviations are compared on a 1e-12 Eh grid so rounding noise
/// between symmetry-equivalent operators does not decide the order.
std::vector<std::size_t> order_blocks(const std::vector<ExcitationOp>& ops,
                                      const std::vector<double>& delta_e);

struct ScreenedSingle {
  ExcitationOp op;
  double delta_e = 0.0;  // E^alpha - E^{alpha I}
  double theta = 0.0;
};

struct ScreenResult {
  std::vector<ScreenedSingle> accepted;  // ascending delta_e
  std::vector<ScreenedSingle> all;       // every candidate, pool order
  std::size_t rejected = 0;
  std::size_t n_evals = 0;
};

/// Alpha-spin candidates only; the caller mirrors the accepted ones.
ScreenResult prescreen_singles(const StateVector& block_ref, double block_energy,
                               const std::vector<ExcitationOp>& singles_pool,
                               const HamiltonianOperator& h, double epsilon, int jobs = 1);

struct SurgeOptions {
  double epsilon = 1e-6;
  Flavor flavor = Flavor::fermionic;
  /// Place the largest-deviation single right after the paired double instead.
  bool descending_singles = false;
  /// Spin complements reuse their partner's parameter.
  bool shared_complements = false;
  int jobs = 1;
};

struct SurgeBlockReport {
  ExcitationOp paired;
  std::vector<ScreenedSingle> accepted;
  std::vector<ExcitationOp> complements;
  std::size_t rejected = 0;
  std::size_t screened = 0;
};

struct SurgeReport {
  double epsilon = 0.0;
  double e_hf = 0.0;
  std::vector<TailoredReference> references;  // pool order, states dropped in JSON
  std::vector<std::size_t> block_order;
  std::vector<SurgeBlockReport> blocks;  // block order
  std::size_t tailoring_evals = 0;
  std::size_t screening_evals = 0;
};

nlohmann::json to_json(const SurgeReport& r);
/// Rows "stage,block,op,delta_e,theta,accepted".
std::string deviations_csv(const SurgeReport& r);

struct SurgeBuild {
  OrderedAnsatz ansatz;
  SurgeReport report;
};

SurgeBuild build_surge_ansatz(const MolecularProblem& problem, const QubitHamiltonian& h,
                              const SurgeOptions& options = {});
SurgeBuild build_surge_ansatz(const MolecularProblem& problem,
                              std::shared_ptr<const HamiltonianOperator> h,
                              const SurgeOptions& options = {});

}  // namespace surge
