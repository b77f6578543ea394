// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file simulator.hpp
 * @brief Exact statevector engine: generator exponentials, expectations,
 * adjoint gradients, and a shot-sampled depolarized estimator.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "surge/ansatz.hpp"
#include "surge/excitation.hpp"
#include "surge/fcidump.hpp"
#include "surge/hamiltonian.hpp"
#include "surge/statevector.hpp"

namespace surge {

StateVector hf_state(const MolecularProblem& problem);

/// psi <- exp(theta tau) psi for a compiled generator.
void apply_generator(StateVector& psi, const CompiledGenerator& g, double theta);
/// <bra| tau |ket>.
cplx generator_inner(const StateVector& bra, const StateVector& ket, const CompiledGenerator& g);

void apply_excitation_inplace(StateVector& psi, const ExcitationOp& op, double theta);
StateVector apply_excitation(const StateVector& psi, const ExcitationOp& op, double theta);

/// Hamiltonian compiled into X-mask groups with per-row coefficient vectors,
/// so H|psi> costs one pass per distinct X-mask.
class HamiltonianOperator {
 public:
  explicit HamiltonianOperator(const QubitHamiltonian& h);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t n_groups() const noexcept { return masks_.size(); }

  /// out = H in.
  void apply(const StateVector& in, StateVector& out) const;
  double expectation(const StateVector& psi) const;

 private:
  int n_qubits_ = 0;
  std::vector<std::uint64_t> masks_;
  std::vector<std::vector<cplx>> diag_;  // per group, length 2^n
};

/// sum_k c_k <psi|P_k|psi>, term by term.
double expectation(const StateVector& psi, const QubitHamiltonian& h);
double expectation(const StateVector& psi, const HamiltonianOperator& h);

/// <psi|P|psi> for one Pauli string (coefficient ignored).
double pauli_expectation(const StateVector& psi, const PauliTerm& term);

/// Energy and adjoint gradient of a fixed operator sequence applied to a
/// reference state. Counts every call so callers can report evaluation totals.
class AnsatzEvaluator {
 public:
  AnsatzEvaluator(StateVector reference, const OrderedAnsatz& ansatz,
                  std::shared_ptr<const HamiltonianOperator> h);

  int n_params() const noexcept { return n_params_; }
  const HamiltonianOperator& hamiltonian() const noexcept { return *h_; }

  StateVector state(std::span<const double> theta) const;
  double energy(std::span<const double> theta);
  /// Fills grad (length n_params) and returns the energy.
  double energy_and_gradient(std::span<const double> theta, std::span<double> grad);

  std::size_t energy_evals() const noexcept { return n_energy_; }
  std::size_t gradient_evals() const noexcept { return n_gradient_; }

 private:
  void check(std::span<const double> theta) const;

  StateVector reference_;
  std::vector<int> params_;
  std::vector<CompiledGenerator> gens_;
  int n_params_ = 0;
  std::shared_ptr<const HamiltonianOperator> h_;
  std::size_t n_energy_ = 0;
  std::size_t n_gradient_ = 0;
};

std::vector<double> gradient(const StateVector& state0, const OrderedAnsatz& ansatz,
                             std::span<const double> theta, const QubitHamiltonian& h);

struct NoiseSpec {
  std::optional<std::int64_t> shots;  // nullopt: exact expectations
  double p_cnot = 0.0;
  std::uint64_t seed = 0;

  /// Throws ConfigError when p_cnot is outside [0, 1) or shots < 1.
  void validate() const;
};

/// Global depolarizing scale (1-p)^cnot on every non-identity string, then
/// per-string binomial shot sampling. Deterministic for a fixed seed.
double noisy_expectation(const StateVector& psi, const QubitHamiltonian& h, long cnot_count,
                         const NoiseSpec& noise);

/// Analytic variance of the shot-sampled estimator at the depolarized means.
double noisy_variance(const StateVector& psi, const QubitHamiltonian& h, long cnot_count,
                      const NoiseSpec& noise);

}  // namespace surge
