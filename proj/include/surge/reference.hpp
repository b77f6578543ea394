// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file reference.hpp
 * @brief Exact classical baselines: sector-restricted FCI and the HF energy.
 */

#include <cstdint>
#include <vector>

#include "surge/fcidump.hpp"
#include "surge/hamiltonian.hpp"

namespace surge {

/// 1 kcal/mol in hartree; the accuracy predicate used everywhere.
inline constexpr double kChemicalAccuracy = 1.594e-3;

inline bool chemically_accurate(double error_hartree) {
  return std::abs(error_hartree) <= kChemicalAccuracy;
}

struct FciResult {
  double energy = 0.0;
  int n_electrons = 0;
  int ms2 = 0;
  int degeneracy = 0;  // eigenvalues within 1e-9 of the minimum
  std::size_t sector_dim = 0;
};

/// Basis states with n_electrons set bits and (alpha - beta) = ms2, where
/// alpha orbitals sit on even qubits. Ascending order.
std::vector<std::uint64_t> sector_basis(int n_qubits, int n_electrons, int ms2);

/// Throws SectorError for an empty sector, ResourceError above 14 qubits.
FciResult fci_ground_energy(const QubitHamiltonian& h, int n_electrons, int ms2);

/// E_core + 2 sum_i h_ii + sum_ij [2 (ii|jj) - (ij|ji)] over occupied i, j.
double hf_energy_closed_form(const MolecularProblem& problem);

/// Closed form cross-checked against <HF|H|HF>; throws Error if they differ
/// by more than 1e-10.
double hf_energy(const MolecularProblem& problem, const QubitHamiltonian& h);
double hf_energy(const MolecularProblem& problem);

}  // namespace surge
