// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/reference.hpp"

#include <Eigen/Eigenvalues>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "surge/errors.hpp"
#include "surge/simulator.hpp"

namespace surge {

std::vector<std::uint64_t> sector_basis(int n_qubits, int n_electrons, int ms2) {
  std::vector<std::uint64_t> out;
  if ((n_electrons + ms2) % 2 != 0 || n_electrons < 0) return out;
  const int n_alpha = (n_electrons + ms2) / 2;
  const int n_beta = n_electrons - n_alpha;
  std::uint64_t even = 0;
  for (int p = 0; p < n_qubits; p += 2) even |= std::uint64_t{1} << p;
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  for (std::uint64_t k = 0; k < dim; ++k) {
    if (std::popcount(k & even) == n_alpha && std::popcount(k & ~even) == n_beta) out.push_back(k);
  }
  return out;
}

FciResult fci_ground_energy(const QubitHamiltonian& h, int n_electrons, int ms2) {
  const int n = h.n_qubits();
  if (n > 14) throw ResourceError("FCI limited to 14 qubits");
  const auto basis = sector_basis(n, n_electrons, ms2);
  if (basis.empty()) {
    throw SectorError("empty sector N=" + std::to_string(n_electrons) + " MS2=" + std::to_string(ms2));
  }
  std::unordered_map<std::uint64_t, Eigen::Index> index;
  for (std::size_t k = 0; k < basis.size(); ++k) index.emplace(basis[k], static_cast<Eigen::Index>(k));

  const auto dim = static_cast<Eigen::Index>(basis.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  constexpr cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& t : h.terms()) {
    const cplx base = t.coeff * kPhase[std::popcount(t.x & t.z) % 4];
    for (Eigen::Index col = 0; col < dim; ++col) {
      const std::uint64_t k = basis[static_cast<std::size_t>(col)];
      const auto it = index.find(k ^ t.x);
      if (it == index.end()) continue;  // leaves the sector; H conserves it, so this cancels
      m(it->second, col) += (std::popcount(t.z & k) & 1) ? -base : base;
    }
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  FciResult r;
  r.energy = ev(0);
  r.n_electrons = n_electrons;
  r.ms2 = ms2;
  r.sector_dim = basis.size();
  for (Eigen::Index k = 0; k < ev.size(); ++k) r.degeneracy += (ev(k) - ev(0) <= 1e-9);
  return r;
}

double hf_energy_closed_form(const MolecularProblem& problem) {
  const int n_occ = problem.n_electrons() / 2;
  double e = problem.core_energy();
  for (int i = 0; i < n_occ; ++i) {
    e += 2.0 * problem.h1(i, i);
    for (int j = 0; j < n_occ; ++j) e += 2.0 * problem.h2(i, i, j, j) - problem.h2(i, j, j, i);
  }
  return e;
}

double hf_energy(const MolecularProblem& problem, const QubitHamiltonian& h) {
  const double closed = hf_energy_closed_form(problem);
  const double sim = expectation(hf_state(problem), h);
  if (std::abs(closed - sim) > 1e-10) {
    throw Error("HF energy routes disagree: closed form " + std::to_string(closed) + ", statevector " +
                std::to_string(sim));
  }
  return closed;
}

double hf_energy(const MolecularProblem& problem) {
  return hf_energy(problem, build_qubit_hamiltonian(problem));
}

}  // namespace surge
