// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file fcidump.hpp
 * @brief FCIDUMP integral files and the in-memory molecular problem.
 *
 * Spin-orbital indexing is interleaved: spin-orbital 2p is (spatial p, alpha)
 * and 2p+1 is (spatial p, beta). File indices are 1-based, memory 0-based.
 * Two-electron integrals are chemists' notation (pq|rs) over real orbitals and
 * are stored once per 8-fold symmetry class; every accessor canonicalizes.
 * The orbitals are assumed to be canonical RHF orbitals in energy order.
 */

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace surge {

class MolecularProblem {
 public:
  MolecularProblem() = default;
  /// Zero integrals for `n_spatial` orbitals.
  MolecularProblem(int n_spatial, int n_electrons, int ms2 = 0);

  int n_spatial() const noexcept { return n_spatial_; }
  int n_qubits() const noexcept { return 2 * n_spatial_; }
  int n_electrons() const noexcept { return n_electrons_; }
  int ms2() const noexcept { return ms2_; }
  double core_energy() const noexcept { return core_energy_; }

  double h1(int p, int q) const;
  /// (pq|rs), any index order.
  double h2(int p, int q, int r, int s) const;

  const std::vector<int>& orbsym() const noexcept { return orbsym_; }
  bool has_orbsym() const noexcept { return !orbsym_.empty(); }
  const std::vector<double>& orbital_energies() const noexcept { return orbital_energies_; }

  /// Non-fatal conditions met while parsing ("missing_core_energy", ...).
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  void set_core_energy(double e) { core_energy_ = e; }
  void set_h1(int p, int q, double v);
  void set_h2(int p, int q, int r, int s, double v);
  void set_orbsym(std::vector<int> labels);
  void set_orbital_energy(int p, double e);
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

  /// Canonical representatives (p>=q, r>=s, pq>=rs) with nonzero value.
  struct IntegralEntry {
    int p, q, r, s;
    double value;
  };
  std::vector<IntegralEntry> unique_two_electron() const;

  /// Throws surge::Error when an invariant does not hold.
  void validate() const;

 private:
  std::size_t pair_index(int p, int q) const;
  std::size_t quad_index(int p, int q, int r, int s) const;
  void check_index(int p) const;

  int n_spatial_ = 0;
  int n_electrons_ = 0;
  int ms2_ = 0;
  double core_energy_ = 0.0;
  std::vector<double> h1_;  // n x n, kept symmetric
  std::vector<double> h2_;  // packed over (pq) >= (rs) pair indices
  std::vector<int> orbsym_;
  std::vector<double> orbital_energies_;
  std::vector<std::string> warnings_;
};

/// Parse an FCIDUMP stream. Throws ParseError / IndexError.
MolecularProblem parse_fcidump(std::istream& in);
MolecularProblem parse_fcidump_string(std::string_view text);
MolecularProblem load_fcidump(const std::string& path);

/// Serialize with "%.16e i j k l" body lines.
std::string write_fcidump(const MolecularProblem& problem);

/// Spin-orbitals of the lowest n_electrons/2 spatial orbitals, ascending.
std::vector<int> hf_occupation(const MolecularProblem& problem);

inline int spin_orbital(int spatial, int spin) { return 2 * spatial + spin; }
inline int spatial_of(int spin_orbital) { return spin_orbital / 2; }
inline int spin_of(int spin_orbital) { return spin_orbital % 2; }

}  // namespace surge
