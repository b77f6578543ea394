// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file statevector.hpp
 * @brief Dense 2^n amplitude vector. Basis index bit k is qubit k.
 *
 * Binary dump format: int32 n_qubits, then 2^n (re, im) float64 pairs, all
 * little-endian.
 */

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace surge {

using cplx = std::complex<double>;

class StateVector {
 public:
  StateVector() = default;
  /// |0...0> on n qubits. Throws ResourceError above 30 qubits.
  explicit StateVector(int n_qubits);

  static StateVector basis(int n_qubits, std::uint64_t index);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amp_.size(); }

  cplx* data() noexcept { return amp_.data(); }
  const cplx* data() const noexcept { return amp_.data(); }
  std::span<cplx> amplitudes() noexcept { return amp_; }
  std::span<const cplx> amplitudes() const noexcept { return amp_; }
  cplx& operator[](std::size_t k) { return amp_[k]; }
  const cplx& operator[](std::size_t k) const { return amp_[k]; }

  double norm() const;
  void normalize();

  /// sum_j conj(this[j]) other[j]. Throws ShapeError on mismatch.
  cplx inner(const StateVector& other) const;

  void write_binary(std::ostream& out) const;
  static StateVector read_binary(std::istream& in);

 private:
  int n_qubits_ = 0;
  std::vector<cplx> amp_;
};

}  // namespace surge
