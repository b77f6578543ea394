// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file kernels.hpp
 * @brief Inner-loop kernels of the statevector engine.
 *
 * Every kernel exists as a scalar reference implementation and, on x86-64
 * builds, as an AVX2/FMA variant. The active table is picked once at first use
 * from the CPU feature bits; the environment variable SURGE_KERNELS=scalar
 * forces the reference path. Both tables are exported so tests can compare
 * them element by element.
 *
 * Conventions shared by all kernels:
 *  - amplitudes are interleaved (re, im) doubles, i.e. std::complex<double>;
 *  - a pair list (lo[k], hi[k], sign[k]) describes a generator
 *    tau = T - T^dagger with T|lo> = sign|hi>; lo and hi entries are all
 *    distinct, so pairs can be processed in any order;
 *  - an x-group is one Pauli X-mask x with a per-row coefficient vector e,
 *    contributing out[j] += e[j] * psi[j ^ x].
 */

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string_view>

namespace surge::kernels {

using cplx = std::complex<double>;

struct KernelTable {
  const char* name;

  /// psi <- exp(theta tau) psi with c = cos(theta), s = sin(theta).
  void (*rotate_pairs)(cplx* psi, const std::uint32_t* lo, const std::uint32_t* hi,
                       const double* sign, std::size_t n_pairs, double c, double s);

  /// <bra| tau |ket>.
  cplx (*tau_inner)(const cplx* bra, const cplx* ket, const std::uint32_t* lo,
                    const std::uint32_t* hi, const double* sign, std::size_t n_pairs);

  /// out[j] += e[j] * psi[j ^ x] for j in [0, dim).
  void (*xgroup_apply)(cplx* out, const cplx* psi, const cplx* e, std::uint64_t x,
                       std::size_t dim);

  /// sum_j conj(bra[j]) * e[j] * psi[j ^ x].
  cplx (*xgroup_inner)(const cplx* bra, const cplx* psi, const cplx* e, std::uint64_t x,
                       std::size_t dim);

  /// sum_j conj(a[j]) * b[j].
  cplx (*dot)(const cplx* a, const cplx* b, std::size_t n);

  /// sum_j |a[j]|^2.
  double (*norm2)(const cplx* a, std::size_t n);

  /// y[j] += alpha * x[j].
  void (*axpy)(cplx* y, cplx alpha, const cplx* x, std::size_t n);
};

const KernelTable& scalar_kernels();

/// AVX2/FMA table, or nullptr when not compiled in or not supported by the CPU.
const KernelTable* avx2_kernels();

/// Table used by the simulator.
const KernelTable& active();

/// Force a table by name ("scalar" or "avx2"). Returns false if unavailable.
bool select(std::string_view name);

}  // namespace surge::kernels
