// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/kernels.hpp"

namespace surge::kernels {
namespace {

void rotate_pairs_scalar(cplx* psi, const std::uint32_t* lo, const std::uint32_t* hi,
                         const double* sign, std::size_t n_pairs, double c, double s) {
  for (std::size_t k = 0; k < n_pairs; ++k) {
    const cplx a = psi[lo[k]];
    const cplx b = psi[hi[k]];
    const double ss = s * sign[k];
    psi[lo[k]] = c * a - ss * b;
    psi[hi[k]] = ss * a + c * b;
  }
}

cplx tau_inner_scalar(const cplx* bra, const cplx* ket, const std::uint32_t* lo,
                      const std::uint32_t* hi, const double* sign, std::size_t n_pairs) {
  cplx acc{0.0, 0.0};
  for (std::size_t k = 0; k < n_pairs; ++k) {
    acc += sign[k] * (std::conj(bra[hi[k]]) * ket[lo[k]] - std::conj(bra[lo[k]]) * ket[hi[k]]);
  }
  return acc;
}

void xgroup_apply_scalar(cplx* out, const cplx* psi, const cplx* e, std::uint64_t x,
                         std::size_t dim) {
  for (std::size_t j = 0; j < dim; ++j) out[j] += e[j] * psi[j ^ x];
}

cplx xgroup_inner_scalar(const cplx* bra, const cplx* psi, const cplx* e, std::uint64_t x,
                         std::size_t dim) {
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < dim; ++j) acc += std::conj(bra[j]) * e[j] * psi[j ^ x];
  return acc;
}

cplx dot_scalar(const cplx* a, const cplx* b, std::size_t n) {
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < n; ++j) acc += std::conj(a[j]) * b[j];
  return acc;
}

double norm2_scalar(const cplx* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) acc += std::norm(a[j]);
  return acc;
}

void axpy_scalar(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) y[j] += alpha * x[j];
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{
      "scalar",           rotate_pairs_scalar, tau_inner_scalar, xgroup_apply_scalar,
      xgroup_inner_scalar, dot_scalar,         norm2_scalar,     axpy_scalar,
  };
  return table;
}

}  // namespace surge::kernels
