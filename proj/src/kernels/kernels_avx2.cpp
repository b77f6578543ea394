// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

// Compiled with -mavx2 -mfma. Only reached after a runtime CPU check.

#include <immintrin.h>

#include "surge/kernels.hpp"

namespace surge::kernels {
namespace {

// Two complex numbers per register: [re0, im0, re1, im1].

inline __m256d load2(const cplx* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(cplx* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

inline __m256d gather2(const cplx* base, std::uint32_t i0, std::uint32_t i1) {
  const __m128d a = _mm_loadu_pd(reinterpret_cast<const double*>(base + i0));
  const __m128d b = _mm_loadu_pd(reinterpret_cast<const double*>(base + i1));
  return _mm256_insertf128_pd(_mm256_castpd128_pd256(a), b, 1);
}

inline void scatter2(cplx* base, std::uint32_t i0, std::uint32_t i1, __m256d v) {
  _mm_storeu_pd(reinterpret_cast<double*>(base + i0), _mm256_castpd256_pd128(v));
  _mm_storeu_pd(reinterpret_cast<double*>(base + i1), _mm256_extractf128_pd(v, 1));
}

// a * b
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

// conj(a) * b
inline __m256d cmul_conj(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0xF);
  const __m256d b_sw = _mm256_permute_pd(b, 0x5);
  return _mm256_fmsubadd_pd(b, a_re, _mm256_mul_pd(b_sw, a_im));
}

inline cplx hsum2(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  double out[2];
  _mm_storeu_pd(out, s);
  return {out[0], out[1]};
}

// psi[j ^ x], psi[(j+1) ^ x] for even j.
inline __m256d load_xored(const cplx* psi, std::size_t j, std::uint64_t x) {
  const __m256d v = load2(psi + ((j ^ x) & ~std::uint64_t{1}));
  return (x & 1U) ? _mm256_permute2f128_pd(v, v, 0x01) : v;
}

void rotate_pairs_avx2(cplx* psi, const std::uint32_t* lo, const std::uint32_t* hi,
                       const double* sign, std::size_t n_pairs, double c, double s) {
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t k = 0;
  for (; k + 2 <= n_pairs; k += 2) {
    const __m256d a = gather2(psi, lo[k], lo[k + 1]);
    const __m256d b = gather2(psi, hi[k], hi[k + 1]);
    const double s0 = s * sign[k];
    const double s1 = s * sign[k + 1];
    const __m256d vs = _mm256_set_pd(s1, s1, s0, s0);
    const __m256d new_lo = _mm256_fnmadd_pd(vs, b, _mm256_mul_pd(vc, a));
    const __m256d new_hi = _mm256_fmadd_pd(vs, a, _mm256_mul_pd(vc, b));
    scatter2(psi, lo[k], lo[k + 1], new_lo);
    scatter2(psi, hi[k], hi[k + 1], new_hi);
  }
  for (; k < n_pairs; ++k) {
    const cplx a = psi[lo[k]];
    const cplx b = psi[hi[k]];
    const double ss = s * sign[k];
    psi[lo[k]] = c * a - ss * b;
    psi[hi[k]] = ss * a + c * b;
  }
}

cplx tau_inner_avx2(const cplx* bra, const cplx* ket, const std::uint32_t* lo,
                    const std::uint32_t* hi, const double* sign, std::size_t n_pairs) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n_pairs; k += 2) {
    const __m256d bh = gather2(bra, hi[k], hi[k + 1]);
    const __m256d bl = gather2(bra, lo[k], lo[k + 1]);
    const __m256d kl = gather2(ket, lo[k], lo[k + 1]);
    const __m256d kh = gather2(ket, hi[k], hi[k + 1]);
    const __m256d vs = _mm256_set_pd(sign[k + 1], sign[k + 1], sign[k], sign[k]);
    const __m256d t = _mm256_sub_pd(cmul_conj(bh, kl), cmul_conj(bl, kh));
    acc = _mm256_fmadd_pd(vs, t, acc);
  }
  cplx out = hsum2(acc);
  for (; k < n_pairs; ++k) {
    out += sign[k] * (std::conj(bra[hi[k]]) * ket[lo[k]] - std::conj(bra[lo[k]]) * ket[hi[k]]);
  }
  return out;
}

void xgroup_apply_avx2(cplx* out, const cplx* psi, const cplx* e, std::uint64_t x,
                       std::size_t dim) {
  if (dim < 2) {
    out[0] += e[0] * psi[0 ^ x];
    return;
  }
  for (std::size_t j = 0; j < dim; j += 2) {
    const __m256d p = load_xored(psi, j, x);
    store2(out + j, _mm256_add_pd(load2(out + j), cmul(load2(e + j), p)));
  }
}

cplx xgroup_inner_avx2(const cplx* bra, const cplx* psi, const cplx* e, std::uint64_t x,
                       std::size_t dim) {
  if (dim < 2) return std::conj(bra[0]) * e[0] * psi[0 ^ x];
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t j = 0; j < dim; j += 2) {
    const __m256d t = cmul(load2(e + j), load_xored(psi, j, x));
    acc = _mm256_add_pd(acc, cmul_conj(load2(bra + j), t));
  }
  return hsum2(acc);
}

cplx dot_avx2(const cplx* a, const cplx* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) acc = _mm256_add_pd(acc, cmul_conj(load2(a + j), load2(b + j)));
  cplx out = hsum2(acc);
  for (; j < n; ++j) out += std::conj(a[j]) * b[j];
  return out;
}

double norm2_avx2(const cplx* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const __m256d v = load2(a + j);
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  const cplx s = hsum2(acc);
  double out = s.real() + s.imag();
  for (; j < n; ++j) out += std::norm(a[j]);
  return out;
}

void axpy_avx2(cplx* y, cplx alpha, const cplx* x, std::size_t n) {
  const __m256d va = _mm256_set_pd(alpha.imag(), alpha.real(), alpha.imag(), alpha.real());
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) store2(y + j, _mm256_add_pd(load2(y + j), cmul(load2(x + j), va)));
  for (; j < n; ++j) y[j] += alpha * x[j];
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{
      "avx2",            rotate_pairs_avx2, tau_inner_avx2, xgroup_apply_avx2,
      xgroup_inner_avx2, dot_avx2,          norm2_avx2,     axpy_avx2,
  };
  return table;
}

}  // namespace surge::kernels
