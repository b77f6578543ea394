// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/statevector.hpp"

#include <bit>
#include <cmath>
#include <istream>
#include <ostream>

#include "surge/errors.hpp"
#include "surge/kernels.hpp"

namespace surge {

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 0 || n_qubits > 30) {
    throw ResourceError("statevector of " + std::to_string(n_qubits) + " qubits");
  }
  amp_.assign(std::size_t{1} << n_qubits, cplx{0.0, 0.0});
  amp_[0] = 1.0;
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) throw IndexError("basis index outside register");
  s.amp_[0] = 0.0;
  s.amp_[index] = 1.0;
  return s;
}

double StateVector::norm() const { return std::sqrt(kernels::active().norm2(amp_.data(), amp_.size())); }

void StateVector::normalize() {
  const double n = norm();
  if (n == 0.0) throw Error("cannot normalize the zero vector");
  for (auto& a : amp_) a /= n;
}

cplx StateVector::inner(const StateVector& other) const {
  if (other.n_qubits_ != n_qubits_) throw ShapeError("statevector widths differ");
  return kernels::active().dot(amp_.data(), other.amp_.data(), amp_.size());
}

namespace {

template <typename T>
void put_le(std::ostream& out, T v) {
  static_assert(std::endian::native == std::endian::little, "big-endian hosts unsupported");
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T get_le(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof v);
  if (!in) throw Error("truncated statevector dump");
  return v;
}

}  // namespace

void StateVector::write_binary(std::ostream& out) const {
  put_le<std::int32_t>(out, n_qubits_);
  for (const auto& a : amp_) {
    put_le(out, a.real());
    put_le(out, a.imag());
  }
}

StateVector StateVector::read_binary(std::istream& in) {
  StateVector s(get_le<std::int32_t>(in));
  for (auto& a : s.amp_) {
    const double re = get_le<double>(in);
    a = cplx{re, get_le<double>(in)};
  }
  return s;
}

}  // namespace surge
