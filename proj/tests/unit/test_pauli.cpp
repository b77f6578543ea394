// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <random>

#include "surge/errors.hpp"
#include "surge/hamiltonian.hpp"
#include "surge/pauli.hpp"

using surge::cplx;
using surge::PauliTerm;
using surge::QubitOperator;

namespace {

// Kronecker oracle. Each new symbol becomes the outer factor, so the first
// symbol lands on qubit 0 (least significant bit).
Eigen::MatrixXcd kron_label(const std::string& label) {
  Eigen::Matrix2cd I, X, Y, Z;
  I << 1, 0, 0, 1;
  X << 0, 1, 1, 0;
  Y << 0, cplx(0, -1), cplx(0, 1), 0;
  Z << 1, 0, 0, -1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (char ch : label) {
    const Eigen::Matrix2cd& f = ch == 'X' ? X : ch == 'Y' ? Y : ch == 'Z' ? Z : I;
    Eigen::MatrixXcd next(2 * m.rows(), 2 * m.cols());
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) next.block(r * m.rows(), c * m.cols(), m.rows(), m.cols()) = f(r, c) * m;
    }
    m = next;
  }
  return m;
}

QubitOperator single(const std::string& label, cplx c = 1.0) {
  QubitOperator op(static_cast<int>(label.size()));
  op.add(PauliTerm::from_label(label, c));
  return op;
}

}  // namespace

TEST_CASE("labels round-trip and encode Y as both masks", "[pauli]") {
  const PauliTerm t = PauliTerm::from_label("XYZI");
  CHECK(t.x == 0b0011);
  CHECK(t.z == 0b0110);
  CHECK(t.label() == "XYZI");
  CHECK(t.weight() == 3);
  CHECK_THROWS_AS(PauliTerm::from_label("XQ"), surge::Error);
}

TEST_CASE("single-qubit products", "[pauli]") {
  const auto z0 = PauliTerm::from_label("Z");
  const auto zz = multiply_terms(z0, z0);
  CHECK(zz.is_identity());
  CHECK(std::abs(zz.coeff - cplx(1, 0)) < 1e-15);

  const auto xy = multiply_terms(PauliTerm::from_label("X"), PauliTerm::from_label("Y"));
  CHECK(xy.label() == "Z");
  CHECK(std::abs(xy.coeff - cplx(0, 1)) < 1e-15);
  const auto yx = multiply_terms(PauliTerm::from_label("Y"), PauliTerm::from_label("X"));
  CHECK(std::abs(yx.coeff - cplx(0, -1)) < 1e-15);

  CHECK_THROWS_AS(multiply_terms(PauliTerm::from_label("X"), PauliTerm::from_label("XX")),
                  surge::ShapeError);
}

TEST_CASE("products match the Kronecker-product oracle", "[pauli]") {
  auto dense = [](const std::string& label) { return kron_label(label); };
  CHECK((surge::to_dense(single("ZX") * single("XX")) - dense("ZX") * dense("XX")).norm() < 1e-14);

  std::mt19937_64 rng(3);
  const char sym[] = {'I', 'X', 'Y', 'Z'};
  std::uniform_int_distribution<int> pick(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::string a(3, 'I'), b(3, 'I');
    for (int k = 0; k < 3; ++k) {
      a[static_cast<std::size_t>(k)] = sym[pick(rng)];
      b[static_cast<std::size_t>(k)] = sym[pick(rng)];
    }
    CAPTURE(a, b);
    CHECK((surge::to_dense(single(a)) - dense(a)).norm() < 1e-14);
    const Eigen::MatrixXcd want = dense(a) * dense(b);
    CHECK((surge::to_dense(single(a) * single(b)) - want).norm() < 1e-13);
    const bool anti = (want + dense(b) * dense(a)).norm() < 1e-12;
    CHECK(surge::commutes(PauliTerm::from_label(a), PauliTerm::from_label(b)) == !anti);
  }
}

TEST_CASE("simplify merges, drops and sorts", "[pauli]") {
  QubitOperator op(2);
  op.add(PauliTerm::from_label("XZ", 0.5));
  op.add(PauliTerm::from_label("IZ", 1e-13));
  op.add(PauliTerm::from_label("XZ", 0.25));
  op.add(PauliTerm::from_label("II", 2.0));
  op.simplify();
  REQUIRE(op.size() == 2);
  CHECK(op.terms()[0].is_identity());
  CHECK(std::abs(op.terms()[1].coeff - cplx(0.75, 0)) < 1e-15);
  CHECK(std::abs(op.identity_coeff() - cplx(2.0, 0)) < 1e-15);
}

TEST_CASE("adjoint, commutator and arithmetic", "[pauli]") {
  const QubitOperator a = single("XY", cplx(0.2, 0.4)) + single("ZI", 1.0);
  const QubitOperator b = single("YY", 0.3) + single("IX", cplx(0, -1));
  CHECK((surge::to_dense(a.adjoint()) - surge::to_dense(a).adjoint()).norm() < 1e-14);
  const Eigen::MatrixXcd da = surge::to_dense(a), db = surge::to_dense(b);
  CHECK((surge::to_dense(surge::commutator(a, b)) - (da * db - db * da)).norm() < 1e-13);
  CHECK((surge::to_dense(a - b) - (da - db)).norm() < 1e-14);
  CHECK(surge::commutator(a, a).empty());
  CHECK((a * cplx(0, 2)).max_imag() == Catch::Approx(2.0).margin(1e-14).epsilon(0));
}
