// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/exchange_circuits.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <unsupported/Eigen/MatrixFunctions>

#include "surge/errors.hpp"
#include "surge/hamiltonian.hpp"

namespace surge::circuits {

int Circuit::cnot_count() const {
  int n = 0;
  for (const auto& g : gates) n += g.kind == GateKind::cnot;
  return n;
}

void Circuit::cz(int c, int t) {
  gates.push_back({GateKind::h, t});
  gates.push_back({GateKind::cnot, t, c});
  gates.push_back({GateKind::h, t});
}

Circuit single_exchange_circuit(double theta) {
  constexpr int p = 0, q = 1;
  const double half_pi = std::numbers::pi / 2;
  Circuit c{2, {}};
  c.gates = {{GateKind::ry, p, -1, -half_pi}, {GateKind::cnot, q, p},
             {GateKind::ry, p, -1, -theta},   {GateKind::ry, q, -1, theta},
             {GateKind::cnot, q, p},          {GateKind::ry, p, -1, half_pi}};
  return c;
}

namespace {

constexpr std::array<int, 8> kGray = {0, 1, 0, 2, 0, 1, 0, 2};

// phi such that the multiplexed Ry turns by `target` only on control pattern
// (c0, c1, c2) = (1, 0, 0). Row r is the pattern with c_k = bit (2 - k) of r.
std::array<double, 8> multiplexer_angles(double target) {
  Eigen::Matrix<double, 8, 8> A;
  Eigen::Matrix<double, 8, 1> rhs = Eigen::Matrix<double, 8, 1>::Zero();
  for (int r = 0; r < 8; ++r) {
    const std::array<int, 3> s = {(r >> 2) & 1, (r >> 1) & 1, r & 1};
    int parity = 0;
    for (int k = 0; k < 8; ++k) {
      parity ^= s[kGray[k]];
      A(r, k) = parity ? -1.0 : 1.0;
    }
    if (s[0] == 1 && s[1] == 0 && s[2] == 0) rhs(r) = target;
  }
  const Eigen::Matrix<double, 8, 1> phi = A.fullPivLu().solve(rhs);
  std::array<double, 8> out{};
  for (int k = 0; k < 8; ++k) out[k] = phi(k);
  return out;
}

}  // namespace

Circuit double_exchange_circuit(double theta) {
  constexpr int i = 0, j = 1, a = 2, b = 3;
  const std::array<int, 3> ctrl = {a, j, b};
  const auto phi = multiplexer_angles(-2.0 * theta);
  Circuit c{4, {}};
  c.gates.push_back({GateKind::cnot, j, i});
  c.gates.push_back({GateKind::cnot, b, a});
  // CZ(a, i) * CNOT(i -> a) == S_i S_a CNOT(i -> a) Sdg_a
  c.gates.push_back({GateKind::sdg, a});
  c.gates.push_back({GateKind::cnot, a, i});
  c.gates.push_back({GateKind::s, a});
  c.gates.push_back({GateKind::s, i});
  c.gates.push_back({GateKind::ry, i, -1, phi[0]});
  for (int k = 1; k < 8; ++k) {
    c.cz(ctrl[kGray[k]], i);
    c.gates.push_back({GateKind::ry, i, -1, phi[k]});
  }
  c.gates.push_back({GateKind::cnot, a, i});
  c.gates.push_back({GateKind::cnot, b, a});
  c.gates.push_back({GateKind::cnot, j, i});
  return c;
}

namespace {

void apply_gate(Eigen::VectorXcd& v, const Gate& g) {
  const Eigen::Index dim = v.size();
  const Eigen::Index tb = Eigen::Index{1} << g.target;
  if (g.kind == GateKind::cnot) {
    const Eigen::Index cb = Eigen::Index{1} << g.control;
    for (Eigen::Index k = 0; k < dim; ++k) {
      if ((k & cb) && !(k & tb)) std::swap(v(k), v(k | tb));
    }
    return;
  }
  Eigen::Matrix2cd u;
  const double r = 1.0 / std::sqrt(2.0);
  const cplx I{0.0, 1.0};
  switch (g.kind) {
    case GateKind::h: u << r, r, r, -r; break;
    case GateKind::s: u << 1, 0, 0, I; break;
    case GateKind::sdg: u << 1, 0, 0, -I; break;
    case GateKind::ry: {
      const double c = std::cos(g.angle / 2), s = std::sin(g.angle / 2);
      u << c, -s, s, c;
      break;
    }
    case GateKind::cnot: break;
  }
  for (Eigen::Index k = 0; k < dim; ++k) {
    if (k & tb) continue;
    const cplx x0 = v(k), x1 = v(k | tb);
    v(k) = u(0, 0) * x0 + u(0, 1) * x1;
    v(k | tb) = u(1, 0) * x0 + u(1, 1) * x1;
  }
}

}  // namespace

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  const Eigen::Index dim = Eigen::Index{1} << c.n_qubits;
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
    v(col) = 1.0;
    for (const auto& g : c.gates) apply_gate(v, g);
    u.col(col) = v;
  }
  return u;
}

SynthesisReport verify_exchange_circuits() {
  SynthesisReport rep;
  const ExcitationOp single = ExcitationOp::single(0, 1, Flavor::qubit);
  // Qubit-flavor ops carry no spin rule; (i, j, a, b) = (0, 1, 2, 3) keeps Sz.
  const ExcitationOp dbl = ExcitationOp::double_exc(0, 1, 2, 3, Flavor::qubit);
  const Eigen::MatrixXcd tau1 = to_dense(generator_operator(single, 2));
  const Eigen::MatrixXcd tau2 = to_dense(generator_operator(dbl, 4));
  for (double theta : {0.0, 0.37, -1.21, 2.9}) {
    const Circuit c1 = single_exchange_circuit(theta);
    const Circuit c2 = double_exchange_circuit(theta);
    rep.single_cnots = c1.cnot_count();
    rep.double_cnots = c2.cnot_count();
    const Eigen::MatrixXcd e1 = (theta * tau1).exp();
    const Eigen::MatrixXcd e2 = (theta * tau2).exp();
    rep.max_error = std::max(rep.max_error, (circuit_unitary(c1) - e1).cwiseAbs().maxCoeff());
    rep.max_error = std::max(rep.max_error, (circuit_unitary(c2) - e2).cwiseAbs().maxCoeff());
  }
  return rep;
}

GateCostModel synthesized_cost_model() {
  static const SynthesisReport rep = verify_exchange_circuits();
  if (rep.max_error > 1e-10) throw Error("exchange circuit does not reproduce its generator");
  GateCostModel m;
  m.flavor = Flavor::qubit;
  m.qubit_single = rep.single_cnots;
  m.qubit_double = rep.double_cnots;
  return m;
}

}  // namespace surge::circuits
