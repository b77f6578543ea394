// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <memory>
#include <random>
#include <sstream>

#include "support/oracles.hpp"
#include "surge/errors.hpp"
#include "surge/hamiltonian.hpp"
#include "surge/simulator.hpp"
#include "surge/surge.hpp"

using surge::ExcitationOp;
using surge::Flavor;
using surge::StateVector;

namespace {

double max_diff(const StateVector& a, const StateVector& b) {
  double m = 0.0;
  for (std::size_t k = 0; k < a.dim(); ++k) m = std::max(m, std::abs(a[k] - b[k]));
  return m;
}

// Random ansatz over valid operators, with a few shared parameters.
surge::OrderedAnsatz random_ansatz(int n, int n_ops, std::mt19937_64& rng) {
  surge::OrderedAnsatz a(n);
  std::bernoulli_distribution share(0.15);
  for (int k = 0; k < n_ops; ++k) {
    if (k % 5 == 0) a.begin_block();
    const auto op = oracle::random_op(n, rng);
    if (a.n_params() > 0 && share(rng)) {
      a.push_shared(op, a.n_params() - 1);
    } else {
      a.push(op);
    }
  }
  return a;
}

}  // namespace

TEST_CASE("state vector basics", "[simulator]") {
  StateVector s(2);
  CHECK(s.dim() == 4);
  CHECK(s[0] == surge::cplx(1, 0));
  CHECK(s.norm() == 1.0);
  CHECK_THROWS_AS(StateVector(31), surge::ResourceError);
  CHECK_THROWS_AS(StateVector(2).inner(StateVector(3)), surge::ShapeError);

  std::mt19937_64 rng(1);
  const StateVector r = oracle::random_state(5, rng);
  std::stringstream buf;
  r.write_binary(buf);
  const StateVector back = StateVector::read_binary(buf);
  CHECK(max_diff(r, back) == 0.0);
  std::stringstream cut;
  r.write_binary(cut);
  std::string t = cut.str();
  t.resize(t.size() - 8);
  std::stringstream truncated(t);
  CHECK_THROWS_AS(StateVector::read_binary(truncated), surge::Error);
}

TEST_CASE("HF state", "[simulator]") {
  const StateVector hf = surge::hf_state(surge::MolecularProblem(2, 2));
  CHECK(hf[0b0011] == surge::cplx(1, 0));
  CHECK(hf.norm() == 1.0);
  const auto lih = surge::load_fcidump(oracle::fixture("LiH_R2p500.fcidump"));
  const StateVector s = surge::hf_state(lih);
  CHECK(surge::expectation(s, surge::number_operator(12)) == Catch::Approx(4.0).margin(1e-14).epsilon(0));
}

TEST_CASE("simple expectations", "[simulator]") {
  surge::QubitOperator z0(3);
  z0.add(surge::PauliTerm::from_label("ZII"));
  CHECK(surge::expectation(StateVector(3), z0) == Catch::Approx(1.0).margin(1e-14).epsilon(0));
  CHECK(surge::expectation(StateVector::basis(3, 1), z0) == Catch::Approx(-1.0).margin(1e-14).epsilon(0));
  CHECK(surge::pauli_expectation(StateVector(3), surge::PauliTerm::from_label("XII")) == 0.0);
  const surge::HamiltonianOperator hop(z0);
  CHECK_THROWS_AS(hop.expectation(StateVector(2)), surge::ShapeError);
}

TEST_CASE("theta = 0 and the paired pi/2 rotation", "[simulator]") {
  const auto m = surge::load_fcidump(oracle::fixture("LiH_R2p500.fcidump"));
  const StateVector hf = surge::hf_state(m);
  const auto op = ExcitationOp::paired(1, 3);
  CHECK(max_diff(surge::apply_excitation(hf, op, 0.0), hf) == 0.0);
  const StateVector r = surge::apply_excitation(hf, op, std::numbers::pi / 2);
  // spatial 1 (bits 2,3) emptied into spatial 3 (bits 6,7)
  CHECK(std::abs(r[0b11000011]) == Catch::Approx(1.0).margin(1e-14).epsilon(0));
  CHECK(std::abs(r[0b00001111]) < 1e-15);
  CHECK_THROWS_AS(surge::apply_excitation(hf, ExcitationOp::paired(2, 2), 0.1), surge::InvalidOperator);
  CHECK_THROWS_AS(surge::apply_excitation(hf, ExcitationOp::paired(1, 7), 0.1), surge::IndexError);
}

TEST_CASE("apply_excitation matches the exponential oracle", "[simulator]") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> angle(-3.0, 3.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + 2 * (trial % 4);
    for (Flavor f : {Flavor::fermionic, Flavor::qubit}) {
      const auto op = oracle::random_op(n, rng, f);
      const double th = angle(rng);
      const StateVector psi = oracle::random_state(n, rng);
      const StateVector got = surge::apply_excitation(psi, op, th);
      const Eigen::VectorXcd want = oracle::expm_apply(oracle::generator(op, n), th, oracle::to_eigen(psi));
      CAPTURE(op.label(), th, n);
      REQUIRE((oracle::to_eigen(got) - want).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }
}

TEST_CASE("generator Pauli sum matches the ladder-matrix oracle", "[simulator]") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 4 + 2 * (trial % 2);
    for (Flavor f : {Flavor::fermionic, Flavor::qubit}) {
      const auto op = oracle::random_op(n, rng, f);
      const Eigen::MatrixXcd got = surge::to_dense(surge::generator_operator(op, n));
      const Eigen::MatrixXd want(oracle::generator(op, n));
      CAPTURE(op.label());
      REQUIRE((got - want.cast<surge::cplx>()).cwiseAbs().maxCoeff() < 1e-14);
    }
  }
}

TEST_CASE("unitarity, inverse and sector conservation", "[simulator]") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> angle(-4.0, 4.0);
  const int n = 8;
  const auto num = surge::number_operator(n);
  const auto sz = surge::sz_operator(n);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto op = oracle::random_op(n, rng, trial % 3 == 0 ? Flavor::qubit : Flavor::fermionic);
    const double th = angle(rng);
    const StateVector psi = trial % 2 ? oracle::random_state(n, rng) : oracle::random_sector_state(n, 4, rng);
    const StateVector out = surge::apply_excitation(psi, op, th);
    REQUIRE(std::abs(out.norm() - 1.0) <= 1e-10);
    REQUIRE(max_diff(surge::apply_excitation(out, op, -th), psi) <= 1e-10);
    if (trial % 10 == 0) {
      REQUIRE(std::abs(surge::expectation(out, num) - surge::expectation(psi, num)) <= 1e-10);
      REQUIRE(std::abs(surge::expectation(out, sz) - surge::expectation(psi, sz)) <= 1e-10);
    }
  }
}

TEST_CASE("compiled Hamiltonian apply equals the dense product", "[simulator]") {
  const auto m = surge::load_fcidump(oracle::fixture("BH_R2p000.fcidump"));
  const auto h = surge::build_qubit_hamiltonian(m);
  const surge::HamiltonianOperator hop(h);
  const Eigen::MatrixXcd d = surge::to_dense(h);
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 5; ++trial) {
    const StateVector psi = oracle::random_state(m.n_qubits(), rng);
    StateVector out(m.n_qubits());
    hop.apply(psi, out);
    CHECK((oracle::to_eigen(out) - d * oracle::to_eigen(psi)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("adjoint gradient", "[simulator]") {
  const auto m = surge::load_fcidump(oracle::fixture("BH_R2p000.fcidump"));
  const auto h = surge::build_qubit_hamiltonian(m);
  auto hop = std::make_shared<const surge::HamiltonianOperator>(h);
  const StateVector hf = surge::hf_state(m);
  const int n = m.n_qubits();

  SECTION("paired doubles at zero: 2 <HF|H tau|HF>") {
    surge::OrderedAnsatz a(n);
    a.begin_block();
    std::vector<ExcitationOp> ops;
    for (int i = 0; i < 2; ++i) {
      for (int v = 2; v < 5; ++v) ops.push_back(ExcitationOp::paired(i, v));
    }
    for (const auto& op : ops) a.push(op);
    std::vector<double> theta(ops.size(), 0.0), g(ops.size());
    surge::AnsatzEvaluator ev(hf, a, hop);
    ev.energy_and_gradient(theta, g);
    const Eigen::MatrixXcd d = surge::to_dense(h);
    const Eigen::VectorXcd v = oracle::to_eigen(hf);
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const Eigen::VectorXcd tv = oracle::generator(ops[k], n).cast<surge::cplx>() * v;
      const double want = 2.0 * ((d * v).adjoint() * tv)(0, 0).real();
      CHECK(g[k] == Catch::Approx(want).margin(1e-12).epsilon(0));
    }
  }

  SECTION("random ansatz against central differences") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n_ops : {1, 6, 18, 34}) {
      const auto a = random_ansatz(n, n_ops, rng);
      std::vector<double> theta(static_cast<std::size_t>(a.n_params()));
      for (auto& t : theta) t = u(rng);
      surge::AnsatzEvaluator ev(hf, a, hop);
      std::vector<double> g(theta.size());
      const double e = ev.energy_and_gradient(theta, g);
      CHECK(e == Catch::Approx(ev.energy(theta)).margin(1e-12).epsilon(0));
      const auto g2 = surge::gradient(hf, a, theta, h);
      for (std::size_t k = 0; k < theta.size(); ++k) {
        auto tp = theta, tm = theta;
        tp[k] += 1e-5;
        tm[k] -= 1e-5;
        const double fd = (ev.energy(tp) - ev.energy(tm)) / 2e-5;
        CAPTURE(n_ops, k);
        REQUIRE(std::abs(g[k] - fd) <= 1e-6);
        REQUIRE(std::abs(g2[k] - g[k]) <= 1e-10);
      }
    }
    std::vector<double> wrong(3, 0.0);
    surge::AnsatzEvaluator ev(hf, random_ansatz(n, 5, rng), hop);
    CHECK_THROWS_AS(ev.energy(wrong), surge::ShapeError);
  }

  SECTION("stationary at the uni-parameter optimum") {
    const auto op = ExcitationOp::paired(1, 2);
    const auto best = surge::uniparam_minimize(hf, op, *hop);
    surge::OrderedAnsatz a(n);
    a.begin_block();
    a.push(op);
    surge::AnsatzEvaluator ev(hf, a, hop);
    std::vector<double> g(1);
    const double th[] = {best.theta};
    ev.energy_and_gradient(th, g);
    CHECK(std::abs(g[0]) < 1e-8);
  }
}

TEST_CASE("noise estimator", "[simulator]") {
  const auto m = surge::load_fcidump(oracle::fixture("LiH_R3p000.fcidump"));
  const auto h = surge::build_qubit_hamiltonian(m);
  StateVector psi = surge::hf_state(m);
  surge::apply_excitation_inplace(psi, ExcitationOp::paired(1, 2), 0.3);
  surge::apply_excitation_inplace(psi, ExcitationOp::single(2, 4), -0.2);
  surge::apply_excitation_inplace(psi, ExcitationOp::single(3, 5), -0.2);
  const double exact = surge::expectation(psi, h);

  surge::NoiseSpec clean;
  CHECK(surge::noisy_expectation(psi, h, 500, clean) == Catch::Approx(exact).margin(1e-12).epsilon(0));

  const auto id = surge::QubitOperator::identity(12, 2.75);
  surge::NoiseSpec heavy{std::int64_t{100}, 0.3, 9};
  CHECK(surge::noisy_expectation(psi, id, 1000, heavy) == 2.75);

  surge::NoiseSpec sampled{std::int64_t{10000}, 0.0, 12345};
  const double est = surge::noisy_expectation(psi, h, 100, sampled);
  const double sigma = std::sqrt(surge::noisy_variance(psi, h, 100, sampled));
  CHECK(sigma > 0.0);
  CHECK(std::abs(est - exact) <= 3.0 * sigma);
  CHECK(surge::noisy_expectation(psi, h, 100, sampled) == est);

  surge::NoiseSpec dep{std::nullopt, 1e-3, 0};
  double prev = 0.0;
  for (long c : {0L, 10L, 100L, 500L, 2000L, 8000L}) {
    const double err = std::abs(surge::noisy_expectation(psi, h, c, dep) - exact);
    CHECK(err >= prev);
    prev = err;
  }
  CHECK(prev > 0.0);

  CHECK_THROWS_AS((surge::NoiseSpec{std::nullopt, 1.0, 0}.validate()), surge::ConfigError);
  CHECK_THROWS_AS((surge::NoiseSpec{std::int64_t{0}, 0.1, 0}.validate()), surge::ConfigError);
}
