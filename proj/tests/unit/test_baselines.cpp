// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>
#include <memory>
#include <random>
#include <set>

#include "support/oracles.hpp"
#include "surge/baselines.hpp"
#include "surge/errors.hpp"
#include "surge/hamiltonian.hpp"
#include "surge/reference.hpp"
#include "surge/surge.hpp"

using surge::AdaptPool;
using surge::ExcitationOp;
using surge::OpKind;

namespace {

std::shared_ptr<const surge::HamiltonianOperator> compiled(const surge::QubitHamiltonian& h) {
  return std::make_shared<surge::HamiltonianOperator>(h);
}

long choose2(long n) { return n * (n - 1) / 2; }

// Unordered pairs of disjoint spin-orbital pairs with matching Sz content.
long count_generalized_doubles(int nq) {
  long count = 0;
  for (int m = 0; m < (1 << nq); ++m) {
    if (std::popcount(static_cast<unsigned>(m)) != 4) continue;
    std::vector<int> s;
    for (int p = 0; p < nq; ++p) {
      if (m >> p & 1) s.push_back(p);
    }
    const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    for (const auto& sp : splits) {
      const int up1 = (s[sp[0]] & 1) + (s[sp[1]] & 1);
      const int up2 = (s[sp[2]] & 1) + (s[sp[3]] & 1);
      if (up1 == up2) ++count;
    }
  }
  return count;
}

std::vector<ExcitationOp> ops_of(const surge::OrderedAnsatz& a) {
  std::vector<ExcitationOp> out;
  for (const auto& e : a.sequence()) out.push_back(e.op);
  return out;
}

}  // namespace

TEST_CASE("enumeration counts", "[baselines]") {
  const auto toy = oracle::toy_two_orbital();
  const auto u = ops_of(surge::uccsd_ansatz(toy));
  REQUIRE(u.size() == 3);
  CHECK(u[0] == ExcitationOp::single(0, 2));
  CHECK(u[1] == ExcitationOp::single(1, 3));
  CHECK(u[2] == ExcitationOp::paired(0, 1));
  CHECK(ops_of(surge::uccsd_ansatz(toy, surge::UccsdOrder::doubles_first))[0] == ExcitationOp::paired(0, 1));
  CHECK(surge::kupccgsd_ansatz(toy, 1).n_params() == 3);
  CHECK(surge::kupccgsd_ansatz(toy, 2).n_params() == 6);
  CHECK(surge::kupccgsd_ansatz(toy, 2).blocks().size() == 2);
  CHECK_THROWS_AS(surge::kupccgsd_ansatz(toy, 0), surge::ConfigError);

  for (const char* name : {"LiH_R2p500.fcidump", "BH_R1p250.fcidump", "H2_R0p740.fcidump"}) {
    CAPTURE(name);
    const auto m = surge::load_fcidump(oracle::fixture(name));
    const long no = m.n_electrons() / 2, nv = m.n_spatial() - no, ns = m.n_spatial();
    const long n_singles = 2 * no * nv;
    const long n_doubles = 2 * choose2(no) * choose2(nv) + no * no * nv * nv;
    CHECK(surge::uccsd_ansatz(m).n_params() == n_singles + n_doubles);
    CHECK(static_cast<long>(surge::adapt_pool(m, AdaptPool::sd).size()) == n_singles + n_doubles);
    CHECK(surge::kupccgsd_ansatz(m, 1).n_params() == 3 * choose2(ns));
    CHECK(static_cast<long>(surge::adapt_pool(m, AdaptPool::gspd).size()) == 3 * choose2(ns));
    CHECK(static_cast<long>(surge::adapt_pool(m, AdaptPool::gsd).size()) ==
          2 * choose2(ns) + count_generalized_doubles(m.n_qubits()));

    // paired moves use the paired kind; every other rank-two op is unpaired
    std::size_t paired = 0;
    for (const auto& op : ops_of(surge::uccsd_ansatz(m))) paired += op.kind == OpKind::paired_double;
    CHECK(static_cast<long>(paired) == no * nv);
  }
}

TEST_CASE("baseline generators conserve N and Sz", "[baselines]") {
  surge::MolecularProblem m(4, 4);
  const int n = m.n_qubits();
  const Eigen::MatrixXcd num = surge::to_dense(surge::number_operator(n));
  const Eigen::MatrixXcd sz = surge::to_dense(surge::sz_operator(n));
  std::vector<ExcitationOp> all = ops_of(surge::uccsd_ansatz(m));
  for (const auto& op : ops_of(surge::kupccgsd_ansatz(m, 1))) all.push_back(op);
  for (const auto& op : surge::adapt_pool(m, AdaptPool::gsd)) all.push_back(op);
  for (const auto& op : all) {
    CAPTURE(op.label());
    const Eigen::MatrixXd t(oracle::generator(op, n));
    CHECK((t * num - num * t).cwiseAbs().maxCoeff() < 1e-14);
    CHECK((t * sz - sz * t).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(t.cwiseAbs().maxCoeff() > 0.5);
  }
}

TEST_CASE("with_flavor keeps structure", "[baselines]") {
  const auto m = surge::load_fcidump(oracle::fixture("LiH_R2p500.fcidump"));
  const auto a = surge::with_flavor(surge::build_surge_ansatz(m, surge::build_qubit_hamiltonian(m),
                                                              {.shared_complements = true})
                                        .ansatz,
                                    surge::Flavor::qubit);
  for (const auto& e : a.sequence()) CHECK(e.op.flavor == surge::Flavor::qubit);
  const auto b = surge::with_flavor(a, surge::Flavor::fermionic);
  CHECK(surge::with_flavor(b, surge::Flavor::qubit) == a);
  CHECK(b.n_params() == a.n_params());
}

TEST_CASE("UCCSD Trotter order changes the stretched energy", "[baselines]") {
  const auto m = surge::load_fcidump(oracle::fixture("LiH_R3p500.fcidump"));
  const auto h = compiled(surge::build_qubit_hamiltonian(m));
  const auto hf = surge::hf_state(m);
  const auto a = surge::optimize(surge::uccsd_ansatz(m, surge::UccsdOrder::singles_first), h, hf);
  const auto b = surge::optimize(surge::uccsd_ansatz(m, surge::UccsdOrder::doubles_first), h, hf);
  CHECK(std::abs(a.energy - b.energy) > 1e-10);
}

TEST_CASE("kUpCCGSD nesting in k", "[baselines]") {
  const auto m = surge::load_fcidump(oracle::fixture("BH_R2p500.fcidump"));
  const auto h = compiled(surge::build_qubit_hamiltonian(m));
  const auto hf = surge::hf_state(m);
  const auto k1 = surge::optimize(surge::kupccgsd_ansatz(m, 1), h, hf);
  auto init = k1.theta;
  init.resize(init.size() * 2, 0.0);
  const auto k2 = surge::optimize(surge::kupccgsd_ansatz(m, 2), h, hf, init);
  CHECK(k2.initial_energy == Catch::Approx(k1.energy).margin(1e-12).epsilon(0));
  CHECK(k2.energy <= k1.energy + 1e-12);
}

TEST_CASE("pool gradients match finite differences", "[baselines]") {
  const auto m = surge::load_fcidump(oracle::fixture("BH_R1p250.fcidump"));
  const auto hq = surge::build_qubit_hamiltonian(m);
  const surge::HamiltonianOperator h(hq);
  const auto pool = surge::adapt_pool(m, AdaptPool::gspd);
  std::vector<surge::CompiledGenerator> gens;
  for (const auto& op : pool) gens.push_back(surge::compile_generator(op, m.n_qubits()));
  std::mt19937_64 rng(3);
  const auto psi = oracle::random_sector_state(m.n_qubits(), m.n_electrons(), rng);
  const auto g = surge::pool_gradients(psi, h, gens, 3);
  REQUIRE(g.size() == pool.size());
  const double step = 1e-5;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    CAPTURE(pool[k].label());
    const auto tau = oracle::generator(pool[k], m.n_qubits());
    const Eigen::VectorXcd v = oracle::to_eigen(psi);
    const double ep = h.expectation(oracle::from_eigen(oracle::expm_apply(tau, step, v), m.n_qubits()));
    const double em = h.expectation(oracle::from_eigen(oracle::expm_apply(tau, -step, v), m.n_qubits()));
    CHECK(g[k] == Catch::Approx((ep - em) / (2 * step)).margin(1e-6).epsilon(0));
  }
}

TEST_CASE("selection cycle detection", "[baselines]") {
  using V = std::vector<std::size_t>;
  CHECK_FALSE(surge::selection_cycles(V{}));
  CHECK_FALSE(surge::selection_cycles(V{4}));
  CHECK(surge::selection_cycles(V{1, 3, 3}));
  CHECK(surge::selection_cycles(V{5, 1, 2, 1, 2}));
  CHECK(surge::selection_cycles(V{7, 1, 2, 3, 1, 2, 3}));
  CHECK_FALSE(surge::selection_cycles(V{1, 2, 1}));
  CHECK_FALSE(surge::selection_cycles(V{1, 2, 3, 1, 2}));
}

TEST_CASE("pool names", "[baselines]") {
  CHECK(surge::parse_adapt_pool("gSpD") == AdaptPool::gspd);
  CHECK(surge::parse_adapt_pool("sd") == AdaptPool::sd);
  CHECK(surge::to_string(AdaptPool::gsd) == "gSD");
  CHECK_THROWS_AS(surge::parse_adapt_pool("qeb"), surge::ConfigError);
}

TEST_CASE("ADAPT on the two-orbital toy picks the pair and stops", "[baselines]") {
  const auto m = oracle::toy_two_orbital();
  const auto hq = surge::build_qubit_hamiltonian(m);
  const auto h = compiled(hq);
  const auto r = surge::adapt_vqe(m, h, {.pool = AdaptPool::sd});
  REQUIRE(!r.trace.empty());
  CHECK(r.trace[0].op == ExcitationOp::paired(0, 1).label());
  const auto u = surge::uniparam_minimize(surge::hf_state(m), ExcitationOp::paired(0, 1), *h);
  CHECK(r.trace[0].energy == Catch::Approx(u.energy).margin(1e-9).epsilon(0));
  CHECK(r.vqe.energy == Catch::Approx(surge::fci_ground_energy(hq, 2, 0).energy).margin(1e-9).epsilon(0));
  CHECK((r.stop_reason == "gradient" || r.stop_reason == "energy"));

  const auto capped = surge::adapt_vqe(m, h, {.pool = AdaptPool::sd, .max_ops = 1});
  CHECK(capped.ansatz.n_ops() == 1);
  CHECK_THROWS_AS(surge::adapt_vqe(m, h, {.grad_threshold = 0.0}), surge::ConfigError);
}

TEST_CASE("ADAPT-gSpD trace and comparison with SURGE", "[baselines]") {
  const auto m = surge::load_fcidump(oracle::fixture("BH_R1p250.fcidump"));
  const auto hq = surge::build_qubit_hamiltonian(m);
  const auto h = compiled(hq);
  const auto model = surge::GateCostModel::for_flavor(surge::Flavor::fermionic);
  const auto r = surge::adapt_vqe(m, h, {.pool = AdaptPool::gspd, .jobs = 4}, model);
  REQUIRE(!r.trace.empty());
  for (std::size_t k = 1; k < r.trace.size(); ++k) {
    CHECK(r.trace[k].energy <= r.trace[k - 1].energy + 1e-9);
    CHECK(r.trace[k].cumulative_cnot > r.trace[k - 1].cumulative_cnot);
    CHECK(r.trace[k].gradient_measurements > r.trace[k - 1].gradient_measurements);
  }
  CHECK(r.trace.back().cumulative_cnot == surge::ansatz_cnot_total(r.ansatz, model));
  CHECK(r.vqe.energy_evals == r.trace.back().energy_measurements);

  const auto built = surge::build_surge_ansatz(m, h);
  const auto s = surge::optimize(built.ansatz, h, surge::hf_state(m));
  CHECK(r.vqe.energy <= s.energy + 1e-6);
  CHECK(r.vqe.energy >= surge::fci_ground_energy(hq, m.n_electrons(), m.ms2()).energy - 1e-9);
}
