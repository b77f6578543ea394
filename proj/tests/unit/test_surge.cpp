// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include <catch_amalgamated.hpp>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <set>

#include "support/oracles.hpp"
#include "surge/errors.hpp"
#include "surge/hamiltonian.hpp"
#include "surge/io.hpp"
#include "surge/surge.hpp"

using surge::ExcitationOp;
using surge::HamiltonianOperator;

namespace {

constexpr double kPi = std::numbers::pi;

struct Loaded {
  surge::MolecularProblem m;
  surge::QubitHamiltonian h;
  HamiltonianOperator hop;
  explicit Loaded(const std::string& name)
      : m(surge::load_fcidump(oracle::fixture(name))), h(surge::build_qubit_hamiltonian(m)), hop(h) {}
};

}  // namespace

TEST_CASE("trig coefficients reproduce a degree-2 series", "[surge]") {
  const double c[5] = {-1.2, 0.3, -0.45, 0.07, 0.11};
  auto f = [&](double t) {
    return c[0] + c[1] * std::cos(t) + c[2] * std::sin(t) + c[3] * std::cos(2 * t) + c[4] * std::sin(2 * t);
  };
  std::array<double, 5> s{};
  for (int k = 0; k < 5; ++k) s[k] = f(2 * kPi * k / 5);
  const auto got = surge::trig_coefficients(s);
  for (int k = 0; k < 5; ++k) CHECK(got[k] == Catch::Approx(c[k]).margin(1e-14).epsilon(0));
}

TEST_CASE("uniparam minimum matches the projected scan oracle", "[surge]") {
  std::mt19937_64 rng(2024);
  for (const char* name : {"H2_R2p000.fcidump", "LiH_R2p500.fcidump", "BH_R2p000.fcidump"}) {
    CAPTURE(name);
    const Loaded L(name);
    const int n = L.m.n_qubits();
    for (int trial = 0; trial < 12; ++trial) {
      CAPTURE(trial);
      const auto op = oracle::random_op(n, rng);
      const auto ref = trial % 3 == 0 ? surge::hf_state(L.m) : oracle::random_sector_state(n, L.m.n_electrons(), rng);
      const oracle::ProjectedEnergy e(ref, op, L.hop);
      REQUIRE(e.tau3_residual < 1e-12);
      const auto [t_star, e_star] = oracle::scan_minimum(e);
      const auto u = surge::uniparam_minimize(ref, op, L.hop);
      CHECK(u.energy == Catch::Approx(e_star).margin(1e-9).epsilon(0));
      CHECK(u.energy <= u.energy_at_zero + 1e-12);
      CHECK(u.energy == Catch::Approx(e(u.theta)).margin(1e-10).epsilon(0));
      CHECK(u.theta >= -kPi);
      CHECK(u.theta < kPi);
      CHECK(e_star >= u.energy - 1e-10);
      CHECK(u.n_evals <= 6);
    }
  }
}

TEST_CASE("one orbital pair: uniparam equals the 2x2 eigenproblem", "[surge]") {
  const auto m = oracle::toy_two_orbital();
  const auto h = surge::build_qubit_hamiltonian(m);
  const HamiltonianOperator hop(h);
  const Eigen::MatrixXd d(oracle::fermionic_hamiltonian(m));
  // |HF> = 0b0011, paired double = 0b1100
  Eigen::Matrix2d sub;
  sub << d(3, 3), d(3, 12), d(12, 3), d(12, 12);
  const double want = Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d>(sub).eigenvalues()(0);
  const auto u = surge::uniparam_minimize(surge::hf_state(m), ExcitationOp::paired(0, 1), hop);
  CHECK(u.energy == Catch::Approx(want).margin(1e-12).epsilon(0));
  CHECK(u.theta != 0.0);
}

TEST_CASE("diagonal Hamiltonian leaves an eigenstate alone", "[surge]") {
  surge::QubitOperator h(4);
  h.add(surge::PauliTerm::from_label("ZIII", 0.3));
  h.add(surge::PauliTerm::from_label("IZZI", -0.2));
  h.add(surge::PauliTerm::from_label("ZZZZ", 0.05));
  const HamiltonianOperator hop(h);
  surge::StateVector ref(4);
  ref[0b0011] = 1.0;
  for (const auto& op : {ExcitationOp::paired(0, 1), ExcitationOp::single(0, 2)}) {
    const auto u = surge::uniparam_minimize(ref, op, hop);
    const double e0 = hop.expectation(ref);
    CHECK(u.energy <= e0 + 1e-12);
    if (u.theta == 0.0) CHECK(u.energy == e0);
  }
  // Ground determinant of a pure-Z model: no rotation lowers it.
  surge::QubitOperator hz(4);
  hz.add(surge::PauliTerm::from_label("ZIII", 1.0));
  hz.add(surge::PauliTerm::from_label("IZII", 1.0));
  hz.add(surge::PauliTerm::from_label("IIZI", -1.0));
  hz.add(surge::PauliTerm::from_label("IIIZ", -1.0));
  const HamiltonianOperator hzop(hz);
  surge::StateVector g(4);
  g[0b0011] = 1.0;
  const auto u = surge::uniparam_minimize(g, ExcitationOp::paired(0, 1), hzop);
  CHECK(u.theta == 0.0);
  CHECK(u.energy == hzop.expectation(g));
}

TEST_CASE("block ordering", "[surge]") {
  const std::vector<ExcitationOp> ops = {ExcitationOp::paired(0, 2), ExcitationOp::paired(0, 3),
                                         ExcitationOp::paired(1, 2)};
  CHECK(surge::order_blocks(ops, {0.3, 0.7, 0.1}) == std::vector<std::size_t>{1, 0, 2});
  const std::vector<ExcitationOp> shuffled = {ops[2], ops[0], ops[1]};
  CHECK(surge::order_blocks(shuffled, {0.5, 0.5, 0.5}) == std::vector<std::size_t>{1, 2, 0});
  CHECK_THROWS_AS(surge::order_blocks(ops, {0.1}), surge::ShapeError);
}

TEST_CASE("LiH reference tailoring", "[surge]") {
  const Loaded L("LiH_R2p500.fcidump");
  const auto pool = surge::build_pool(L.m);
  const auto hf = surge::hf_state(L.m);
  const double e_hf = L.hop.expectation(hf);
  const auto refs = surge::tailor_references(hf, e_hf, pool.paired, L.hop);
  REQUIRE(refs.size() == 8);

  std::vector<double> de;
  std::vector<double> oracle_de;
  for (const auto& t : refs) {
    CAPTURE(t.op.label());
    CHECK(t.delta_e >= -1e-10);
    CHECK(t.energy <= e_hf + 1e-10);
    CHECK(t.delta_e == Catch::Approx(e_hf - t.energy).margin(1e-15).epsilon(0));
    CHECK(L.hop.expectation(t.state) == Catch::Approx(t.energy).margin(1e-10).epsilon(0));
    const oracle::ProjectedEnergy e(hf, t.op, L.hop);
    oracle_de.push_back(e_hf - oracle::scan_minimum(e).second);
    CHECK(t.delta_e == Catch::Approx(oracle_de.back()).margin(1e-9).epsilon(0));
    de.push_back(t.delta_e);
  }
  const auto order = surge::order_blocks(pool.paired, de);

  // independent sort on the scanned deviations
  std::vector<std::size_t> brute(refs.size());
  std::iota(brute.begin(), brute.end(), std::size_t{0});
  std::sort(brute.begin(), brute.end(), [&](std::size_t x, std::size_t y) {
    if (std::abs(oracle_de[x] - oracle_de[y]) > 1e-8) return oracle_de[x] > oracle_de[y];
    return std::pair{pool.paired[x].i, pool.paired[x].a} < std::pair{pool.paired[y].i, pool.paired[y].a};
  });
  CHECK(order == brute);
  const auto top = std::max_element(oracle_de.begin(), oracle_de.end()) - oracle_de.begin();
  CHECK(oracle_de[order[0]] == Catch::Approx(oracle_de[static_cast<std::size_t>(top)]).margin(1e-9).epsilon(0));

  // order of evaluation is irrelevant
  const auto par = surge::tailor_references(hf, e_hf, pool.paired, L.hop, 4);
  for (std::size_t k = 0; k < refs.size(); ++k) CHECK(par[k].energy == refs[k].energy);

  const auto one = surge::tailor_references(hf, e_hf, {pool.paired[3]}, L.hop);
  REQUIRE(one.size() == 1);
  CHECK(one[0].delta_e == refs[3].delta_e);
}

TEST_CASE("no pair coupling gives zero deviations and lexicographic blocks", "[surge]") {
  surge::MolecularProblem m(3, 2);
  m.set_core_energy(0.2);
  const double eps[3] = {-1.1, -0.2, 0.3};
  for (int p = 0; p < 3; ++p) {
    m.set_h1(p, p, eps[p]);
    for (int q = 0; q < 3; ++q) m.set_h2(p, p, q, q, 0.4 + 0.05 * (p + q));
  }
  m.set_orbsym({1, 1, 1});
  const auto built = surge::build_surge_ansatz(m, surge::build_qubit_hamiltonian(m));
  for (const auto& t : built.report.references) CHECK(t.delta_e == 0.0);
  CHECK(built.report.block_order == std::vector<std::size_t>{0, 1});
  CHECK(built.ansatz.blocks().size() == 2);
}

TEST_CASE("single prescreening", "[surge]") {
  const Loaded L("LiH_R2p500.fcidump");
  const auto built = surge::build_surge_ansatz(L.m, L.h);
  const auto& rep = built.report;
  const auto pool = surge::build_pool(L.m);
  REQUIRE(rep.blocks.size() == 8);

  for (std::size_t b = 0; b < rep.blocks.size(); ++b) {
    const auto& ref = rep.references[rep.block_order[b]];
    CAPTURE(ref.op.label());

    CHECK(surge::prescreen_singles(ref.state, ref.energy, pool.singles, L.hop,
                                   std::numeric_limits<double>::infinity())
              .accepted.empty());

    const auto s = surge::prescreen_singles(ref.state, ref.energy, pool.singles, L.hop, 1e-6);
    const std::size_t half = pool.singles.size() / 2 + pool.singles.size() % 2;
    CHECK(s.all.size() <= half);
    CHECK(rep.blocks[b].screened == s.all.size());
    CHECK(s.accepted.size() + s.rejected == s.all.size());
    // one 1-parameter circuit per candidate, regardless of block position
    CHECK(s.n_evals <= 6 * s.all.size());
    CHECK(s.n_evals >= 5 * s.all.size());

    std::set<std::string> want, got;
    for (const auto& c : s.all) {
      CAPTURE(c.op.label());
      CHECK(surge::spin_of(c.op.i) == 0);
      CHECK(c.delta_e >= -1e-10);
      // E^{alpha I} <= E^alpha <= E_HF
      CHECK(ref.energy - c.delta_e <= ref.energy + 1e-10);
      CHECK(ref.energy <= rep.e_hf + 1e-10);
      const oracle::ProjectedEnergy e(ref.state, c.op, L.hop);
      REQUIRE(e.tau3_residual < 1e-12);
      const double de = e(0.0) - oracle::scan_minimum(e).second;
      CHECK(c.delta_e == Catch::Approx(de).margin(1e-9).epsilon(0));
      if (std::abs(de - 1e-6) > 1e-9 && de > 1e-6) want.insert(c.op.label());
    }
    for (const auto& a : s.accepted) {
      if (std::abs(a.delta_e - 1e-6) > 1e-9) got.insert(a.op.label());
    }
    CHECK(got == want);

    for (std::size_t k = 1; k < s.accepted.size(); ++k) CHECK(s.accepted[k - 1].delta_e <= s.accepted[k].delta_e + 1e-12);

    // raising epsilon never adds singles
    std::set<std::string> prev;
    for (const auto& a : s.accepted) prev.insert(a.op.label());
    for (double eps : {1e-5, 1e-4, 1e-3, 1e-2}) {
      std::set<std::string> cur;
      for (const auto& a : surge::prescreen_singles(ref.state, ref.energy, pool.singles, L.hop, eps).accepted) {
        cur.insert(a.op.label());
      }
      CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
      prev = cur;
    }
  }
}

TEST_CASE("two-orbital toy builds one block", "[surge]") {
  const auto m = oracle::toy_two_orbital();
  const auto built = surge::build_surge_ansatz(m, surge::build_qubit_hamiltonian(m));
  REQUIRE(built.ansatz.blocks().size() == 1);
  const auto seq = built.ansatz.sequence();
  REQUIRE(!seq.empty());
  CHECK(seq[0].op == ExcitationOp::paired(0, 1));
  for (std::size_t k = 1; k < seq.size(); ++k) CHECK(seq[k].op.kind == surge::OpKind::single);
  // Each accepted single is followed by its spin complement with its own slot.
  CHECK((seq.size() - 1) % 2 == 0);
  for (std::size_t k = 1; k + 1 < seq.size(); k += 2) {
    CHECK(seq[k + 1].op == seq[k].op.spin_complement());
    CHECK(seq[k + 1].param != seq[k].param);
  }
  CHECK_THROWS_AS(surge::build_surge_ansatz(m, surge::build_qubit_hamiltonian(m), {.epsilon = 0.0}),
                  surge::ConfigError);
}

TEST_CASE("intra-block order switch and shared complements", "[surge]") {
  const Loaded L("LiH_R3p000.fcidump");
  const auto asc = surge::build_surge_ansatz(L.m, L.h);
  const auto desc = surge::build_surge_ansatz(L.m, L.h, {.descending_singles = true});
  const auto shared = surge::build_surge_ansatz(L.m, L.h, {.shared_complements = true});
  REQUIRE(asc.ansatz.blocks().size() == desc.ansatz.blocks().size());
  CHECK(asc.ansatz.n_ops() == desc.ansatz.n_ops());
  CHECK(asc.ansatz.n_ops() == shared.ansatz.n_ops());
  CHECK(shared.ansatz.n_params() == asc.ansatz.n_params() - static_cast<int>((asc.ansatz.n_ops() - 8) / 2));
  for (const auto& b : desc.report.blocks) {
    for (std::size_t k = 1; k < b.accepted.size(); ++k) CHECK(b.accepted[k - 1].delta_e >= b.accepted[k].delta_e - 1e-12);
  }
}

TEST_CASE("construction is deterministic across thread counts", "[surge]") {
  const Loaded L("BH_R2p000.fcidump");
  const auto a = surge::build_surge_ansatz(L.m, L.h, {.jobs = 1});
  const auto b = surge::build_surge_ansatz(L.m, L.h, {.jobs = 4});
  const auto c = surge::build_surge_ansatz(L.m, L.h, {.jobs = 1});
  CHECK(surge::to_json(a.ansatz).dump() == surge::to_json(b.ansatz).dump());
  CHECK(surge::to_json(a.ansatz).dump() == surge::to_json(c.ansatz).dump());
  CHECK(surge::to_json(a.report).dump() == surge::to_json(b.report).dump());
  CHECK(surge::deviations_csv(a.report) == surge::deviations_csv(b.report));
  const auto rows = surge::parse_csv(surge::deviations_csv(a.report));
  CHECK(rows.front() == std::vector<std::string>{"stage", "block", "op", "delta_e", "theta", "accepted"});
}
