// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/hamiltonian.hpp"

#include <array>
#include <set>
#include <tuple>
#include <unordered_map>

#include "surge/errors.hpp"

namespace surge {

QubitOperator jw_ladder(int p, Ladder kind, int n_qubits) {
  if (p < 0 || p >= n_qubits) {
    throw IndexError("spin-orbital " + std::to_string(p) + " outside [0, " +
                     std::to_string(n_qubits) + ")");
  }
  const std::uint64_t bit = std::uint64_t{1} << p;
  const std::uint64_t chain = bit - 1;
  QubitOperator op(n_qubits);
  const double sgn = kind == Ladder::creation ? -1.0 : 1.0;
  // The chain Z's commute past X_p/Y_p, so the masks simply combine.
  op.add(bit, chain, cplx{0.5, 0.0});          // Z..Z X_p
  op.add(bit, chain | bit, cplx{0.0, 0.5 * sgn});  // Z..Z Y_p
  return op;
}

QubitOperator fermion_product(std::span<const LadderOp> ops, int n_qubits) {
  QubitOperator acc = QubitOperator::identity(n_qubits);
  for (const auto& l : ops) acc = acc * jw_ladder(l.index, l.kind, n_qubits);
  return acc;
}

namespace {

struct MaskHash {
  std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.first * 0x9E3779B97F4A7C15ULL ^ k.second);
  }
};

using Accumulator = std::unordered_map<std::pair<std::uint64_t, std::uint64_t>, cplx, MaskHash>;

void accumulate(Accumulator& acc, const QubitOperator& op, double scale) {
  for (const auto& t : op.terms()) acc[{t.x, t.z}] += scale * t.coeff;
}

}  // namespace

QubitHamiltonian build_qubit_hamiltonian(const MolecularProblem& problem) {
  const int n = problem.n_spatial();
  const int nq = problem.n_qubits();
  if (nq > 64) throw ResourceError("more than 64 spin-orbitals");
  Accumulator acc;
  acc[{0, 0}] += problem.core_energy();

  for (int p = 0; p < n; ++p) {
    for (int q = 0; q < n; ++q) {
      const double v = problem.h1(p, q);
      if (v == 0.0) continue;
      for (int s = 0; s < 2; ++s) {
        const std::array<LadderOp, 2> ops{{{spin_orbital(p, s), Ladder::creation},
                                           {spin_orbital(q, s), Ladder::annihilation}}};
        accumulate(acc, fermion_product(ops, nq), v);
      }
    }
  }

  for (const auto& e : problem.unique_two_electron()) {
    const std::set<std::tuple<int, int, int, int>> perms{
        {e.p, e.q, e.r, e.s}, {e.q, e.p, e.r, e.s}, {e.p, e.q, e.s, e.r}, {e.q, e.p, e.s, e.r},
        {e.r, e.s, e.p, e.q}, {e.s, e.r, e.p, e.q}, {e.r, e.s, e.q, e.p}, {e.s, e.r, e.q, e.p}};
    for (const auto& [p, q, r, s] : perms) {
      for (int sa = 0; sa < 2; ++sa) {
        for (int sb = 0; sb < 2; ++sb) {
          const int P = spin_orbital(p, sa), Q = spin_orbital(q, sa);
          const int R = spin_orbital(r, sb), S = spin_orbital(s, sb);
          if (P == R || Q == S) continue;  // a+_P a+_P = 0
          const std::array<LadderOp, 4> ops{{{P, Ladder::creation},
                                             {R, Ladder::creation},
                                             {S, Ladder::annihilation},
                                             {Q, Ladder::annihilation}}};
          accumulate(acc, fermion_product(ops, nq), 0.5 * e.value);
        }
      }
    }
  }

  QubitHamiltonian h(nq);
  for (const auto& [k, c] : acc) h.add(k.first, k.second, c);
  h.simplify();
  // Real integrals give real coefficients; strip rounding residue.
  if (h.max_imag() > 1e-10) throw Error("Hamiltonian has complex Pauli coefficients");
  QubitHamiltonian out(nq);
  for (const auto& t : h.terms()) out.add(t.x, t.z, cplx{t.coeff.real(), 0.0});
  return out.simplify();
}

QubitOperator number_operator(int n_qubits) {
  QubitOperator op(n_qubits);
  op.add(0, 0, 0.5 * n_qubits);
  for (int p = 0; p < n_qubits; ++p) op.add(0, std::uint64_t{1} << p, -0.5);
  return op.simplify();
}

QubitOperator sz_operator(int n_qubits) {
  QubitOperator op(n_qubits);
  for (int p = 0; p < n_qubits; ++p) {
    const double s = (p % 2 == 0) ? 0.5 : -0.5;
    op.add(0, 0, 0.5 * s);
    op.add(0, std::uint64_t{1} << p, -0.5 * s);
  }
  return op.simplify(0.0);
}

Eigen::MatrixXcd to_dense(const QubitOperator& op) {
  const int n = op.n_qubits();
  if (n > 14) throw ResourceError("dense matrix requested for " + std::to_string(n) + " qubits");
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  constexpr cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (const auto& t : op.terms()) {
    const cplx base = t.coeff * kPhase[std::popcount(t.x & t.z) % 4];
    for (std::size_t j = 0; j < dim; ++j) {
      const double sgn = (std::popcount(t.z & j) & 1) ? -1.0 : 1.0;
      m(static_cast<Eigen::Index>(j ^ t.x), static_cast<Eigen::Index>(j)) += sgn * base;
    }
  }
  return m;
}

nlohmann::json to_json(const QubitOperator& op) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : op.terms()) {
    nlohmann::json e{{"pauli", t.label()}, {"coeff", t.coeff.real()}};
    if (t.coeff.imag() != 0.0) e["coeff_imag"] = t.coeff.imag();
    terms.push_back(std::move(e));
  }
  return {{"n_qubits", op.n_qubits()}, {"terms", std::move(terms)}};
}

QubitOperator qubit_operator_from_json(const nlohmann::json& j) {
  QubitOperator op(j.at("n_qubits").get<int>());
  for (const auto& e : j.at("terms")) {
    const double im = e.contains("coeff_imag") ? e["coeff_imag"].get<double>() : 0.0;
    op.add(PauliTerm::from_label(e.at("pauli").get<std::string>(),
                                 cplx{e.at("coeff").get<double>(), im}));
  }
  return op;
}

}  // namespace surge
