// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/simulator.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <random>

#include "surge/errors.hpp"
#include "surge/kernels.hpp"

namespace surge {

namespace {

constexpr cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

void check_width(const StateVector& psi, int n_qubits) {
  if (psi.n_qubits() != n_qubits) {
    throw ShapeError("state has " + std::to_string(psi.n_qubits()) + " qubits, operator " +
                     std::to_string(n_qubits));
  }
}

}  // namespace

StateVector hf_state(const MolecularProblem& problem) {
  std::uint64_t index = 0;
  for (int p : hf_occupation(problem)) index |= std::uint64_t{1} << p;
  return StateVector::basis(problem.n_qubits(), index);
}

void apply_generator(StateVector& psi, const CompiledGenerator& g, double theta) {
  kernels::active().rotate_pairs(psi.data(), g.lo.data(), g.hi.data(), g.sign.data(), g.size(),
                                 std::cos(theta), std::sin(theta));
}

cplx generator_inner(const StateVector& bra, const StateVector& ket, const CompiledGenerator& g) {
  return kernels::active().tau_inner(bra.data(), ket.data(), g.lo.data(), g.hi.data(),
                                     g.sign.data(), g.size());
}

void apply_excitation_inplace(StateVector& psi, const ExcitationOp& op, double theta) {
  apply_generator(psi, compile_generator(op, psi.n_qubits()), theta);
}

StateVector apply_excitation(const StateVector& psi, const ExcitationOp& op, double theta) {
  StateVector out = psi;
  apply_excitation_inplace(out, op, theta);
  return out;
}

HamiltonianOperator::HamiltonianOperator(const QubitHamiltonian& h) : n_qubits_(h.n_qubits()) {
  if (n_qubits_ > 30) throw ResourceError("Hamiltonian too wide for the statevector engine");
  const std::size_t dim = std::size_t{1} << n_qubits_;
  std::map<std::uint64_t, std::size_t> slot;
  for (const auto& t : h.terms()) {
    auto [it, fresh] = slot.try_emplace(t.x, masks_.size());
    if (fresh) {
      masks_.push_back(t.x);
      diag_.emplace_back(dim, cplx{0.0, 0.0});
    }
    auto& e = diag_[it->second];
    const cplx base = t.coeff * kPhase[std::popcount(t.x & t.z) % 4];
    // Row j receives psi[j ^ x] with the sign of the source basis state.
    for (std::size_t j = 0; j < dim; ++j) {
      const bool odd = std::popcount(t.z & (j ^ t.x)) & 1;
      e[j] += odd ? -base : base;
    }
  }
}

void HamiltonianOperator::apply(const StateVector& in, StateVector& out) const {
  check_width(in, n_qubits_);
  if (out.n_qubits() != n_qubits_) out = StateVector(n_qubits_);
  std::fill(out.amplitudes().begin(), out.amplitudes().end(), cplx{0.0, 0.0});
  const auto& k = kernels::active();
  for (std::size_t g = 0; g < masks_.size(); ++g) {
    k.xgroup_apply(out.data(), in.data(), diag_[g].data(), masks_[g], in.dim());
  }
}

double HamiltonianOperator::expectation(const StateVector& psi) const {
  check_width(psi, n_qubits_);
  const auto& k = kernels::active();
  cplx acc{0.0, 0.0};
  for (std::size_t g = 0; g < masks_.size(); ++g) {
    acc += k.xgroup_inner(psi.data(), psi.data(), diag_[g].data(), masks_[g], psi.dim());
  }
  return acc.real();
}

double pauli_expectation(const StateVector& psi, const PauliTerm& term) {
  check_width(psi, term.n_qubits);
  const cplx phase = kPhase[std::popcount(term.x & term.z) % 4];
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < psi.dim(); ++j) {
    const cplx v = std::conj(psi[j ^ term.x]) * psi[j];
    acc += (std::popcount(term.z & j) & 1) ? -v : v;
  }
  return (phase * acc).real();
}

double expectation(const StateVector& psi, const QubitHamiltonian& h) {
  check_width(psi, h.n_qubits());
  double e = 0.0;
  for (const auto& t : h.terms()) e += t.coeff.real() * pauli_expectation(psi, t);
  return e;
}

double expectation(const StateVector& psi, const HamiltonianOperator& h) { return h.expectation(psi); }

AnsatzEvaluator::AnsatzEvaluator(StateVector reference, const OrderedAnsatz& ansatz,
                                 std::shared_ptr<const HamiltonianOperator> h)
    : reference_(std::move(reference)), n_params_(ansatz.n_params()), h_(std::move(h)) {
  check_width(reference_, ansatz.n_qubits());
  check_width(reference_, h_->n_qubits());
  for (const auto& e : ansatz.sequence()) {
    params_.push_back(e.param);
    gens_.push_back(compile_generator(e.op, reference_.n_qubits()));
  }
}

void AnsatzEvaluator::check(std::span<const double> theta) const {
  if (static_cast<int>(theta.size()) != n_params_) {
    throw ShapeError("expected " + std::to_string(n_params_) + " parameters, got " +
                     std::to_string(theta.size()));
  }
}

StateVector AnsatzEvaluator::state(std::span<const double> theta) const {
  check(theta);
  StateVector psi = reference_;
  for (std::size_t k = 0; k < gens_.size(); ++k) apply_generator(psi, gens_[k], theta[params_[k]]);
  return psi;
}

double AnsatzEvaluator::energy(std::span<const double> theta) {
  ++n_energy_;
  return h_->expectation(state(theta));
}

double AnsatzEvaluator::energy_and_gradient(std::span<const double> theta, std::span<double> grad) {
  check(theta);
  if (static_cast<int>(grad.size()) != n_params_) throw ShapeError("gradient buffer length");
  ++n_energy_;
  ++n_gradient_;
  StateVector psi = state(theta);
  StateVector lambda(psi.n_qubits());
  h_->apply(psi, lambda);
  const double e = psi.inner(lambda).real();
  std::fill(grad.begin(), grad.end(), 0.0);
  for (std::size_t k = gens_.size(); k-- > 0;) {
    grad[params_[k]] += 2.0 * generator_inner(lambda, psi, gens_[k]).real();
    apply_generator(psi, gens_[k], -theta[params_[k]]);
    apply_generator(lambda, gens_[k], -theta[params_[k]]);
  }
  return e;
}

std::vector<double> gradient(const StateVector& state0, const OrderedAnsatz& ansatz,
                             std::span<const double> theta, const QubitHamiltonian& h) {
  AnsatzEvaluator ev(state0, ansatz, std::make_shared<HamiltonianOperator>(h));
  std::vector<double> g(static_cast<std::size_t>(ansatz.n_params()));
  ev.energy_and_gradient(theta, g);
  return g;
}

void NoiseSpec::validate() const {
  if (!(p_cnot >= 0.0 && p_cnot < 1.0)) throw ConfigError("p_cnot must lie in [0, 1)");
  if (shots && *shots < 1) throw ConfigError("shots must be >= 1");
}

namespace {

double depolarized_scale(long cnot_count, double p) {
  return std::pow(1.0 - p, static_cast<double>(cnot_count));
}

}  // namespace

double noisy_expectation(const StateVector& psi, const QubitHamiltonian& h, long cnot_count,
                         const NoiseSpec& noise) {
  noise.validate();
  check_width(psi, h.n_qubits());
  const double scale = depolarized_scale(cnot_count, noise.p_cnot);
  std::mt19937_64 rng(noise.seed);
  double e = 0.0;
  for (const auto& t : h.terms()) {
    const double c = t.coeff.real();
    if (t.is_identity()) {
      e += c;
      continue;
    }
    double m = scale * pauli_expectation(psi, t);
    if (noise.shots) {
      const double p_plus = std::clamp(0.5 * (1.0 + m), 0.0, 1.0);
      std::binomial_distribution<std::int64_t> draw(*noise.shots, p_plus);
      const auto k = draw(rng);
      m = 2.0 * static_cast<double>(k) / static_cast<double>(*noise.shots) - 1.0;
    }
    e += c * m;
  }
  return e;
}

double noisy_variance(const StateVector& psi, const QubitHamiltonian& h, long cnot_count,
                      const NoiseSpec& noise) {
  noise.validate();
  if (!noise.shots) return 0.0;
  const double scale = depolarized_scale(cnot_count, noise.p_cnot);
  double v = 0.0;
  for (const auto& t : h.terms()) {
    if (t.is_identity()) continue;
    const double m = scale * pauli_expectation(psi, t);
    const double c = t.coeff.real();
    v += c * c * (1.0 - m * m);
  }
  return v / static_cast<double>(*noise.shots);
}

}  // namespace surge
