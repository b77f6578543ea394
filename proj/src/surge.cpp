// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/surge.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "surge/errors.hpp"
#include "surge/io.hpp"
#include "surge/parallel.hpp"
#include "surge/reference.hpp"

namespace surge {

namespace {

constexpr double kPi = std::numbers::pi;

struct TrigModel {
  double a0, a1, b1, a2, b2;
  double value(double t) const {
    return a0 + a1 * std::cos(t) + b1 * std::sin(t) + a2 * std::cos(2 * t) + b2 * std::sin(2 * t);
  }
  double d1(double t) const {
    return -a1 * std::sin(t) + b1 * std::cos(t) - 2 * a2 * std::sin(2 * t) + 2 * b2 * std::cos(2 * t);
  }
  double d2(double t) const {
    return -a1 * std::cos(t) - b1 * std::sin(t) - 4 * a2 * std::cos(2 * t) - 4 * b2 * std::sin(2 * t);
  }
};

double wrap(double t) {
  t = std::fmod(t + kPi, 2 * kPi);
  if (t < 0) t += 2 * kPi;
  return t - kPi;
}

// Real parts of the roots of c[0] + c[1] t + ... + c[4] t^4.
std::vector<double> polynomial_roots(std::array<double, 5> c) {
  const double scale = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2]), std::abs(c[3]),
                                 std::abs(c[4])});
  std::vector<double> out;
  if (scale == 0.0) return out;
  int deg = 4;
  while (deg > 0 && std::abs(c[deg]) <= 1e-14 * scale) --deg;
  if (deg == 0) return out;
  Eigen::MatrixXd comp = Eigen::MatrixXd::Zero(deg, deg);
  for (int k = 0; k < deg; ++k) comp(0, k) = -c[deg - 1 - k] / c[deg];
  for (int k = 1; k < deg; ++k) comp(k, k - 1) = 1.0;
  const Eigen::EigenSolver<Eigen::MatrixXd> es(comp, false);
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) out.push_back(es.eigenvalues()(k).real());
  return out;
}

double evaluate_at(const StateVector& ref, const CompiledGenerator& g, const HamiltonianOperator& h,
                   double theta) {
  StateVector psi = ref;
  apply_generator(psi, g, theta);
  return h.expectation(psi);
}

}  // namespace

std::array<double, 5> trig_coefficients(const std::array<double, 5>& e) {
  double a0 = 0, a1 = 0, b1 = 0, a2 = 0, b2 = 0;
  for (int k = 0; k < 5; ++k) {
    const double t = 2 * kPi * k / 5;
    a0 += e[k];
    a1 += e[k] * std::cos(t);
    b1 += e[k] * std::sin(t);
    a2 += e[k] * std::cos(2 * t);
    b2 += e[k] * std::sin(2 * t);
  }
  return {a0 / 5, 0.4 * a1, 0.4 * b1, 0.4 * a2, 0.4 * b2};
}

UniparamResult uniparam_minimize(const StateVector& ref, const CompiledGenerator& g,
                                 const HamiltonianOperator& h) {
  std::array<double, 5> samples{};
  for (int k = 0; k < 5; ++k) samples[k] = evaluate_at(ref, g, h, 2 * kPi * k / 5);
  const auto c = trig_coefficients(samples);
  const TrigModel m{c[0], c[1], c[2], c[3], c[4]};

  // E'(theta) (1 + t^2)^2 as a quartic in t = tan(theta / 2).
  const std::array<double, 5> quartic = {m.b1 + 2 * m.b2, -2 * m.a1 - 8 * m.a2, -12 * m.b2,
                                         -2 * m.a1 + 8 * m.a2, -m.b1 + 2 * m.b2};
  std::vector<double> cand = {0.0, -kPi};
  for (double t : polynomial_roots(quartic)) cand.push_back(2 * std::atan(t));
  for (int k = 1; k < 5; ++k) cand.push_back(wrap(2 * kPi * k / 5));

  double best = 0.0, best_val = m.value(0.0);
  for (double t : cand) {
    for (int it = 0; it < 8; ++it) {
      const double d2 = m.d2(t);
      if (d2 <= 0) break;
      const double step = m.d1(t) / d2;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    t = wrap(t);
    const double v = m.value(t);
    if (v < best_val) {
      best_val = v;
      best = t;
    }
  }

  UniparamResult r;
  r.energy_at_zero = samples[0];
  r.n_evals = 5;
  if (best == 0.0) {
    r.theta = 0.0;
    r.energy = samples[0];
    return r;
  }
  const double e = evaluate_at(ref, g, h, best);
  ++r.n_evals;
  if (e < samples[0]) {
    r.theta = best;
    r.energy = e;
  } else {
    r.theta = 0.0;
    r.energy = samples[0];
  }
  return r;
}

UniparamResult uniparam_minimize(const StateVector& ref, const ExcitationOp& op,
                                 const HamiltonianOperator& h) {
  return uniparam_minimize(ref, compile_generator(op, ref.n_qubits()), h);
}

std::vector<TailoredReference> tailor_references(const StateVector& hf, double e_hf,
                                                 const std::vector<ExcitationOp>& paired,
                                                 const HamiltonianOperator& h, int jobs) {
  std::vector<TailoredReference> out(paired.size());
  parallel_for(paired.size(), jobs, [&](std::size_t k) {
    const CompiledGenerator g = compile_generator(paired[k], hf.n_qubits());
    const UniparamResult u = uniparam_minimize(hf, g, h);
    TailoredReference& t = out[k];
    t.op = paired[k];
    t.theta = u.theta;
    t.energy = u.energy;
    t.delta_e = e_hf - u.energy;
    t.state = hf;
    apply_generator(t.state, g, u.theta);
    t.n_evals = u.n_evals;
  });
  return out;
}

std::vector<std::size_t> order_blocks(const std::vector<ExcitationOp>& ops,
                                      const std::vector<double>& delta_e) {
  if (ops.size() != delta_e.size()) throw ShapeError("one deviation per operator required");
  std::vector<std::size_t> idx(ops.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<long long> key(ops.size());
  for (std::size_t k = 0; k < ops.size(); ++k) key[k] = std::llround(delta_e[k] * 1e12);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    if (key[x] != key[y]) return key[x] > key[y];
    return ops[x] < ops[y];
  });
  return idx;
}

ScreenResult prescreen_singles(const StateVector& block_ref, double block_energy,
                               const std::vector<ExcitationOp>& singles_pool,
                               const HamiltonianOperator& h, double epsilon, int jobs) {
  std::vector<ExcitationOp> cand;
  for (const auto& s : singles_pool) {
    if (s.kind == OpKind::single && spin_of(s.i) == 0) cand.push_back(s);
  }
  ScreenResult r;
  r.all.resize(cand.size());
  std::vector<std::size_t> evals(cand.size());
  parallel_for(cand.size(), jobs, [&](std::size_t k) {
    const UniparamResult u = uniparam_minimize(block_ref, cand[k], h);
    // Energies are relative to the tailored reference, whose own energy is E(0).
    r.all[k] = {cand[k], block_energy - u.energy, u.theta};
    evals[k] = u.n_evals;
  });
  for (std::size_t k = 0; k < cand.size(); ++k) {
    r.n_evals += evals[k];
    if (r.all[k].delta_e > epsilon) {
      r.accepted.push_back(r.all[k]);
    } else {
      ++r.rejected;
    }
  }
  std::vector<std::size_t> idx(r.accepted.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::vector<long long> key(idx.size());
  for (std::size_t k = 0; k < idx.size(); ++k) key[k] = std::llround(r.accepted[k].delta_e * 1e12);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    if (key[x] != key[y]) return key[x] < key[y];
    return r.accepted[x].op < r.accepted[y].op;
  });
  std::vector<ScreenedSingle> sorted;
  for (std::size_t k : idx) sorted.push_back(r.accepted[k]);
  r.accepted = std::move(sorted);
  return r;
}

SurgeBuild build_surge_ansatz(const MolecularProblem& problem,
                              std::shared_ptr<const HamiltonianOperator> h,
                              const SurgeOptions& options) {
  if (!(options.epsilon > 0)) throw ConfigError("epsilon must be positive");
  const OperatorPool pool = build_pool(problem, options.flavor);
  const StateVector hf = hf_state(problem);
  const double e_hf = h->expectation(hf);

  SurgeBuild out;
  out.ansatz = OrderedAnsatz(problem.n_qubits());
  SurgeReport& rep = out.report;
  rep.epsilon = options.epsilon;
  rep.e_hf = e_hf;
  rep.references = tailor_references(hf, e_hf, pool.paired, *h, options.jobs);
  std::vector<double> de;
  for (const auto& t : rep.references) {
    de.push_back(t.delta_e);
    rep.tailoring_evals += t.n_evals;
  }
  rep.block_order = order_blocks(pool.paired, de);

  for (std::size_t b : rep.block_order) {
    const TailoredReference& ref = rep.references[b];
    ScreenResult s = prescreen_singles(ref.state, ref.energy, pool.singles, *h, options.epsilon,
                                       options.jobs);
    rep.screening_evals += s.n_evals;
    if (options.descending_singles) std::reverse(s.accepted.begin(), s.accepted.end());

    SurgeBlockReport br;
    br.paired = ref.op;
    br.screened = s.all.size();
    br.rejected = s.rejected;
    out.ansatz.begin_block();
    out.ansatz.push(ref.op);
    for (const auto& single : s.accepted) {
      const int slot = out.ansatz.push(single.op);
      const ExcitationOp mirror = single.op.spin_complement();
      if (options.shared_complements) {
        out.ansatz.push_shared(mirror, slot);
      } else {
        out.ansatz.push(mirror);
      }
      br.complements.push_back(mirror);
    }
    br.accepted = std::move(s.accepted);
    rep.blocks.push_back(std::move(br));
  }
  return out;
}

SurgeBuild build_surge_ansatz(const MolecularProblem& problem, const QubitHamiltonian& h,
                              const SurgeOptions& options) {
  return build_surge_ansatz(problem, std::make_shared<HamiltonianOperator>(h), options);
}

nlohmann::json to_json(const SurgeReport& r) {
  nlohmann::json refs = nlohmann::json::array();
  for (const auto& t : r.references) {
    refs.push_back({{"op", to_json(t.op)},
                    {"theta", t.theta},
                    {"energy", t.energy},
                    {"delta_e", t.delta_e}});
  }
  nlohmann::json blocks = nlohmann::json::array();
  nlohmann::json mirrored = nlohmann::json::array();
  for (const auto& b : r.blocks) {
    nlohmann::json acc = nlohmann::json::array();
    for (const auto& s : b.accepted) {
      acc.push_back({{"op", to_json(s.op)}, {"delta_e", s.delta_e}, {"theta", s.theta}});
    }
    nlohmann::json comp = nlohmann::json::array();
    for (const auto& c : b.complements) {
      comp.push_back(to_json(c));
      mirrored.push_back({{"block", b.paired.label()}, {"op", c.label()}});
    }
    blocks.push_back({{"paired", to_json(b.paired)},
                      {"accepted", std::move(acc)},
                      {"complements", std::move(comp)},
                      {"screened", b.screened},
                      {"rejected", b.rejected}});
  }
  std::vector<std::string> order;
  for (std::size_t k : r.block_order) order.push_back(r.references[k].op.label());
  return {{"epsilon", r.epsilon},
          {"e_hf", r.e_hf},
          {"delta_e_paired", std::move(refs)},
          {"block_order", order},
          {"blocks", std::move(blocks)},
          {"spin_mirroring", std::move(mirrored)},
          {"evaluations", {{"tailoring", r.tailoring_evals}, {"screening", r.screening_evals}}}};
}

std::string deviations_csv(const SurgeReport& r) {
  std::ostringstream out;
  out << "stage,block,op,delta_e,theta,accepted\n";
  for (const auto& t : r.references) {
    out << "paired,," << csv_field(t.op.label()) << ',' << format_energy(t.delta_e) << ','
        << format_energy(t.theta) << ",1\n";
  }
  for (std::size_t b = 0; b < r.blocks.size(); ++b) {
    for (const auto& s : r.blocks[b].accepted) {
      out << "single," << b + 1 << ',' << csv_field(s.op.label()) << ',' << format_energy(s.delta_e) << ','
          << format_energy(s.theta) << ",1\n";
    }
  }
  return out.str();
}

}  // namespace surge
