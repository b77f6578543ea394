// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/vqe.hpp"

#include <cmath>
#include <sstream>

#include "surge/errors.hpp"
#include "surge/io.hpp"

namespace surge {

VqeResult optimize(const OrderedAnsatz& ansatz, std::shared_ptr<const HamiltonianOperator> h,
                   const StateVector& reference, std::vector<double> initial,
                   const VqeOptions& options) {
  if (initial.empty()) initial.assign(static_cast<std::size_t>(ansatz.n_params()), 0.0);
  if (static_cast<int>(initial.size()) != ansatz.n_params()) {
    throw ShapeError("initial point has " + std::to_string(initial.size()) + " entries, ansatz " +
                     std::to_string(ansatz.n_params()));
  }
  AnsatzEvaluator ev(reference, ansatz, std::move(h));
  const Objective f = [&](std::span<const double> x, std::span<double> g) {
    return ev.energy_and_gradient(x, g);
  };
  VqeResult r;
  r.initial_energy = ev.energy(initial);
  const LbfgsResult opt = lbfgs_minimize(f, std::move(initial), options.lbfgs);
  r.energy = opt.f;
  r.theta = opt.x;
  r.iterations = opt.iterations;
  r.converged = opt.converged;
  r.grad_inf = opt.grad_inf;
  r.stop_reason = opt.stop_reason;
  r.energy_evals = ev.energy_evals();
  r.gradient_evals = ev.gradient_evals();
  return r;
}

LandscapeTrace growth_landscape(const OrderedAnsatz& ansatz,
                                std::shared_ptr<const HamiltonianOperator> h,
                                const StateVector& reference, const GateCostModel& model,
                                std::optional<double> e_fci, const VqeOptions& options) {
  LandscapeTrace trace;
  trace.e_fci = e_fci;
  LandscapeStep base;
  base.energy = h->expectation(reference);
  base.warm_start_energy = base.energy;
  trace.steps.push_back(base);

  const auto seq = ansatz.sequence();
  std::vector<double> theta;
  long cnots = 0;
  for (std::size_t k = 1; k <= seq.size(); ++k) {
    const OrderedAnsatz sub = ansatz.prefix(k);
    theta.resize(static_cast<std::size_t>(sub.n_params()), 0.0);
    cnots += cnot_cost(seq[k - 1].op, model);
    LandscapeStep step;
    step.k = k;
    step.op = seq[k - 1].op.label();
    step.cumulative_cnot = cnots;
    {
      AnsatzEvaluator ev(reference, sub, h);
      step.warm_start_energy = ev.energy(theta);
    }
    const VqeResult r = optimize(sub, h, reference, theta, options);
    theta = r.theta;
    step.energy = r.energy;
    step.converged = r.converged;
    step.theta = theta;
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

std::string landscape_csv(const LandscapeTrace& trace) {
  std::ostringstream out;
  out << "k,op,cumulative_cnot,energy,error_mEh\n";
  for (const auto& s : trace.steps) {
    std::string err;
    if (trace.e_fci) err = format_energy((s.energy - *trace.e_fci) * 1e3);
    out << csv_row({std::to_string(s.k), s.op.empty() ? "HF" : s.op, std::to_string(s.cumulative_cnot),
                    format_energy(s.energy), err});
  }
  return out.str();
}

}  // namespace surge
