// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/pipeline.hpp"

#include <cstdlib>

#include "surge/errors.hpp"
#include "surge/exchange_circuits.hpp"
#include "surge/io.hpp"

namespace surge {

ProblemContext ProblemContext::from_problem(MolecularProblem p) {
  p.validate();
  ProblemContext c;
  c.problem = std::move(p);
  c.h = build_qubit_hamiltonian(c.problem);
  c.hop = std::make_shared<HamiltonianOperator>(c.h);
  c.e_hf = hf_energy(c.problem, c.h);
  c.fci = fci_ground_energy(c.h, c.problem.n_electrons(), c.problem.ms2());
  return c;
}

ProblemContext ProblemContext::load(const std::string& path) {
  return from_problem(load_fcidump(path));
}

bool is_known_method(const std::string& m) {
  return m == "surge" || m == "uccsd" || m == "kupccgsd" || m == "adapt-sd" || m == "adapt-gspd" ||
         m == "adapt-gsd";
}

GateCostModel cost_model_for(Flavor flavor, SpinLayout layout, int n_spatial) {
  GateCostModel m = flavor == Flavor::qubit ? circuits::synthesized_cost_model()
                                            : GateCostModel::for_flavor(Flavor::fermionic);
  m.layout = layout;
  m.n_spatial = n_spatial;
  return m;
}

MethodResult run_method(const ProblemContext& ctx, const MethodSpec& spec) {
  if (!is_known_method(spec.method)) throw ConfigError("unknown method '" + spec.method + "'");
  MethodResult r;
  r.method = spec.method;
  r.model = cost_model_for(spec.flavor, spec.layout, ctx.problem.n_spatial());
  const StateVector ref = hf_state(ctx.problem);

  if (spec.method.rfind("adapt-", 0) == 0) {
    AdaptConfig cfg;
    cfg.pool = parse_adapt_pool(spec.method.substr(6));
    cfg.flavor = spec.flavor;
    cfg.grad_threshold = spec.adapt_grad_threshold;
    cfg.eig_threshold = spec.adapt_eig_threshold;
    cfg.max_ops = spec.adapt_max_ops;
    cfg.stop_on_cycle = spec.adapt_stop_on_cycle;
    cfg.jobs = spec.jobs;
    cfg.vqe = spec.vqe;
    AdaptResult a = adapt_vqe(ctx.problem, ctx.hop, cfg, r.model);
    r.ansatz = std::move(a.ansatz);
    r.vqe = std::move(a.vqe);
    nlohmann::json trace = nlohmann::json::array();
    r.adapt_trace.e_fci = ctx.fci.energy;
    LandscapeStep base;
    base.energy = base.warm_start_energy = ctx.e_hf;
    r.adapt_trace.steps.push_back(base);
    for (const auto& it : a.trace) {
      trace.push_back({{"iteration", it.iteration},
                       {"op", it.op},
                       {"max_gradient", it.max_gradient},
                       {"energy", round12(it.energy)},
                       {"cumulative_cnot", it.cumulative_cnot},
                       {"n_params", it.n_params},
                       {"gradient_measurements", it.gradient_measurements},
                       {"energy_measurements", it.energy_measurements}});
      LandscapeStep s;
      s.k = static_cast<std::size_t>(it.iteration);
      s.op = it.op;
      s.cumulative_cnot = it.cumulative_cnot;
      s.energy = it.energy;
      r.adapt_trace.steps.push_back(s);
      r.screening_evals = it.gradient_measurements;
    }
    r.report = {{"pool", to_string(cfg.pool)},
                {"stop_reason", a.stop_reason},
                {"stalled", a.stalled},
                {"trace", std::move(trace)}};
  } else {
    if (spec.method == "surge") {
      SurgeOptions so = spec.surge;
      so.flavor = spec.flavor;
      so.jobs = spec.jobs;
      SurgeBuild b = build_surge_ansatz(ctx.problem, ctx.hop, so);
      r.ansatz = std::move(b.ansatz);
      r.screening_evals = b.report.tailoring_evals + b.report.screening_evals;
      r.report = to_json(b.report);
      r.deviations_csv = surge::deviations_csv(b.report);
    } else if (spec.method == "uccsd") {
      r.ansatz = with_flavor(uccsd_ansatz(ctx.problem, spec.uccsd_order), spec.flavor);
      r.report = {{"order", spec.uccsd_order == UccsdOrder::singles_first ? "singles_first"
                                                                          : "doubles_first"}};
    } else {
      r.ansatz = with_flavor(kupccgsd_ansatz(ctx.problem, spec.k), spec.flavor);
      r.report = {{"k", spec.k}};
    }
    r.vqe = optimize(r.ansatz, ctx.hop, ref, {}, spec.vqe);
  }
  r.cnot_total = ansatz_cnot_total(r.ansatz, r.model);
  r.report["method"] = spec.method;
  r.report["flavor"] = to_string(spec.flavor);
  r.report["stop_reason_vqe"] = r.vqe.stop_reason;
  r.report["converged"] = r.vqe.converged;
  return r;
}

double round12(double v) { return std::strtod(format_energy(v).c_str(), nullptr); }

nlohmann::json energy_json(const ProblemContext& ctx, const MethodResult& r) {
  const double err = r.vqe.energy - ctx.fci.energy;
  return {{"method", r.method},
          {"E", round12(r.vqe.energy)},
          {"E_FCI", round12(ctx.fci.energy)},
          {"E_HF", round12(ctx.e_hf)},
          {"error_mEh", round12(err * 1e3)},
          {"n_params", r.ansatz.n_params()},
          {"cnot_total", r.cnot_total},
          {"eval_counts",
           {{"energy", r.vqe.energy_evals},
            {"gradient", r.vqe.gradient_evals},
            {"screening", r.screening_evals},
            {"iterations", r.vqe.iterations}}}};
}

}  // namespace surge
