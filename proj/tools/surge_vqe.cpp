// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

// surge-vqe: build Hamiltonians, run ansatz pipelines, scan PES grids, and
// write the CSV/JSON artifacts. Every option can also be given in a
// key = value file passed with --config; command-line flags take precedence.

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "surge/errors.hpp"
#include "surge/io.hpp"
#include "surge/parallel.hpp"
#include "surge/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Options {
  std::vector<std::string> inputs;
  std::string manifest;
  std::string method = "surge";
  std::string methods = "surge,kupccgsd,uccsd";
  std::string flavor = "fermionic";
  std::string layout = "interleaved";
  double epsilon = 1e-6;
  std::uint64_t seed = 0;
  std::string out = ".";
  int jobs = 1;
  bool verify = false;
  int k = 1;
  std::string uccsd_order = "singles_first";
  double adapt_grad = 1e-8;
  double adapt_eig = 1e-8;
  int adapt_max_ops = 500;
  bool adapt_stop_on_cycle = false;
  bool descending_singles = false;
  bool shared_complements = false;
  int max_iter = 10000;
  double grad_tol = 1e-8;
  double p_cnot = 1e-3;
  std::string shots = "10000";
  int runs = 40;
};

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t task) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (task + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

surge::MethodSpec make_spec(const Options& o, const std::string& method, int jobs) {
  surge::MethodSpec s;
  s.method = method;
  s.flavor = surge::parse_flavor(o.flavor);
  s.layout = surge::parse_layout(o.layout);
  s.surge.epsilon = o.epsilon;
  s.surge.descending_singles = o.descending_singles;
  s.surge.shared_complements = o.shared_complements;
  s.k = o.k;
  if (o.uccsd_order == "singles_first") {
    s.uccsd_order = surge::UccsdOrder::singles_first;
  } else if (o.uccsd_order == "doubles_first") {
    s.uccsd_order = surge::UccsdOrder::doubles_first;
  } else {
    throw surge::ConfigError("unknown uccsd-order '" + o.uccsd_order + "'");
  }
  s.adapt_grad_threshold = o.adapt_grad;
  s.adapt_eig_threshold = o.adapt_eig;
  s.adapt_max_ops = o.adapt_max_ops;
  s.adapt_stop_on_cycle = o.adapt_stop_on_cycle;
  s.vqe.lbfgs.max_iterations = o.max_iter;
  s.vqe.lbfgs.grad_tol = o.grad_tol;
  s.jobs = jobs;
  return s;
}

std::string single_input(const Options& o) {
  if (o.inputs.size() != 1) throw surge::ConfigError("exactly one --input FCIDUMP is required");
  if (!fs::exists(o.inputs[0])) throw surge::ConfigError("input not found: " + o.inputs[0]);
  return o.inputs[0];
}

using Files = std::vector<std::string>;

Files cmd_run(const Options& o, const fs::path& out) {
  const auto ctx = surge::ProblemContext::load(single_input(o));
  const auto r = surge::run_method(ctx, make_spec(o, o.method, o.jobs));
  surge::write_json_file((out / "energy.json").string(), surge::energy_json(ctx, r));
  surge::write_json_file((out / "ansatz.json").string(), surge::to_json(r.ansatz, r.vqe.theta));
  surge::write_json_file((out / "report.json").string(), r.report);
  if (!r.deviations_csv.empty()) {
    surge::write_text_file((out / "deviations.csv").string(), r.deviations_csv);
    return {"energy.json", "ansatz.json", "report.json", "deviations.csv"};
  }
  return {"energy.json", "ansatz.json", "report.json"};
}

struct ScanPoint {
  std::string label;
  std::string path;
};

std::vector<ScanPoint> scan_points(const Options& o) {
  std::vector<ScanPoint> pts;
  if (!o.manifest.empty()) {
    const json m = json::parse(surge::read_text_file(o.manifest));
    const fs::path base = fs::path(o.manifest).parent_path();
    for (const auto& p : m.at("points")) {
      std::string label = p.contains("R") ? surge::format_energy(p["R"].get<double>())
                                          : p.value("label", std::string());
      pts.push_back({label, (base / p.at("fcidump").get<std::string>()).string()});
    }
  }
  for (const auto& in : o.inputs) pts.push_back({fs::path(in).stem().string(), in});
  if (pts.empty()) throw surge::ConfigError("scan needs --manifest or at least one --input");
  return pts;
}

Files cmd_scan(const Options& o, const fs::path& out) {
  const auto pts = scan_points(o);
  const auto methods = split_list(o.methods.empty() ? o.method : o.methods);
  std::vector<std::string> rows(pts.size());
  surge::parallel_for(pts.size(), o.jobs, [&](std::size_t k) {
    std::string text;
    try {
      const auto ctx = surge::ProblemContext::load(pts[k].path);
      for (const auto& m : methods) {
        try {
          const auto r = surge::run_method(ctx, make_spec(o, m, 1));
          text += surge::csv_row({"pes.v1", pts[k].label, m, "ok", surge::format_energy(r.vqe.energy),
                                  surge::format_energy(ctx.fci.energy),
                                  surge::format_energy((r.vqe.energy - ctx.fci.energy) * 1e3),
                                  std::to_string(r.cnot_total), std::to_string(r.ansatz.n_params())});
        } catch (const std::exception& e) {
          text += surge::csv_row({"pes.v1", pts[k].label, m, std::string("failed: ") + e.what(), "",
                                  "", "", "", ""});
        }
      }
    } catch (const std::exception& e) {
      for (const auto& m : methods) {
        text += surge::csv_row({"pes.v1", pts[k].label, m, std::string("failed: ") + e.what(), "", "",
                                "", "", ""});
      }
    }
    rows[k] = std::move(text);
  });
  std::string csv = "schema,R,method,status,E,E_FCI,error_mEh,cnot_total,n_params\n";
  for (const auto& r : rows) csv += r;
  surge::write_text_file((out / "pes.csv").string(), csv);
  return {"pes.csv"};
}

Files cmd_landscape(const Options& o, const fs::path& out) {
  if (o.method != "surge" && o.method.rfind("adapt-", 0) != 0) {
    throw surge::ConfigError("landscape supports surge and adapt-* methods");
  }
  const auto ctx = surge::ProblemContext::load(single_input(o));
  const auto spec = make_spec(o, o.method, o.jobs);
  const auto r = surge::run_method(ctx, spec);
  surge::LandscapeTrace trace;
  if (o.method == "surge") {
    trace = surge::growth_landscape(r.ansatz, ctx.hop, surge::hf_state(ctx.problem), r.model,
                                    ctx.fci.energy, spec.vqe);
  } else {
    trace = r.adapt_trace;
  }
  surge::write_text_file((out / "landscape.csv").string(), surge::landscape_csv(trace));
  return {"landscape.csv"};
}

Files cmd_noise(const Options& o, const fs::path& out) {
  const auto ctx = surge::ProblemContext::load(single_input(o));
  surge::NoiseSpec noise;
  noise.p_cnot = o.p_cnot;
  if (o.shots != "exact") noise.shots = std::stoll(o.shots);
  noise.validate();
  if (o.runs < 1) throw surge::ConfigError("runs must be >= 1");
  const auto methods = split_list(o.methods);
  std::string csv =
      "schema,method,cnot_total,p_cnot,shots,runs,E_exact,E_noisy_mean,E_noisy_stderr,bias_mEh\n";
  for (std::size_t m = 0; m < methods.size(); ++m) {
    const auto r = surge::run_method(ctx, make_spec(o, methods[m], o.jobs));
    surge::AnsatzEvaluator ev(surge::hf_state(ctx.problem), r.ansatz, ctx.hop);
    const surge::StateVector psi = ev.state(r.vqe.theta);
    std::vector<double> samples(static_cast<std::size_t>(o.runs));
    surge::parallel_for(samples.size(), o.jobs, [&](std::size_t run) {
      surge::NoiseSpec task = noise;
      task.seed = derive_seed(o.seed, m * 1000003ULL + run);
      samples[run] = surge::noisy_expectation(psi, ctx.h, r.cnot_total, task);
    });
    double mean = 0;
    for (double s : samples) mean += s;
    mean /= static_cast<double>(samples.size());
    double var = 0;
    for (double s : samples) var += (s - mean) * (s - mean);
    const double stderr_ =
        samples.size() > 1 ? std::sqrt(var / static_cast<double>(samples.size() - 1) /
                                       static_cast<double>(samples.size()))
                           : 0.0;
    csv += surge::csv_row({"noise.v1", methods[m], std::to_string(r.cnot_total),
                           surge::format_energy(o.p_cnot), o.shots, std::to_string(o.runs),
                           surge::format_energy(r.vqe.energy), surge::format_energy(mean),
                           surge::format_energy(stderr_),
                           surge::format_energy((mean - ctx.fci.energy) * 1e3)});
  }
  surge::write_text_file((out / "noise.csv").string(), csv);
  return {"noise.csv"};
}

Files cmd_gen_ham(const Options& o, const fs::path& out) {
  auto problem = surge::load_fcidump(single_input(o));
  problem.validate();
  surge::write_json_file((out / "hamiltonian.json").string(),
                         surge::to_json(surge::build_qubit_hamiltonian(problem)));
  return {"hamiltonian.json"};
}

using Command = Files (*)(const Options&, const fs::path&);

int execute(Command cmd, const Options& o) {
  const fs::path out(o.out);
  fs::create_directories(out);
  const Files files = cmd(o, out);
  if (!o.verify) return 0;
  const fs::path check = out / ".verify";
  fs::create_directories(check);
  cmd(o, check);
  int status = 0;
  for (const auto& f : files) {
    if (surge::read_text_file((out / f).string()) != surge::read_text_file((check / f).string())) {
      std::cerr << json{{"error", "verify_mismatch"}, {"file", f}}.dump() << "\n";
      status = 3;
    }
  }
  fs::remove_all(check);
  if (status == 0) std::cerr << json{{"verify", "identical"}, {"files", files}}.dump() << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SURGE-VQE: seniority-driven shallow-depth VQE ansatz construction"};
  app.set_config("--config", "", "key = value file; flags override it");
  app.require_subcommand(1);
  Options o;
  app.add_option("--input,-i", o.inputs, "FCIDUMP file(s)");
  app.add_option("--manifest", o.manifest, "scan manifest JSON {points: [{R, fcidump}]}");
  app.add_option("--method,-m", o.method, "surge|uccsd|kupccgsd|adapt-sd|adapt-gspd|adapt-gsd");
  app.add_option("--methods", o.methods, "comma-separated methods for scan and noise");
  app.add_option("--flavor", o.flavor, "fermionic|qubit");
  app.add_option("--spin-layout", o.layout, "qubit placement for CNOT counting: interleaved|blocked");
  app.add_option("--epsilon", o.epsilon, "single-excitation prescreening threshold (Eh)");
  app.add_option("--seed", o.seed, "RNG seed");
  app.add_option("--out,-o", o.out, "output directory");
  app.add_option("--jobs,-j", o.jobs, "worker threads");
  app.add_flag("--verify", o.verify, "re-run and compare the outputs byte for byte");
  app.add_option("--k", o.k, "kUpCCGSD repetitions");
  app.add_option("--uccsd-order", o.uccsd_order, "singles_first|doubles_first");
  app.add_option("--adapt-grad", o.adapt_grad, "ADAPT gradient threshold");
  app.add_option("--adapt-eig", o.adapt_eig, "ADAPT energy-improvement threshold");
  app.add_option("--adapt-max-ops", o.adapt_max_ops, "ADAPT operator cap");
  app.add_flag("--adapt-stop-on-cycle", o.adapt_stop_on_cycle, "stop ADAPT when selections start repeating");
  app.add_flag("--descending-singles", o.descending_singles,
               "largest-deviation single first after each paired double");
  app.add_flag("--shared-complements", o.shared_complements,
               "spin complements share their partner's parameter");
  app.add_option("--max-iter", o.max_iter, "optimizer iteration cap");
  app.add_option("--grad-tol", o.grad_tol, "optimizer gradient infinity-norm tolerance");
  app.add_option("--p-cnot", o.p_cnot, "per-CNOT depolarizing probability");
  app.add_option("--shots", o.shots, "shots per Pauli term, or 'exact'");
  app.add_option("--runs", o.runs, "independent noisy estimates per method");

  struct Sub {
    const char* name;
    const char* help;
    Command cmd;
  };
  const Sub subs[] = {
      {"run", "build and optimize one ansatz", cmd_run},
      {"scan", "run methods over a PES manifest", cmd_scan},
      {"landscape", "growth-ansatz energy landscape", cmd_landscape},
      {"noise", "depolarized shot-sampled energies", cmd_noise},
      {"gen-ham", "write the qubit Hamiltonian as JSON", cmd_gen_ham},
  };
  std::vector<CLI::App*> handles;
  for (const auto& s : subs) handles.push_back(app.add_subcommand(s.name, s.help)->fallthrough());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  std::size_t which = 0;
  while (!handles[which]->parsed()) ++which;
  const std::string name = subs[which].name;
  if (name == "run" || name == "landscape") {
    if (!surge::is_known_method(o.method)) {
      std::cerr << json{{"error", "unknown method"}, {"method", o.method}}.dump() << "\n";
      return 2;
    }
  }
  if (name == "scan" || name == "noise") {
    for (const auto& m : split_list(name == "scan" && o.methods.empty() ? o.method : o.methods)) {
      if (!surge::is_known_method(m)) {
        std::cerr << json{{"error", "unknown method"}, {"method", m}}.dump() << "\n";
        return 2;
      }
    }
  }
  try {
    return execute(subs[which].cmd, o);
  } catch (const surge::Error& e) {
    std::cerr << json{{"error", e.kind()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  }
}
