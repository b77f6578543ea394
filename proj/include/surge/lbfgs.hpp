// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

/**
 * @file lbfgs.hpp
 * @brief Unconstrained limited-memory BFGS with a strong-Wolfe line search.
 */

#include <functional>
#include <span>
#include <string>
#include <vector>

namespace surge {

struct LbfgsOptions {
  int memory = 40;
  int max_iterations = 10000;
  double grad_tol = 1e-8;        // infinity norm
  double rel_energy_tol = 1e-12;  // |f_k - f_{k+1}| / max(1, |f_k|)
  int max_linesearch = 40;
  double c1 = 1e-4;
  double c2 = 0.9;
};

struct LbfgsResult {
  std::vector<double> x;
  double f = 0.0;
  double grad_inf = 0.0;
  int iterations = 0;
  std::size_t n_evals = 0;
  bool converged = false;     // grad_inf < grad_tol
  std::string stop_reason;    // "gradient", "energy", "max_iterations", "line_search"
};

/// f(x, grad) returns the value and fills grad.
using Objective = std::function<double(std::span<const double>, std::span<double>)>;

/// Returns the best point seen. Throws OptimizationError on a non-finite value.
LbfgsResult lbfgs_minimize(const Objective& f, std::vector<double> x0, const LbfgsOptions& opt = {});

}  // namespace surge
