// Copyright 2026 The SURGE-VQE Authors
// SPDX-License-Identifier: Apache-2.0

#include "surge/lbfgs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "surge/errors.hpp"

namespace surge {

namespace {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

double inf_norm(const Vec& a) {
  double m = 0;
  for (double v : a) m = std::max(m, std::abs(v));
  return m;
}

// Minimizer of the cubic through (a, fa, ga) and (b, fb, gb), clamped to the
// interval; bisection when the cubic has no usable minimum.
double cubic_step(double a, double fa, double ga, double b, double fb, double gb) {
  const double d1 = ga + gb - 3 * (fa - fb) / (a - b);
  const double disc = d1 * d1 - ga * gb;
  const double lo = std::min(a, b), hi = std::max(a, b);
  if (disc >= 0) {
    const double d2 = std::copysign(std::sqrt(disc), b - a);
    const double t = b - (b - a) * (gb + d2 - d1) / (gb - ga + 2 * d2);
    const double margin = 0.1 * (hi - lo);
    if (std::isfinite(t) && t > lo + margin && t < hi - margin) return t;
  }
  return 0.5 * (a + b);
}

struct Point {
  double alpha;
  double f;
  double g;  // directional derivative
};

class LineSearch {
 public:
  LineSearch(const Objective& fn, const LbfgsOptions& opt, const Vec& x, const Vec& d,
             std::size_t& n_evals)
      : fn_(fn), opt_(opt), x_(x), d_(d), n_evals_(n_evals), trial_(x.size()), grad_(x.size()) {}

  // Returns true on success; xbest/fbest/gbest hold the accepted point.
  bool run(double f0, double g0, double alpha0, Vec& x_out, double& f_out, Vec& g_out) {
    Point prev{0.0, f0, g0};
    double alpha = alpha0;
    for (int it = 0; it < opt_.max_linesearch; ++it) {
      const Point cur = eval(alpha);
      if (cur.f > f0 + opt_.c1 * alpha * g0 || (it > 0 && cur.f >= prev.f)) {
        return zoom(prev, cur, f0, g0, x_out, f_out, g_out);
      }
      if (std::abs(cur.g) <= -opt_.c2 * g0) return accept(cur, x_out, f_out, g_out);
      if (cur.g >= 0) return zoom(cur, prev, f0, g0, x_out, f_out, g_out);
      prev = cur;
      alpha *= 2.0;
    }
    return false;
  }

 private:
  Point eval(double alpha) {
    for (std::size_t k = 0; k < x_.size(); ++k) trial_[k] = x_[k] + alpha * d_[k];
    const double f = fn_(trial_, grad_);
    ++n_evals_;
    if (!std::isfinite(f)) throw OptimizationError("non-finite energy in line search", x_, f);
    last_alpha_ = alpha;
    return {alpha, f, dot(grad_, d_)};
  }

  bool accept(const Point& p, Vec& x_out, double& f_out, Vec& g_out) {
    if (last_alpha_ != p.alpha) eval(p.alpha);
    x_out = trial_;
    f_out = p.f;
    g_out = grad_;
    return true;
  }

  bool zoom(Point lo, Point hi, double f0, double g0, Vec& x_out, double& f_out, Vec& g_out) {
    for (int it = 0; it < opt_.max_linesearch; ++it) {
      const double alpha = cubic_step(lo.alpha, lo.f, lo.g, hi.alpha, hi.f, hi.g);
      if (std::abs(hi.alpha - lo.alpha) < 1e-16 * std::max(1.0, std::abs(lo.alpha))) break;
      const Point cur = eval(alpha);
      if (cur.f > f0 + opt_.c1 * alpha * g0 || cur.f >= lo.f) {
        hi = cur;
      } else {
        if (std::abs(cur.g) <= -opt_.c2 * g0) return accept(cur, x_out, f_out, g_out);
        if (cur.g * (hi.alpha - lo.alpha) >= 0) hi = lo;
        lo = cur;
      }
    }
    // Fall back to the best sufficient-decrease point found, if any.
    if (lo.alpha > 0 && lo.f < f0) return accept(lo, x_out, f_out, g_out);
    return false;
  }

  const Objective& fn_;
  const LbfgsOptions& opt_;
  const Vec& x_;
  const Vec& d_;
  std::size_t& n_evals_;
  Vec trial_;
  Vec grad_;
  double last_alpha_ = -1.0;
};

}  // namespace

LbfgsResult lbfgs_minimize(const Objective& fn, Vec x, const LbfgsOptions& opt) {
  const std::size_t n = x.size();
  LbfgsResult r;
  Vec g(n);
  double f = fn(x, g);
  r.n_evals = 1;
  if (!std::isfinite(f)) throw OptimizationError("non-finite energy at the initial point", x, f);
  r.x = x;
  r.f = f;
  r.grad_inf = inf_norm(g);
  if (n == 0 || r.grad_inf < opt.grad_tol) {
    r.converged = true;
    r.stop_reason = "gradient";
    return r;
  }

  std::deque<Vec> s_hist, y_hist;
  std::deque<double> rho_hist;
  Vec d(n), x_new(n), g_new(n);
  bool restarted = false;
  for (r.iterations = 0; r.iterations < opt.max_iterations;) {
    // Two-loop recursion: d = -H g.
    d = g;
    std::vector<double> alpha(s_hist.size());
    for (std::size_t k = s_hist.size(); k-- > 0;) {
      alpha[k] = rho_hist[k] * dot(s_hist[k], d);
      for (std::size_t i = 0; i < n; ++i) d[i] -= alpha[k] * y_hist[k][i];
    }
    if (!s_hist.empty()) {
      const double gamma = dot(s_hist.back(), y_hist.back()) / dot(y_hist.back(), y_hist.back());
      for (double& v : d) v *= gamma;
    }
    for (std::size_t k = 0; k < s_hist.size(); ++k) {
      const double beta = rho_hist[k] * dot(y_hist[k], d);
      for (std::size_t i = 0; i < n; ++i) d[i] += (alpha[k] - beta) * s_hist[k][i];
    }
    for (double& v : d) v = -v;

    double g0 = dot(g, d);
    if (!(g0 < 0)) {
      for (std::size_t i = 0; i < n; ++i) d[i] = -g[i];
      g0 = dot(g, d);
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
    }
    const double alpha0 = s_hist.empty() ? std::min(1.0, 1.0 / inf_norm(g)) : 1.0;
    double f_new = f;
    LineSearch ls(fn, opt, x, d, r.n_evals);
    if (!ls.run(f, g0, alpha0, x_new, f_new, g_new)) {
      if (restarted || s_hist.empty()) {
        r.stop_reason = "line_search";
        break;
      }
      restarted = true;
      s_hist.clear();
      y_hist.clear();
      rho_hist.clear();
      continue;
    }
    restarted = false;
    ++r.iterations;

    Vec s(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = x_new[i] - x[i];
      y[i] = g_new[i] - g[i];
    }
    const double sy = dot(s, y);
    if (sy > 1e-16 * std::sqrt(dot(s, s) * dot(y, y))) {
      s_hist.push_back(std::move(s));
      y_hist.push_back(std::move(y));
      rho_hist.push_back(1.0 / sy);
      if (static_cast<int>(s_hist.size()) > opt.memory) {
        s_hist.pop_front();
        y_hist.pop_front();
        rho_hist.pop_front();
      }
    }
    const double df = f - f_new;
    x.swap(x_new);
    g.swap(g_new);
    f = f_new;
    if (f < r.f) {
      r.x = x;
      r.f = f;
      r.grad_inf = inf_norm(g);
    }
    if (inf_norm(g) < opt.grad_tol) {
      r.stop_reason = "gradient";
      break;
    }
    if (std::abs(df) <= opt.rel_energy_tol * std::max(1.0, std::abs(f))) {
      r.stop_reason = "energy";
      break;
    }
  }
  if (r.stop_reason.empty()) r.stop_reason = "max_iterations";
  r.converged = r.grad_inf < opt.grad_tol;
  return r;
}

}  // namespace surge
