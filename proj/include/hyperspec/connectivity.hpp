#pragma once

// Analytic connectivity
//
//   alpha(G) = min_j min { L x^m : x >= 0, sum_i x_i^m = 1, x_j = 0 }
//
// With u = x^{[m]} the feasible set becomes a face of the unit simplex and
// u -> L (u^{1/m})^m is convex there (a linear degree term minus nonnegative
// combinations of weighted geometric means).  Each inner problem is solved by
// spectral projected gradient with a sufficient-decrease backtracking rule.

#include "hyperspec/eigensolvers.hpp"
#include "hyperspec/hypermatrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace hyperspec {

struct ConnectivityResult {
  double alpha_g = std::numeric_limits<double>::infinity();
  Vertex argmin_j = 0;
  std::vector<double> x_min;
  std::vector<double> per_j_values;
  std::vector<double> per_j_residual;  // first-order (projected gradient) residual
  std::vector<bool> per_j_converged;
  bool feasible = true;  // false when n = 1: no vertex is left once x_j = 0

  bool all_converged() const {
    return std::all_of(per_j_converged.begin(), per_j_converged.end(), [](bool b) { return b; });
  }
};

/// Euclidean projection of v onto {w >= 0, sum w = 1}.
inline std::vector<double> project_simplex(std::vector<double> v) {
  std::vector<double> sorted = v;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0, theta = 0.0;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    cumulative += sorted[k];
    double t = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (sorted[k] - t > 0.0) theta = t;
  }
  for (double& w : v) w = std::max(w - theta, 0.0);
  return v;
}

namespace detail {

class ConnectivityProblem {
 public:
  ConnectivityProblem(const TensorOperator& laplacian, Vertex excluded)
      : op_(laplacian), j_(excluded - 1) {
    for (std::size_t i = 0; i < op_.n(); ++i)
      if (i != j_) free_.push_back(i);
  }

  const std::vector<std::size_t>& free() const { return free_; }

  std::vector<double> to_x(std::span<const double> u) const {
    std::vector<double> x(op_.n(), 0.0);
    const double inv_m = 1.0 / static_cast<double>(op_.order());
    for (std::size_t k = 0; k < free_.size(); ++k) x[free_[k]] = std::pow(std::max(u[k], 0.0), inv_m);
    return x;
  }

  double value(std::span<const double> u) const { return quadratic_form(op_, to_x(u)); }

  /// Rounding level of value(): its terms are bounded by the largest degree.
  double noise() const {
    double dmax = static_cast<double>(*std::max_element(op_.degrees().begin(), op_.degrees().end()));
    return 64.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, dmax);
  }

  /// d/du_i of L x^m = (L x^{m-1})_i / x_i^{m-1}; evaluated with u floored
  /// away from zero on the free coordinates, where the true derivative may be
  /// unbounded below.
  std::vector<double> gradient(std::span<const double> u) const {
    std::vector<double> floored(u.begin(), u.end());
    for (double& v : floored) v = std::max(v, 1e-20);
    auto x = to_x(floored);
    auto y = hyperspec::apply(op_, x);
    std::vector<double> g(free_.size());
    for (std::size_t k = 0; k < free_.size(); ++k)
      g[k] = y[free_[k]] / powi(x[free_[k]], op_.order() - 1);
    return g;
  }

 private:
  const TensorOperator& op_;
  std::size_t j_;
  std::vector<std::size_t> free_;
};

struct InnerResult {
  double value = std::numeric_limits<double>::infinity();
  std::vector<double> u;
  double residual = std::numeric_limits<double>::infinity();
  bool converged = false;
};

inline double projected_residual(std::span<const double> u, std::span<const double> g) {
  std::vector<double> step(u.size());
  for (std::size_t k = 0; k < u.size(); ++k) step[k] = u[k] - g[k];
  auto p = project_simplex(std::move(step));
  double r = 0.0;
  for (std::size_t k = 0; k < u.size(); ++k) r = std::max(r, std::abs(p[k] - u[k]));
  return r;
}

inline InnerResult minimize_from(const ConnectivityProblem& prob, std::vector<double> u, double tol,
                                 std::size_t max_iter) {
  InnerResult out;
  double f = prob.value(u);
  auto g = prob.gradient(u);
  double step = 1.0 / std::max(1.0, inf_norm(g));
  std::vector<double> u_prev, g_prev;
  for (std::size_t it = 0; it < max_iter; ++it) {
    out.residual = projected_residual(u, g);
    if (out.residual <= tol) {
      out.converged = true;
      break;
    }
    if (!u_prev.empty()) {
      double ss = 0.0, sy = 0.0;
      for (std::size_t k = 0; k < u.size(); ++k) {
        double s = u[k] - u_prev[k], y = g[k] - g_prev[k];
        ss += s * s;
        sy += s * y;
      }
      step = sy > 0.0 ? std::clamp(ss / sy, 1e-12, 1e12) : 1.0 / std::max(1.0, inf_norm(g));
    }
    // backtrack along the projection arc
    std::vector<double> trial;
    double f_trial = f;
    bool accepted = false;
    for (int bt = 0; bt < 60; ++bt) {
      std::vector<double> v(u.size());
      for (std::size_t k = 0; k < u.size(); ++k) v[k] = u[k] - step * g[k];
      trial = project_simplex(std::move(v));
      double moved = 0.0;
      for (std::size_t k = 0; k < u.size(); ++k) moved += (trial[k] - u[k]) * (trial[k] - u[k]);
      f_trial = prob.value(trial);
      if (f_trial <= f - 1e-4 * moved / step) {
        accepted = moved > 0.0;
        break;
      }
      // Below rounding level of F the value test is blind; fall back to
      // requiring a smaller first-order residual.
      if (moved > 0.0 && f_trial - f <= prob.noise() &&
          projected_residual(trial, prob.gradient(trial)) < out.residual) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;  // no further decrease representable
    u_prev = std::move(u);
    g_prev = std::move(g);
    u = std::move(trial);
    f = f_trial;
    g = prob.gradient(u);
  }
  out.value = f;
  out.u = std::move(u);
  if (!out.converged) out.residual = projected_residual(out.u, prob.gradient(out.u));
  out.converged = out.converged || out.residual <= tol;
  return out;
}

}  // namespace detail

/// Minimizes the Laplacian form for every excluded vertex j from the
/// constant start plus cfg.restarts seeded random starts, 200 n iterations
/// per start.  Best start wins by (value, start index).  Operator order is
/// mce(H).
inline ConnectivityResult analytic_connectivity(const Hypergraph& h, const SolverConfig& cfg) {
  cfg.validate();
  TensorOperator op(h, TensorKind::Laplacian);
  const std::size_t n = h.n();
  ConnectivityResult result;
  if (n == 1) {
    result.feasible = false;
    result.per_j_values = {std::numeric_limits<double>::infinity()};
    result.per_j_residual = {0.0};
    result.per_j_converged = {true};
    result.argmin_j = 1;
    return result;
  }
  detail::UniformSource rng(cfg.seed);
  const std::size_t max_iter = 200 * n;
  for (Vertex j = 1; j <= n; ++j) {
    detail::ConnectivityProblem prob(op, j);
    const std::size_t k = prob.free().size();
    detail::InnerResult best;
    for (std::size_t start = 0; start <= cfg.restarts; ++start) {
      std::vector<double> u(k, 1.0 / static_cast<double>(k));
      if (start > 0) {
        double total = 0.0;
        for (double& v : u) total += (v = rng.next_unit() + 1e-3);
        for (double& v : u) v /= total;
      }
      auto r = detail::minimize_from(prob, std::move(u), cfg.tol, max_iter);
      if (r.value < best.value) best = std::move(r);
    }
    result.per_j_values.push_back(best.value);
    result.per_j_residual.push_back(best.residual);
    result.per_j_converged.push_back(best.converged);
    if (best.value < result.alpha_g) {
      result.alpha_g = best.value;
      result.argmin_j = j;
      result.x_min = prob.to_x(best.u);
    }
  }
  return result;
}

}  // namespace hyperspec
