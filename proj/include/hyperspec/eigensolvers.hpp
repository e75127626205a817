#pragma once

// H- and Z-eigenpairs of connectivity hypermatrices.
//
//   H-eigenpair: T x^{m-1} = lambda x^{[m-1]}            (x real, x != 0)
//   Z-eigenpair: T x^{m-1} = lambda x,  ||x||_2 = 1
//
// h_power is a higher-order power iteration for nonnegative kinds; z_shss is
// the shifted symmetric higher-order power method run in both its convex
// (local maxima of T x^m on the sphere) and concave (local minima) modes.

#include "hyperspec/error.hpp"
#include "hyperspec/hypermatrix.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

namespace hyperspec {

enum class EigenType { H, Z };

inline std::string_view to_string(EigenType t) { return t == EigenType::H ? "H" : "Z"; }

struct EigenPair {
  double lambda = 0.0;
  std::vector<double> x;
  EigenType type = EigenType::H;
  double residual = 0.0;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
  // provenance
  TensorKind op_kind = TensorKind::Adjacency;
  std::size_t order = 0;
  std::size_t start_index = 0;
  double perturbation = 0.0;
};

struct ShiftPolicy {
  enum class Mode { Auto, Fixed } mode = Mode::Auto;
  double gamma = 0.0;

  static ShiftPolicy automatic() { return {}; }
  static ShiftPolicy fixed(double g) { return {Mode::Fixed, g}; }
};

struct SolverConfig {
  double tol = 1e-10;
  std::size_t max_iter = 10000;
  std::size_t restarts = 20;
  std::uint64_t seed = 0;
  ShiftPolicy shift;
  double perturbation = 0.0;

  void validate() const {
    if (!(tol > 0.0)) throw Error(ErrorCode::PreconditionFailed, "tol must be positive");
    if (restarts < 1) throw Error(ErrorCode::PreconditionFailed, "restarts must be at least 1");
    if (perturbation < 0.0) throw Error(ErrorCode::PreconditionFailed, "perturbation must be non-negative");
  }
};

/// Raised when an iteration exhausts max_iter; carries the best pair found.
class NotConvergedError : public Error {
 public:
  NotConvergedError(const std::string& what, EigenPair best)
      : Error(ErrorCode::NotConverged, what), best_(std::move(best)) {}
  const EigenPair& best() const noexcept { return best_; }

 private:
  EigenPair best_;
};

// ---------------------------------------------------------------------------
// residuals

namespace detail {

inline double inf_norm(std::span<const double> v) {
  double r = 0.0;
  for (double a : v) r = std::max(r, std::abs(a));
  return r;
}

inline double powi(double base, std::size_t exp) {
  double r = 1.0;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Portable uniform draws in [-1, 1): the bit stream of mt19937_64 is fixed
/// by the standard, distributions are not.
class UniformSource {
 public:
  explicit UniformSource(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-52 - 1.0; }
  double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace detail

/// ||T x^{m-1} - lambda x^{[m-1]}||_inf with x rescaled to ||x||_inf = 1.
inline double h_residual(const TensorOperator& op, double lambda, std::span<const double> x) {
  double scale = detail::inf_norm(x);
  if (scale == 0.0) return std::numeric_limits<double>::infinity();
  std::vector<double> xs(x.begin(), x.end());
  for (double& v : xs) v /= scale;
  auto y = hyperspec::apply(op, xs);
  double r = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i)
    r = std::max(r, std::abs(y[i] - lambda * detail::powi(xs[i], op.order() - 1)));
  return r;
}

/// ||T x^{m-1} - lambda x||_inf; x is expected on the unit sphere.
inline double z_residual(const TensorOperator& op, double lambda, std::span<const double> x) {
  auto y = hyperspec::apply(op, x);
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(y[i] - lambda * x[i]));
  return r;
}

/// Recomputes the residual of a pair from scratch.
inline double certify(const TensorOperator& op, const EigenPair& pair) {
  return pair.type == EigenType::H ? h_residual(op, pair.lambda, pair.x) : z_residual(op, pair.lambda, pair.x);
}

// ---------------------------------------------------------------------------
// H-eigenpairs of nonnegative kinds

/// Dominant H-eigenpair by power iteration on T + I (the identity shift
/// keeps the iteration aperiodic; eigenvalues move by exactly 1).  Starts
/// from the all-ones vector.  Convergence is declared when the
/// Collatz-Wielandt gap max_i r_i - min_i r_i, r_i = y_i / x_i^{m-1} over
/// x_i > 0, is at most tol.  With cfg.perturbation = eps > 0 the iteration
/// uses T x^{m-1} + eps 1, which restores convergence for reducible tensors;
/// the reported residual is always against the unperturbed T.
inline EigenPair h_power(const TensorOperator& op, const SolverConfig& cfg) {
  cfg.validate();
  if (!is_nonnegative(op.kind())) {
    throw Error(ErrorCode::KindUnsupported,
                "h_power needs a nonnegative kind, got " + std::string(to_string(op.kind())));
  }
  const std::size_t n = op.n(), m = op.order();
  if (m < 2) throw Error(ErrorCode::OrderTooSmall, "eigenpairs need order >= 2");

  std::vector<double> x(n, 1.0);
  EigenPair pair;
  pair.type = EigenType::H;
  pair.seed = cfg.seed;
  pair.op_kind = op.kind();
  pair.order = m;
  pair.perturbation = cfg.perturbation;

  double gap = std::numeric_limits<double>::infinity();
  double lambda = 0.0;
  std::size_t it = 0;
  for (; it < cfg.max_iter; ++it) {
    auto y = hyperspec::apply(op, x);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (std::size_t i = 0; i < n; ++i) {
      double p = detail::powi(x[i], m - 1);
      y[i] += p + cfg.perturbation;
      if (p > 0.0) {
        lo = std::min(lo, y[i] / p);
        hi = std::max(hi, y[i] / p);
      }
    }
    gap = hi - lo;
    lambda = 0.5 * (hi + lo) - 1.0;
    if (gap <= cfg.tol) break;
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = std::pow(std::max(y[i], 0.0), 1.0 / static_cast<double>(m - 1));
      scale = std::max(scale, x[i]);
    }
    if (scale == 0.0) break;
    for (double& v : x) v /= scale;
  }
  pair.lambda = lambda;
  pair.x = x;
  pair.iterations = it;
  pair.residual = h_residual(op, lambda, x);
  if (!(gap <= cfg.tol)) {
    throw NotConvergedError("h_power: Collatz-Wielandt gap " + std::to_string(gap) + " after " +
                                std::to_string(it) + " iterations",
                            pair);
  }
  return pair;
}

// ---------------------------------------------------------------------------
// Z-eigenpairs of symmetric kinds

struct ZResult {
  std::vector<EigenPair> pairs;  // deduplicated, lambda descending
  std::size_t not_converged = 0;
  double gamma = 0.0;
};

namespace detail {

inline void canonical_sign(std::vector<double>& x, std::size_t m) {
  if (m % 2) return;  // for odd m, -x belongs to -lambda
  for (double v : x) {
    if (std::abs(v) > 1e-12) {
      if (v < 0)
        for (double& w : x) w = -w;
      return;
    }
  }
}

inline double dist(std::span<const double> a, std::span<const double> b, double sign) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - sign * b[i]) * (a[i] - sign * b[i]);
  return std::sqrt(s);
}

}  // namespace detail

/// Shifted symmetric higher-order power method.  Start 0 is the constant
/// unit vector, followed by cfg.restarts seeded random unit vectors; every
/// start runs in convex mode (x <- T x^{m-1} + gamma x) and concave mode
/// (x <- -T x^{m-1} + gamma x).  A start converges when its Z residual is at
/// most cfg.tol.  Pairs are deduplicated when lambda agrees to 1e-6 and
/// min(||x - y||, ||x + y||) <= 1e-6.
inline ZResult z_shss(const TensorOperator& op, const SolverConfig& cfg) {
  cfg.validate();
  if (!is_symmetric(op.kind())) {
    throw Error(ErrorCode::KindUnsupported,
                "z_shss needs a symmetric kind, got " + std::string(to_string(op.kind())));
  }
  const std::size_t n = op.n(), m = op.order();
  if (m < 2) throw Error(ErrorCode::OrderTooSmall, "eigenpairs need order >= 2");

  ZResult result;
  result.gamma = cfg.shift.mode == ShiftPolicy::Mode::Auto ? static_cast<double>(m) * max_abs_row_sum(op)
                                                           : cfg.shift.gamma;

  std::vector<std::vector<double>> starts;
  starts.emplace_back(n, 1.0 / std::sqrt(static_cast<double>(n)));
  detail::UniformSource rng(cfg.seed);
  for (std::size_t r = 0; r < cfg.restarts; ++r) {
    std::vector<double> s(n);
    double norm = 0.0;
    while (norm < 1e-8) {
      norm = 0.0;
      for (double& v : s) {
        v = rng.next();
        norm += v * v;
      }
      norm = std::sqrt(norm);
    }
    for (double& v : s) v /= norm;
    starts.push_back(std::move(s));
  }

  std::vector<EigenPair> found;
  for (std::size_t si = 0; si < starts.size(); ++si) {
    for (double mode : {1.0, -1.0}) {
      std::vector<double> x = starts[si];
      bool converged = false;
      double lambda = 0.0, residual = 0.0;
      std::size_t it = 0;
      for (; it <= cfg.max_iter; ++it) {
        auto g = hyperspec::apply(op, x);
        lambda = 0.0;
        for (std::size_t i = 0; i < n; ++i) lambda += x[i] * g[i];
        residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) residual = std::max(residual, std::abs(g[i] - lambda * x[i]));
        if (residual <= cfg.tol) {
          converged = true;
          break;
        }
        if (it == cfg.max_iter) break;
        double norm = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          x[i] = mode * g[i] + result.gamma * x[i];
          norm += x[i] * x[i];
        }
        norm = std::sqrt(norm);
        if (!(norm > 1e-300)) break;
        for (double& v : x) v /= norm;
      }
      if (!converged) {
        ++result.not_converged;
        continue;
      }
      detail::canonical_sign(x, m);
      EigenPair p;
      p.lambda = lambda;
      p.x = std::move(x);
      p.type = EigenType::Z;
      p.residual = residual;
      p.iterations = it;
      p.seed = cfg.seed;
      p.op_kind = op.kind();
      p.order = m;
      p.start_index = si;
      found.push_back(std::move(p));
    }
  }

  std::stable_sort(found.begin(), found.end(),
                   [](const EigenPair& a, const EigenPair& b) { return a.lambda > b.lambda; });
  for (auto& p : found) {
    bool dup = std::any_of(result.pairs.begin(), result.pairs.end(), [&](const EigenPair& q) {
      return std::abs(p.lambda - q.lambda) <= 1e-6 &&
             std::min(detail::dist(p.x, q.x, 1.0), detail::dist(p.x, q.x, -1.0)) <= 1e-6;
    });
    if (!dup) result.pairs.push_back(std::move(p));
  }
  return result;
}

/// Largest Z-eigenvalue found by z_shss.
inline double max_z_eigenvalue(const TensorOperator& op, const SolverConfig& cfg) {
  auto r = z_shss(op, cfg);
  if (r.pairs.empty()) throw Error(ErrorCode::NotConverged, "no Z-eigenpair converged");
  return r.pairs.front().lambda;
}

// ---------------------------------------------------------------------------
// certified Laplacian pairs

struct KnownPair {
  std::string label;
  std::size_t j = 0;  // 0 for the all-ones pair
  double lambda = 0.0;
  std::vector<double> x;
  double residual = 0.0;
  bool certified = false;
  // e^{(j)} is an eigenvector only when no edge of cardinality <= 2 holds j
  // (such an edge puts a nonzero at (i, j, ..., j) or on the diagonal).
  bool hypothesis_holds = true;
};

struct KnownPairsReport {
  std::vector<KnownPair> pairs;
  double tolerance = 1e-12;
  bool all_certified() const {
    return std::all_of(pairs.begin(), pairs.end(), [](const KnownPair& p) { return p.certified; });
  }
};

/// Certifies (0, 1) and (d(v_j), e^{(j)}) for every j on a Laplacian of
/// order >= 3.
inline KnownPairsReport verify_known_pairs(const TensorOperator& op) {
  if (op.kind() != TensorKind::Laplacian)
    throw Error(ErrorCode::KindUnsupported, "known pairs are stated for the Laplacian");
  if (op.order() < 3) throw Error(ErrorCode::OrderTooSmall, "known pairs need order >= 3");
  KnownPairsReport report;
  const std::size_t n = op.n();
  {
    KnownPair p;
    p.label = "zero-ones";
    p.x.assign(n, 1.0);
    p.lambda = 0.0;
    p.residual = h_residual(op, 0.0, p.x);
    p.certified = p.residual <= report.tolerance;
    report.pairs.push_back(std::move(p));
  }
  for (Vertex j = 1; j <= n; ++j) {
    KnownPair p;
    p.label = "degree-basis";
    p.j = j;
    p.lambda = static_cast<double>(op.degree(j));
    p.x.assign(n, 0.0);
    p.x[j - 1] = 1.0;
    p.residual = h_residual(op, p.lambda, p.x);
    p.certified = p.residual <= report.tolerance;
    for (std::size_t k : op.incident(j))
      if (op.hypergraph().edges()[k].size() <= 2) p.hypothesis_holds = false;
    report.pairs.push_back(std::move(p));
  }
  return report;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundCheck {
  std::string name;
  std::size_t pair_index = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;
  double slack() const { return rhs - lhs; }
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  bool all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.pass; });
  }
};

/// Instantiates every eigenvalue bound that applies to the operator kind and
/// pair type.  Each check reads lhs <= rhs.
inline BoundReport bound_report(const TensorOperator& op, const std::vector<EigenPair>& pairs) {
  constexpr double slack = 1e-9;
  BoundReport report;
  const double delta = static_cast<double>(*std::max_element(op.degrees().begin(), op.degrees().end()));
  const auto disks = gershgorin_disks(op);
  auto add = [&](std::string name, std::size_t idx, double lhs, double rhs) {
    report.checks.push_back({std::move(name), idx, lhs, rhs, lhs <= rhs});
  };
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    const EigenPair& p = pairs[idx];
    const double lam = p.lambda;
    if (p.type == EigenType::H) {
      double excess = std::numeric_limits<double>::infinity();
      for (const auto& d : disks) excess = std::min(excess, std::abs(lam - d.center) - d.radius);
      add("gershgorin", idx, excess, slack);

      double xmin = *std::min_element(p.x.begin(), p.x.end());
      double xmax = *std::max_element(p.x.begin(), p.x.end());
      bool nonneg = xmin >= -1e-12 || xmax <= 1e-12;  // up to overall sign
      bool positive = xmin > 1e-12 || xmax < -1e-12;
      switch (op.kind()) {
        case TensorKind::Adjacency:
          add("h_abs_le_max_degree", idx, std::abs(lam), delta + slack);
          break;
        case TensorKind::Laplacian:
          add("laplacian_nonnegative", idx, -lam, slack);
          add("laplacian_le_twice_max_degree", idx, lam, 2.0 * delta + slack);
          if (nonneg) add("laplacian_hplus_le_max_degree", idx, lam, delta + slack);
          if (positive) add("laplacian_hplusplus_is_zero", idx, std::abs(lam), 1e-8);
          break;
        case TensorKind::NormalizedLaplacianRW:
        case TensorKind::NormalizedLaplacianSym:
          add("normalized_nonnegative", idx, -lam, slack);
          add("normalized_le_two", idx, lam, 2.0 + slack);
          if (nonneg) add("normalized_hplus_le_one", idx, lam, 1.0 + slack);
          if (positive) add("normalized_hplusplus_is_zero", idx, std::abs(lam), 1e-8);
          break;
        case TensorKind::NormalizedAdjacency:
          add("stochastic_spectral_radius", idx, std::abs(lam), 1.0 + slack);
          break;
        case TensorKind::SignlessLaplacian:
          break;
      }
    } else if (op.kind() == TensorKind::Adjacency) {
      add("z_abs_le_max_degree_over_xmax", idx, std::abs(lam), delta / detail::inf_norm(p.x) + slack);
    }
  }
  return report;
}

}  // namespace hyperspec
