#pragma once

// Command implementations behind the hyperspec tool.  Each command turns
// parsed inputs into a results payload, warnings and a human-readable table;
// the tool wraps them into a Report.  Kept in the library so the payloads
// can be compared directly in tests.

#include "hyperspec/charpoly.hpp"
#include "hyperspec/connectivity.hpp"
#include "hyperspec/constructions.hpp"
#include "hyperspec/eigensolvers.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/hypermatrix.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace hyperspec {

using Json = nlohmann::ordered_json;

enum ExitStatus : int { exit_ok = 0, exit_parse = 2, exit_precondition = 3, exit_not_converged = 4 };

inline int exit_status_for(const Error& e) {
  if (e.is_input_error()) return exit_parse;
  if (e.code() == ErrorCode::NotConverged) return exit_not_converged;
  return exit_precondition;
}

struct Outcome {
  Json results = Json::object();
  std::vector<std::string> warnings;
  std::string table;
  int status = exit_ok;
};

/// {command, input_digest, results, warnings, timing_ms}
inline Json make_report(Json command, Json digest, const Outcome& out, double timing_ms) {
  Json r;
  r["command"] = std::move(command);
  r["input_digest"] = std::move(digest);
  r["results"] = out.results;
  r["warnings"] = out.warnings;
  r["timing_ms"] = timing_ms;
  return r;
}

inline Json error_report(Json command, const Error& e) {
  Json r;
  r["command"] = std::move(command);
  r["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  r["exit_code"] = exit_status_for(e);
  return r;
}

namespace detail {

inline std::string fmt(double v, int digits = 12) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

inline Json number_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

inline Json config_json(const SolverConfig& cfg) {
  Json c;
  c["tol"] = cfg.tol;
  c["max_iter"] = cfg.max_iter;
  c["restarts"] = cfg.restarts;
  c["seed"] = cfg.seed;
  c["shift"] = cfg.shift.mode == ShiftPolicy::Mode::Auto ? Json("auto") : Json(cfg.shift.gamma);
  c["perturbation"] = cfg.perturbation;
  return c;
}

inline Json pair_json(const EigenPair& p) {
  Json j;
  j["lambda"] = p.lambda;
  j["x"] = p.x;
  j["residual"] = p.residual;
  j["iterations"] = p.iterations;
  j["start_index"] = p.start_index;
  return j;
}

inline Json bounds_json(const BoundReport& b) {
  Json arr = Json::array();
  for (const auto& c : b.checks)
    arr.push_back({{"name", c.name}, {"pair", c.pair_index}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
  return arr;
}

inline std::string vec_text(const std::vector<double>& x, int digits = 6) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += fmt(x[i], digits);
  }
  return s + ")";
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline Outcome cmd_info(const Hypergraph& h) {
  Outcome out;
  auto prof = degrees(h);
  auto comps = components(h);
  Json& r = out.results;
  r["n"] = h.n();
  r["edge_count"] = h.edge_count();
  r["mce"] = h.edges().empty() ? Json(nullptr) : Json(mce(h));
  r["degrees"] = prof.degrees;
  r["max_degree"] = prof.delta_max;
  r["regular"] = prof.is_regular;
  r["k"] = prof.is_regular ? Json(prof.k) : Json(nullptr);
  Json cs = Json::array();
  for (const auto& c : comps) cs.push_back(c.vertices);
  r["component_count"] = comps.size();
  r["components"] = std::move(cs);
  if (h.edges().empty()) out.warnings.push_back("hypergraph has no edges");

  std::string& t = out.table;
  t += "vertices     " + std::to_string(h.n()) + "\n";
  t += "edges        " + std::to_string(h.edge_count()) + "\n";
  t += "mce          " + (h.edges().empty() ? std::string("-") : std::to_string(mce(h))) + "\n";
  t += "max degree   " + std::to_string(prof.delta_max) + "\n";
  t += "regularity   " + (prof.is_regular ? "regular k=" + std::to_string(prof.k) : std::string("irregular")) + "\n";
  t += "components   " + std::to_string(comps.size()) + "\n";
  t += "degrees     ";
  for (auto d : prof.degrees) t += " " + std::to_string(d);
  t += "\n";
  return out;
}

struct TensorOptions {
  TensorKind kind = TensorKind::Adjacency;
  std::optional<std::size_t> order;
  bool exact = false;
  std::uint64_t cap = default_entry_cap;
};

inline Outcome cmd_tensor(const Hypergraph& h, const TensorOptions& opt) {
  Outcome out;
  TensorOperator op(h, opt.kind, opt.order);
  EntryStream stream(op, opt.cap);
  Json entries = Json::array();
  while (auto e = stream.next()) {
    std::string line = format_entry(*e, opt.exact);
    out.table += line + "\n";
    entries.push_back(std::move(line));
  }
  Json& r = out.results;
  r["kind"] = std::string(to_string(opt.kind));
  r["order"] = op.order();
  r["exact"] = opt.exact;
  r["nonzeros"] = stream.size();
  r["entries"] = std::move(entries);
  return out;
}

struct EigOptions {
  TensorKind kind = TensorKind::Adjacency;
  EigenType type = EigenType::H;
  std::optional<std::size_t> order;
  SolverConfig cfg;
};

namespace detail {

/// Dominant H-pair of the normalized adjacency, carried to 1 - rho on the
/// normalized Laplacian of the requested kind.
inline EigenPair normalized_laplacian_pair(const TensorOperator& op, const SolverConfig& cfg) {
  TensorOperator na(op.hypergraph(), TensorKind::NormalizedAdjacency, op.order());
  EigenPair p = h_power(na, cfg);
  p.lambda = 1.0 - p.lambda;
  p.op_kind = op.kind();
  if (op.kind() == TensorKind::NormalizedLaplacianSym) {
    // x = D^{1/m} y
    for (std::size_t i = 0; i < p.x.size(); ++i) p.x[i] /= op.root_inv_degree(i + 1);
    double s = inf_norm(p.x);
    for (double& v : p.x) v /= s;
  }
  p.residual = h_residual(op, p.lambda, p.x);
  return p;
}

/// Same lambda and same direction (up to scale and sign) as a listed pair.
inline bool contains_pair(const std::vector<EigenPair>& pairs, const EigenPair& p) {
  auto unit = [](std::vector<double> x) {
    double s = inf_norm(x);
    for (double& v : x) v /= s;
    return x;
  };
  auto a = unit(p.x);
  return std::any_of(pairs.begin(), pairs.end(), [&](const EigenPair& q) {
    if (std::abs(q.lambda - p.lambda) > 1e-9 || q.x.size() != a.size()) return false;
    auto b = unit(q.x);
    return std::min(dist(a, b, 1.0), dist(a, b, -1.0)) <= 1e-9;
  });
}

}  // namespace detail

inline Outcome cmd_eig(const Hypergraph& h, const EigOptions& opt) {
  opt.cfg.validate();
  Outcome out;
  TensorOperator op(h, opt.kind, opt.order);
  if (op.order() < 2) throw Error(ErrorCode::OrderTooSmall, "eigenpairs need order >= 2");
  Json& r = out.results;
  r["kind"] = std::string(to_string(opt.kind));
  r["m"] = op.order();
  r["type"] = std::string(to_string(opt.type));
  std::vector<EigenPair> pairs;
  std::optional<KnownPairsReport> known;

  if (opt.type == EigenType::Z) {
    auto z = z_shss(op, opt.cfg);
    pairs = z.pairs;
    r["gamma"] = z.gamma;
    r["not_converged"] = z.not_converged;
    if (z.not_converged) out.warnings.push_back(std::to_string(z.not_converged) + " start(s) did not converge");
    if (pairs.empty()) out.status = exit_not_converged;
  } else {
    auto run = [&](auto&& solve) {
      try {
        pairs.push_back(solve());
      } catch (const NotConvergedError& e) {
        pairs.push_back(e.best());
        out.warnings.push_back(e.what());
        out.warnings.push_back("a small --perturbation restores convergence for reducible hypermatrices");
        out.status = exit_not_converged;
      }
    };
    switch (opt.kind) {
      case TensorKind::Adjacency:
      case TensorKind::SignlessLaplacian:
      case TensorKind::NormalizedAdjacency:
        run([&] { return h_power(op, opt.cfg); });
        break;
      case TensorKind::NormalizedLaplacianRW:
      case TensorKind::NormalizedLaplacianSym:
        run([&] { return detail::normalized_laplacian_pair(op, opt.cfg); });
        break;
      case TensorKind::Laplacian: {
        if (op.order() >= 3) {
          known = verify_known_pairs(op);
          for (const auto& kp : known->pairs) {
            if (!kp.certified) continue;
            EigenPair p;
            p.lambda = kp.lambda;
            p.x = kp.x;
            p.residual = kp.residual;
            p.op_kind = op.kind();
            p.order = op.order();
            p.seed = opt.cfg.seed;
            pairs.push_back(std::move(p));
          }
        } else {
          EigenPair p;
          p.x.assign(op.n(), 1.0);
          p.residual = h_residual(op, 0.0, p.x);
          p.op_kind = op.kind();
          p.order = op.order();
          pairs.push_back(std::move(p));
        }
        break;
      }
    }
    if (op.n() == 2) {
      try {
        auto all = h_pairs_n2(op);
        for (auto& p : all.pairs) {
          if (p.residual > 1e-8 || detail::contains_pair(pairs, p)) continue;
          p.seed = opt.cfg.seed;
          pairs.push_back(std::move(p));
        }
        if (all.continuum) out.warnings.push_back("every vector solves the eigen-equation at some lambda");
      } catch (const Error& e) {
        if (e.code() != ErrorCode::IrrationalEntries) throw;
      }
    }
  }

  r["pairs"] = Json::array();
  for (const auto& p : pairs) r["pairs"].push_back(detail::pair_json(p));
  auto bounds = bound_report(op, pairs);
  r["bounds"] = detail::bounds_json(bounds);
  if (!bounds.all_pass()) out.warnings.push_back("some eigenvalue bounds failed");
  if (known) {
    Json kj = Json::array();
    for (const auto& kp : known->pairs) {
      kj.push_back({{"label", kp.label},
                    {"j", kp.j},
                    {"lambda", kp.lambda},
                    {"residual", kp.residual},
                    {"certified", kp.certified},
                    {"hypothesis_holds", kp.hypothesis_holds}});
      if (!kp.certified) {
        out.warnings.push_back("(d(v_" + std::to_string(kp.j) + "), e^(" + std::to_string(kp.j) +
                               ")) is not an eigenpair: vertex lies in an edge of cardinality <= 2");
      }
    }
    r["known_pairs"] = std::move(kj);
  }
  r["config"] = detail::config_json(opt.cfg);

  std::string& t = out.table;
  t += std::string(to_string(opt.kind)) + " m=" + std::to_string(op.order()) + " " + std::string(to_string(opt.type)) +
       "-eigenpairs\n";
  t += "  lambda              residual    x\n";
  for (const auto& p : pairs) {
    char line[96];
    std::snprintf(line, sizeof line, "  %-18s  %-10.3g  ", detail::fmt(p.lambda).c_str(), p.residual);
    t += line + detail::vec_text(p.x) + "\n";
  }
  std::size_t failed = 0;
  for (const auto& c : bounds.checks) failed += !c.pass;
  t += "bounds: " + std::to_string(bounds.checks.size() - failed) + "/" + std::to_string(bounds.checks.size()) +
       " pass\n";
  return out;
}

inline Outcome cmd_connectivity(const Hypergraph& h, const SolverConfig& cfg) {
  Outcome out;
  auto res = analytic_connectivity(h, cfg);
  auto comps = components(h);
  Json& r = out.results;
  r["alpha_g"] = detail::number_or_null(res.alpha_g);
  r["argmin_j"] = res.argmin_j;
  r["x_min"] = res.x_min;
  Json per_j = Json::array();
  for (double v : res.per_j_values) per_j.push_back(detail::number_or_null(v));
  r["per_j_values"] = std::move(per_j);
  r["per_j_residual"] = res.per_j_residual;
  r["per_j_converged"] = res.per_j_converged;
  const bool by_components = comps.size() == 1;
  bool by_optimizer = by_components;
  if (res.feasible) {
    by_optimizer = res.alpha_g > 1e-6;
    if (!(res.alpha_g > 1e-6) && !(res.alpha_g <= 1e-8))
      out.warnings.push_back("alpha_g lies between the 1e-8 and 1e-6 thresholds");
  } else {
    out.warnings.push_back("one vertex: the feasible set with x_j = 0 is empty; connectivity taken from components");
  }
  r["component_count"] = comps.size();
  r["connected_by_alpha"] = by_optimizer;
  r["connected_by_components"] = by_components;
  r["verdicts_agree"] = by_optimizer == by_components;
  r["config"] = detail::config_json(cfg);
  if (!res.all_converged()) out.warnings.push_back("optimizer did not meet tol for some j; best values reported");
  if (mce(h) < 3) out.warnings.push_back("maximum edge cardinality below 3");
  if (by_optimizer != by_components) out.warnings.push_back("optimizer verdict disagrees with components");

  std::string& t = out.table;
  t += "alpha_g      " + detail::fmt(res.alpha_g) + " (j=" + std::to_string(res.argmin_j) + ")\n";
  t += "per j       ";
  for (double v : res.per_j_values) t += " " + detail::fmt(v, 8);
  t += "\ncomponents   " + std::to_string(comps.size()) + "\n";
  t += std::string("verdict      ") + (by_optimizer ? "connected" : "disconnected") +
       (by_optimizer == by_components ? " (agrees with components)" : " (DISAGREES with components)") + "\n";
  return out;
}

inline Outcome cmd_product(const Hypergraph& g, const Hypergraph& h) {
  Outcome out;
  auto prod = cartesian_product(g, h);
  Json& r = out.results;
  r["n"] = prod.graph.n();
  r["edge_count"] = prod.graph.edge_count();
  r["mce_g"] = prod.mce_g ? Json(*prod.mce_g) : Json(nullptr);
  r["mce_h"] = prod.mce_h ? Json(*prod.mce_h) : Json(nullptr);
  r["orders_match"] = prod.orders_match();
  r["merged_loops"] = prod.merged_loops;
  Json map = Json::array();
  for (Vertex a = 1; a <= prod.map.n1; ++a)
    for (Vertex b = 1; b <= prod.map.n2; ++b) map.push_back({a, b, prod.map.id(a, b)});
  r["index_map"] = std::move(map);
  r["hypergraph"] = to_json(prod.graph);
  if (!prod.orders_match())
    out.warnings.push_back("factors differ in maximum edge cardinality; eigenvalue additivity does not apply");
  if (prod.merged_loops)
    out.warnings.push_back(std::to_string(prod.merged_loops) + " coinciding singleton edge(s) kept once");
  out.table = "vertices " + std::to_string(prod.graph.n()) + "\nedges    " + std::to_string(prod.graph.edge_count()) + "\n";
  return out;
}

struct CharpolyOptions {
  TensorKind kind = TensorKind::Adjacency;
  std::optional<std::size_t> order;
};

inline Outcome cmd_charpoly(const Hypergraph& h, const CharpolyOptions& opt) {
  Outcome out;
  if (h.n() != 2) {
    throw Error(ErrorCode::DimensionNot2, "characteristic polynomial needs n = 2, got n = " + std::to_string(h.n()));
  }
  TensorOperator op(h, opt.kind, opt.order);
  auto cp = charpoly_n2(op);
  Json& r = out.results;
  r["kind"] = std::string(to_string(opt.kind));
  r["order"] = cp.order;
  r["degree"] = cp.degree();
  Json coeffs = Json::array();
  for (const auto& c : cp.poly.coeffs()) coeffs.push_back(to_string(c));
  r["coefficients"] = std::move(coeffs);
  r["polynomial"] = cp.poly.to_text("λ");
  Json roots = Json::array();
  for (const auto& root : cp.roots)
    roots.push_back({{"re", root.value.real()}, {"im", root.value.imag()}, {"multiplicity", root.multiplicity}});
  r["roots"] = std::move(roots);
  r["trace"] = {{"expected", to_string(cp.trace.expected)},
                {"actual", to_string(cp.trace.actual)},
                {"pass", cp.trace.pass()}};
  if (!cp.trace.pass()) out.warnings.push_back("root sum differs from the trace identity");

  std::string& t = out.table;
  t += "p(λ) = " + cp.poly.to_text("λ") + "\n";
  t += "degree " + std::to_string(cp.degree()) + "\n";
  t += "  re                  im                  mult\n";
  for (const auto& root : cp.roots) {
    char line[96];
    std::snprintf(line, sizeof line, "  %-18s  %-18s  %zu\n", detail::fmt(root.value.real()).c_str(),
                  detail::fmt(root.value.imag()).c_str(), root.multiplicity);
    t += line;
  }
  t += "root sum " + to_string(cp.trace.actual) + ", expected " + to_string(cp.trace.expected) +
       (cp.trace.pass() ? " (pass)" : " (FAIL)") + "\n";
  return out;
}

}  // namespace hyperspec
