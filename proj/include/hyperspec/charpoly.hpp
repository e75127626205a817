#pragma once

// Characteristic polynomial of a two-vertex hypermatrix and dense brute-force
// entry tables for small cases.
//
// For n = 2 the H-eigenvalue system is
//   f_1(x1, x2) = (T x^{m-1})_1 - lambda x1^{m-1}
//   f_2(x1, x2) = (T x^{m-1})_2 - lambda x2^{m-1}
// two binary forms of degree d = m - 1.  Their resultant, the Sylvester
// determinant taken at formal degree d, is a polynomial of degree 2d in
// lambda whose roots are exactly the eigenvalues.

#include "hyperspec/eigensolvers.hpp"
#include "hyperspec/hypermatrix.hpp"
#include "hyperspec/polynomial.hpp"

#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace hyperspec {

struct TraceCheck {
  Rational expected;  // (m-1)^{n-1} * sum of diagonal entries
  Rational actual;    // sum of roots with multiplicity, read off the coefficients
  bool pass() const { return expected == actual; }
};

struct CharPoly {
  TensorKind kind{};
  std::size_t order = 0;
  std::size_t n = 0;
  Polynomial poly;  // monic
  std::vector<Root> roots;
  TraceCheck trace;

  std::size_t degree() const { return static_cast<std::size_t>(poly.degree()); }
};

namespace detail {

inline Rational exact_or_throw(const EntryValue& v) {
  if (!v.exact) {
    throw Error(ErrorCode::IrrationalEntries,
                "entries involve irrational degree roots; exact polynomial unavailable");
  }
  return *v.exact;
}

inline Rational root_sum(const Polynomial& monic) {
  const long deg = monic.degree();
  if (deg < 1) return 0;
  return -monic.coeff(static_cast<std::size_t>(deg - 1));
}

inline Rational diagonal_sum(const TensorOperator& op) {
  Rational total = 0;
  for (Vertex i = 1; i <= op.n(); ++i) total += exact_or_throw(diagonal_value(op, i));
  return total;
}

inline void finish(CharPoly& cp, const TensorOperator& op) {
  cp.poly = cp.poly.monic();
  cp.roots = polynomial_roots(cp.poly);
  Rational scale = rpow(Rational(static_cast<long long>(op.order() - 1)), static_cast<unsigned>(op.n() - 1));
  cp.trace.expected = scale * diagonal_sum(op);
  cp.trace.actual = root_sum(cp.poly);
}

}  // namespace detail

/// n = 1: the single equation t x^{m-1} = lambda x^{m-1} gives lambda - t.
inline CharPoly charpoly_single_vertex(const TensorOperator& op) {
  if (op.n() != 1) throw Error(ErrorCode::PreconditionFailed, "expected a one-vertex hypergraph");
  CharPoly cp{op.kind(), op.order(), 1, {}, {}, {}};
  Rational t = detail::exact_or_throw(diagonal_value(op, 1));
  cp.poly = Polynomial::linear_root(t);
  detail::finish(cp, op);
  return cp;
}

/// Binary-form coefficients of (T x^{m-1})_i: result[i][a] multiplies
/// x1^a x2^{m-1-a}.
inline std::vector<std::vector<Rational>> component_forms(const TensorOperator& op) {
  if (op.n() != 2) {
    throw Error(ErrorCode::DimensionNot2, "characteristic polynomial needs n = 2, got n = " + std::to_string(op.n()));
  }
  const std::size_t m = op.order();
  std::vector<std::vector<Rational>> forms(2, std::vector<Rational>(m, Rational(0)));
  EntryStream stream(op);
  while (auto entry = stream.next()) {
    std::size_t ones = 0;
    for (std::size_t p = 1; p < m; ++p) ones += entry->index[p] == 1;
    forms[entry->index[0] - 1][ones] += detail::exact_or_throw(entry->value);
  }
  return forms;
}

inline CharPoly charpoly_n2(const TensorOperator& op) {
  auto forms = component_forms(op);
  const std::size_t m = op.order();
  if (m < 2) throw Error(ErrorCode::OrderTooSmall, "characteristic polynomial needs order >= 2");
  const std::size_t d = m - 1;
  // Dehomogenize at x2 = 1 with t = x1; both forms keep formal degree d.
  auto sylvester_det = [&](const Rational& lambda) {
    std::vector<Rational> p = forms[0], q = forms[1];  // ascending in t
    p[d] -= lambda;
    q[0] -= lambda;
    std::vector<std::vector<Rational>> s(2 * d, std::vector<Rational>(2 * d, Rational(0)));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t k = 0; k <= d; ++k) {
        s[r][r + k] = p[d - k];
        s[d + r][r + k] = q[d - k];
      }
    return determinant(std::move(s));
  };
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k <= 2 * d; ++k) {
    xs.emplace_back(static_cast<long long>(k));
    ys.push_back(sylvester_det(xs.back()));
  }
  CharPoly cp{op.kind(), m, 2, interpolate(xs, ys), {}, {}};
  if (cp.poly.degree() != static_cast<long>(2 * d)) {
    throw Error(ErrorCode::PreconditionFailed, "resultant has unexpected degree " + std::to_string(cp.poly.degree()));
  }
  detail::finish(cp, op);
  return cp;
}

/// charpoly_n2 or charpoly_single_vertex by vertex count.
inline CharPoly charpoly(const TensorOperator& op) {
  return op.n() == 1 ? charpoly_single_vertex(op) : charpoly_n2(op);
}

struct CospectralityReport {
  CharPoly rw, sym;
  bool pass() const {
    // both monic, so proportional means equal
    return rw.poly == sym.poly;
  }
};

/// Compares the random-walk and symmetric normalized Laplacians exactly.
inline CospectralityReport cospectrality_check(const Hypergraph& h, std::size_t m) {
  return {charpoly_n2(TensorOperator(h, TensorKind::NormalizedLaplacianRW, m)),
          charpoly_n2(TensorOperator(h, TensorKind::NormalizedLaplacianSym, m))};
}

struct ShiftSpectrumReport {
  CharPoly adjacency, laplacian;  // normalized adjacency, random-walk Laplacian
  double max_mismatch = 0.0;      // largest |(1 - mu) - lambda| over matched roots
  bool multiplicities_match = true;
  bool pass(double tol = 1e-8) const { return multiplicities_match && max_mismatch <= tol; }
};

/// Checks that lambda -> 1 - lambda carries the normalized-adjacency roots
/// onto the normalized-Laplacian roots, multiplicities included.
inline ShiftSpectrumReport shift_spectrum_check(const Hypergraph& h, std::size_t m) {
  ShiftSpectrumReport rep{charpoly_n2(TensorOperator(h, TensorKind::NormalizedAdjacency, m)),
                          charpoly_n2(TensorOperator(h, TensorKind::NormalizedLaplacianRW, m)), 0.0, true};
  std::vector<bool> used(rep.laplacian.roots.size(), false);
  for (const Root& r : rep.adjacency.roots) {
    std::complex<double> target = 1.0 - r.value;
    std::size_t best = used.size();
    double best_dist = INFINITY;
    for (std::size_t k = 0; k < used.size(); ++k) {
      if (used[k]) continue;
      double dist = std::abs(rep.laplacian.roots[k].value - target);
      if (dist < best_dist) {
        best_dist = dist;
        best = k;
      }
    }
    if (best == used.size()) {
      rep.multiplicities_match = false;
      continue;
    }
    used[best] = true;
    rep.max_mismatch = std::max(rep.max_mismatch, best_dist);
    if (rep.laplacian.roots[best].multiplicity != r.multiplicity) rep.multiplicities_match = false;
  }
  for (bool u : used) rep.multiplicities_match = rep.multiplicities_match && u;
  return rep;
}

struct RealHPairs {
  std::vector<EigenPair> pairs;  // lambda ascending
  bool continuum = false;        // every (t, 1) solves the system
};

/// Every real H-eigenpair of a two-vertex operator: x = (1, 0) when the
/// second form has no x1^{m-1} term, and x = (t, 1) for each real root t of
/// p1(t) - p2(t) t^{m-1}, where p_i dehomogenizes form i at x2 = 1.
inline RealHPairs h_pairs_n2(const TensorOperator& op) {
  auto forms = component_forms(op);
  const std::size_t d = op.order() - 1;
  RealHPairs out;
  auto add = [&](double lambda, std::vector<double> x) {
    double scale = std::max(std::abs(x[0]), std::abs(x[1]));
    for (double& v : x) v /= scale;
    EigenPair p;
    p.lambda = lambda;
    p.x = std::move(x);
    p.type = EigenType::H;
    p.residual = h_residual(op, lambda, p.x);
    p.op_kind = op.kind();
    p.order = op.order();
    out.pairs.push_back(std::move(p));
  };
  if (forms[1][d] == 0) add(to_double(forms[0][d]), {1.0, 0.0});
  Polynomial p1(forms[0]), p2(forms[1]);
  std::vector<Rational> shift(d + 1, Rational(0));
  shift[d] = 1;
  Polynomial q = p1 - p2 * Polynomial(shift);
  if (q.is_zero()) {
    out.continuum = true;
  } else {
    for (const Root& r : polynomial_roots(q)) {
      if (r.value.imag() != 0.0) continue;
      const double t = r.value.real();
      long double lambda = 0.0L;
      for (std::size_t k = p2.coeffs().size(); k-- > 0;)
        lambda = lambda * t + p2.coeffs()[k].convert_to<long double>();
      add(static_cast<double>(lambda), {t, 1.0});
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const EigenPair& a, const EigenPair& b) { return a.lambda < b.lambda; });
  return out;
}

// ---------------------------------------------------------------------------
// dense reference tables

/// Every entry of an order-m, dimension-n hypermatrix, row-major in the
/// index tuple (first index most significant).
struct DenseTensor {
  std::size_t n = 0, m = 0;
  std::vector<EntryValue> values;

  std::size_t offset(std::span<const Vertex> index) const {
    std::size_t off = 0;
    for (Vertex v : index) off = off * n + (v - 1);
    return off;
  }
  const EntryValue& at(std::span<const Vertex> index) const { return values.at(offset(index)); }
};

namespace detail {

/// Number of maps from an m-set onto an s-set, by enumeration.
inline std::uint64_t count_onto(std::size_t m, std::size_t s) {
  std::vector<std::size_t> digits(m, 0);
  std::uint64_t count = 0;
  while (true) {
    std::vector<bool> hit(s, false);
    for (auto d : digits) hit[d] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) ++count;
    std::size_t p = m;
    while (p > 0 && ++digits[p - 1] == s) digits[--p] = 0;
    if (p == 0) break;
  }
  return count;
}

}  // namespace detail

/// Builds every entry from the definition by scanning all n^m tuples.
inline DenseTensor brute_entries(const TensorOperator& op) {
  const std::size_t n = op.n(), m = op.order();
  double total = std::pow(static_cast<double>(n), static_cast<double>(m));
  if (total > 1e6) {
    throw Error(ErrorCode::TooLarge, "n^m = " + std::to_string(static_cast<long long>(total)) + " exceeds 10^6");
  }
  const Hypergraph& h = op.hypergraph();
  std::vector<std::size_t> deg(n, 0);
  std::vector<bool> loop(n, false);
  for (const Edge& e : h.edges()) {
    for (Vertex v : e) ++deg[v - 1];
    if (e.size() == 1) loop[e[0] - 1] = true;
  }
  std::map<std::size_t, std::uint64_t> onto;
  DenseTensor t{n, m, std::vector<EntryValue>(static_cast<std::size_t>(total))};
  std::vector<Vertex> idx(m, 1);
  for (std::size_t off = 0; off < t.values.size(); ++off) {
    std::vector<Vertex> distinct = idx;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Rational a = 0;
    if (distinct.size() == 1) {
      a = loop[distinct[0] - 1] ? 1 : 0;
    } else if (std::binary_search(h.edges().begin(), h.edges().end(), Edge(distinct))) {
      std::size_t s = distinct.size();
      if (!onto.count(s)) onto[s] = detail::count_onto(m, s);
      a = Rational(BigInt(s), BigInt(onto[s]));
    }
    const Vertex i = idx[0];
    const Rational di(deg[i - 1]);
    const bool diag = distinct.size() == 1;
    EntryValue& out = t.values[off];
    switch (op.kind()) {
      case TensorKind::Adjacency: out.exact = a; break;
      case TensorKind::Laplacian: out.exact = diag ? Rational(di - a) : Rational(-a); break;
      case TensorKind::SignlessLaplacian: out.exact = diag ? Rational(di + a) : a; break;
      case TensorKind::NormalizedAdjacency: out.exact = a / di; break;
      case TensorKind::NormalizedLaplacianRW: out.exact = diag ? Rational(1 - a / di) : Rational(-a / di); break;
      case TensorKind::NormalizedLaplacianSym: {
        if (diag) {
          out.exact = 1 - a / di;
          break;
        }
        if (a == 0) {
          out.exact = Rational(0);
          break;
        }
        BigInt product = 1;
        double scale = 1.0;
        for (Vertex v : idx) {
          product *= deg[v - 1];
          scale *= std::pow(static_cast<double>(deg[v - 1]), -1.0 / static_cast<double>(m));
        }
        BigInt root;
        if (exact_root(product, static_cast<unsigned>(m), root)) out.exact = -a / Rational(root);
        else out.value = -to_double(a) * scale;
        break;
      }
    }
    if (out.exact) out.value = to_double(*out.exact);
    for (std::size_t p = m; p-- > 0;) {
      if (++idx[p] <= n) break;
      idx[p] = 1;
    }
  }
  return t;
}

}  // namespace hyperspec
