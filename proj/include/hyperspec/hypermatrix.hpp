#pragma once

// Virtual symmetric connectivity hypermatrices of a general hypergraph.
//
// An edge e of cardinality s <= m is represented at order m by every index
// tuple over e that uses each vertex of e at least once; there are
// alpha(m, s) such tuples and each carries s / alpha(m, s).  Nothing here
// stores the n^m array: entries are streamed on demand and contractions are
// evaluated edge by edge with the inclusion-exclusion identity
//
//   sum over tuples covering S of prod x = sum_{T subset S} (-1)^|T| (sigma(e) - sigma(T))^p
//
// where sigma(.) sums x over a vertex set.

#include "hyperspec/error.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hyperspec {

enum class TensorKind {
  Adjacency,
  Laplacian,
  SignlessLaplacian,
  NormalizedLaplacianRW,   // row-scaled by 1/d(v_{p1}); diagonal I-part
  NormalizedLaplacianSym,  // scaled by prod_j d(v_{p_j})^{-1/m}; symmetric
  NormalizedAdjacency,     // I minus NormalizedLaplacianRW; stochastic
};

inline constexpr TensorKind all_kinds[] = {
    TensorKind::Adjacency,          TensorKind::Laplacian,
    TensorKind::SignlessLaplacian,  TensorKind::NormalizedLaplacianRW,
    TensorKind::NormalizedLaplacianSym, TensorKind::NormalizedAdjacency};

inline std::string_view to_string(TensorKind kind) {
  switch (kind) {
    case TensorKind::Adjacency: return "adjacency";
    case TensorKind::Laplacian: return "laplacian";
    case TensorKind::SignlessLaplacian: return "signless";
    case TensorKind::NormalizedLaplacianRW: return "normalized-rw";
    case TensorKind::NormalizedLaplacianSym: return "normalized-sym";
    case TensorKind::NormalizedAdjacency: return "normalized-adjacency";
  }
  return "?";
}

inline std::optional<TensorKind> kind_from_name(std::string_view name) {
  for (TensorKind k : all_kinds)
    if (to_string(k) == name) return k;
  return std::nullopt;
}

inline bool is_normalized(TensorKind kind) {
  return kind == TensorKind::NormalizedLaplacianRW || kind == TensorKind::NormalizedLaplacianSym ||
         kind == TensorKind::NormalizedAdjacency;
}

inline bool is_symmetric(TensorKind kind) {
  return kind != TensorKind::NormalizedLaplacianRW && kind != TensorKind::NormalizedAdjacency;
}

inline bool is_nonnegative(TensorKind kind) {
  return kind == TensorKind::Adjacency || kind == TensorKind::SignlessLaplacian ||
         kind == TensorKind::NormalizedAdjacency;
}

/// Number of length-m tuples over an s-set that use every element:
/// sum_j (-1)^j C(s, j) (s - j)^m.
inline BigInt alpha(std::size_t m, std::size_t s) {
  if (s < 1) throw Error(ErrorCode::EmptyEdge, "alpha of an empty edge");
  if (s > m) {
    throw Error(ErrorCode::OrderTooSmall,
                "order " + std::to_string(m) + " below edge cardinality " + std::to_string(s));
  }
  BigInt total = 0;
  for (std::size_t j = 0; j <= s; ++j) {
    BigInt term = binomial(static_cast<unsigned>(s), static_cast<unsigned>(j)) *
                  ipow(BigInt(s - j), static_cast<unsigned>(m));
    if (j % 2) total -= term;
    else total += term;
  }
  return total;
}

/// A coefficient that is exact when rational (every kind except, in general,
/// NormalizedLaplacianSym) and always available as a double.
struct EntryValue {
  std::optional<Rational> exact;
  double value = 0.0;
};

struct Entry {
  std::vector<Vertex> index;  // 1-based, length m
  EntryValue value;
};

inline constexpr std::uint64_t default_entry_cap = 10'000'000;

class TensorOperator {
 public:
  /// order defaults to mce(h).  Normalized kinds refuse isolated vertices.
  TensorOperator(Hypergraph h, TensorKind kind, std::optional<std::size_t> order = std::nullopt)
      : graph_(std::move(h)), kind_(kind) {
    if (order) {
      m_ = *order;
      if (!graph_.edges().empty() && m_ < mce(graph_)) {
        throw Error(ErrorCode::OrderTooSmall, "order " + std::to_string(m_) +
                                                  " below maximum edge cardinality " +
                                                  std::to_string(mce(graph_)));
      }
    } else {
      m_ = mce(graph_);
    }
    if (m_ < 1) throw Error(ErrorCode::OrderTooSmall, "order must be at least 1");
    degree_ = hyperspec::degrees(graph_).degrees;
    if (is_normalized(kind_)) {
      for (std::size_t i = 0; i < degree_.size(); ++i) {
        if (degree_[i] == 0) {
          throw Error(ErrorCode::IsolatedVertex,
                      "vertex " + std::to_string(i + 1) + " is isolated; " + std::string(to_string(kind_)) +
                          " needs every degree >= 1");
        }
      }
    }
    singleton_.assign(graph_.n(), false);
    incident_.resize(graph_.n());
    for (std::size_t k = 0; k < graph_.edges().size(); ++k) {
      const Edge& e = graph_.edges()[k];
      if (e.size() == 1) singleton_[e[0] - 1] = true;
      for (Vertex v : e) incident_[v - 1].push_back(k);
      std::size_t s = e.size();
      if (!alpha_cache_.count(s)) alpha_cache_.emplace(s, hyperspec::alpha(m_, s));
      Rational w(BigInt(s), alpha_cache_.at(s));
      weight_.push_back(w);
      weight_d_.push_back(static_cast<long double>(to_double(w)));
    }
    root_inv_deg_.resize(graph_.n());
    for (std::size_t i = 0; i < graph_.n(); ++i)
      root_inv_deg_[i] = degree_[i] ? std::pow(static_cast<long double>(degree_[i]), -1.0L / m_) : 0.0L;
  }

  const Hypergraph& hypergraph() const noexcept { return graph_; }
  TensorKind kind() const noexcept { return kind_; }
  std::size_t order() const noexcept { return m_; }
  std::size_t n() const noexcept { return graph_.n(); }
  std::size_t degree(Vertex v) const { return degree_.at(v - 1); }
  const std::vector<std::size_t>& degrees() const noexcept { return degree_; }
  const BigInt& alpha(std::size_t s) const { return alpha_cache_.at(s); }
  bool has_singleton(Vertex v) const { return singleton_.at(v - 1); }
  const std::vector<std::size_t>& incident(Vertex v) const { return incident_.at(v - 1); }

  /// s / alpha(m, s) for edge index k.
  const Rational& edge_weight(std::size_t k) const { return weight_.at(k); }
  long double edge_weight_ld(std::size_t k) const { return weight_d_.at(k); }
  /// d(v)^{-1/m}, the NormalizedLaplacianSym scaling.
  long double root_inv_degree(Vertex v) const { return root_inv_deg_.at(v - 1); }

 private:
  Hypergraph graph_;
  TensorKind kind_;
  std::size_t m_ = 0;
  std::vector<std::size_t> degree_;
  std::vector<bool> singleton_;
  std::vector<std::vector<std::size_t>> incident_;
  std::map<std::size_t, BigInt> alpha_cache_;
  std::vector<Rational> weight_;
  std::vector<long double> weight_d_;
  std::vector<long double> root_inv_deg_;
};

// ---------------------------------------------------------------------------
// coefficients

namespace detail {

inline std::size_t edge_index(const TensorOperator& op, const Edge& e) {
  const auto& edges = op.hypergraph().edges();
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) {
    throw Error(ErrorCode::PreconditionFailed, "edge {" + Hypergraph::edge_text(e) + "} is not in the hypergraph");
  }
  return static_cast<std::size_t>(it - edges.begin());
}

inline int kind_sign(TensorKind kind) {
  return (kind == TensorKind::Adjacency || kind == TensorKind::SignlessLaplacian ||
          kind == TensorKind::NormalizedAdjacency)
             ? 1
             : -1;
}

}  // namespace detail

/// Signed s / alpha(m, s) of an edge before any degree scaling: positive for
/// Adjacency, SignlessLaplacian and NormalizedAdjacency, negative otherwise.
/// For Adjacency, Laplacian and SignlessLaplacian this is the value of every
/// off-diagonal entry the edge generates.
inline Rational entry_coefficient(const TensorOperator& op, const Edge& e) {
  Rational w = op.edge_weight(detail::edge_index(op, e));
  return detail::kind_sign(op.kind()) > 0 ? w : Rational(-w);
}

/// Value of the entry at `index`, a surjective tuple over the edge `e`
/// (|e| >= 2).  Exact unless the NormalizedLaplacianSym scaling is irrational.
inline EntryValue entry_value(const TensorOperator& op, const Edge& e, std::span<const Vertex> index) {
  Rational c = entry_coefficient(op, e);
  switch (op.kind()) {
    case TensorKind::Adjacency:
    case TensorKind::Laplacian:
    case TensorKind::SignlessLaplacian:
      return {c, to_double(c)};
    case TensorKind::NormalizedLaplacianRW:
    case TensorKind::NormalizedAdjacency: {
      Rational v = c / Rational(op.degree(index.front()));
      return {v, to_double(v)};
    }
    case TensorKind::NormalizedLaplacianSym: {
      BigInt product = 1;
      long double scale = 1.0L;
      for (Vertex v : index) {
        product *= op.degree(v);
        scale *= op.root_inv_degree(v);
      }
      EntryValue out;
      out.value = static_cast<double>(static_cast<long double>(to_double(c)) * scale);
      BigInt root;
      if (exact_root(product, static_cast<unsigned>(op.order()), root)) {
        out.exact = c / Rational(root);
        out.value = to_double(*out.exact);
      }
      return out;
    }
  }
  return {};
}

/// The entry at (i, i, ..., i), including any singleton-edge contribution.
inline EntryValue diagonal_value(const TensorOperator& op, Vertex i) {
  Rational single = op.has_singleton(i) ? Rational(1) : Rational(0);  // s/alpha(m,1) = 1
  Rational d(op.degree(i));
  Rational v;
  switch (op.kind()) {
    case TensorKind::Adjacency: v = single; break;
    case TensorKind::Laplacian: v = d - single; break;
    case TensorKind::SignlessLaplacian: v = d + single; break;
    case TensorKind::NormalizedLaplacianRW:
    case TensorKind::NormalizedLaplacianSym: v = 1 - single / d; break;
    case TensorKind::NormalizedAdjacency: v = single / d; break;
  }
  return {v, to_double(v)};
}

// ---------------------------------------------------------------------------
// entry stream

/// Number of nonzero entries: alpha(m, s) per edge with s >= 2 plus the
/// nonzero diagonal.
inline BigInt count_nonzeros(const TensorOperator& op) {
  BigInt total = 0;
  for (const Edge& e : op.hypergraph().edges())
    if (e.size() >= 2) total += op.alpha(e.size());
  for (Vertex i = 1; i <= op.n(); ++i)
    if (diagonal_value(op, i).value != 0.0) ++total;
  return total;
}

/// Lazily yields every nonzero entry exactly once: diagonal entries first in
/// vertex order, then each edge's surjective tuples in lexicographic order.
class EntryStream {
 public:
  EntryStream(const TensorOperator& op, std::uint64_t cap = default_entry_cap) : op_(&op) {
    BigInt count = count_nonzeros(op);
    if (count > cap) {
      throw Error(ErrorCode::CapExceeded,
                  count.str() + " nonzero entries exceed the cap of " + std::to_string(cap));
    }
    total_ = count.convert_to<std::uint64_t>();
  }

  std::uint64_t size() const noexcept { return total_; }

  std::optional<Entry> next() {
    const std::size_t m = op_->order();
    while (diag_ < op_->n()) {
      Vertex i = ++diag_;
      EntryValue v = diagonal_value(*op_, i);
      if (v.value != 0.0) return Entry{std::vector<Vertex>(m, i), std::move(v)};
    }
    const auto& edges = op_->hypergraph().edges();
    while (edge_ < edges.size()) {
      const Edge& e = edges[edge_];
      if (e.size() < 2) {
        ++edge_;
        continue;
      }
      if (!started_) {
        digits_.assign(m, 0);
        started_ = true;
      } else if (!advance(e.size())) {
        ++edge_;
        started_ = false;
        continue;
      }
      // skip until surjective
      while (!covers(e.size())) {
        if (!advance(e.size())) break;
      }
      if (!covers(e.size())) {
        ++edge_;
        started_ = false;
        continue;
      }
      std::vector<Vertex> index(m);
      for (std::size_t p = 0; p < m; ++p) index[p] = e[digits_[p]];
      EntryValue v = entry_value(*op_, e, index);
      return Entry{std::move(index), std::move(v)};
    }
    return std::nullopt;
  }

 private:
  bool advance(std::size_t s) {
    for (std::size_t p = digits_.size(); p-- > 0;) {
      if (++digits_[p] < s) return true;
      digits_[p] = 0;
    }
    return false;
  }

  bool covers(std::size_t s) const {
    std::uint64_t seen = 0;
    for (auto d : digits_) seen |= std::uint64_t{1} << d;
    return seen == ((s >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << s) - 1));
  }

  const TensorOperator* op_;
  std::uint64_t total_ = 0;
  Vertex diag_ = 0;
  std::size_t edge_ = 0;
  bool started_ = false;
  std::vector<std::size_t> digits_;
};

/// "i1 i2 ... im value", value as a decimal or, with exact = true, "p/q".
inline std::string format_entry(const Entry& entry, bool exact) {
  std::string line;
  for (Vertex v : entry.index) line += std::to_string(v) + ' ';
  if (exact) {
    if (!entry.value.exact) throw Error(ErrorCode::IrrationalEntries, "entry has no exact rational value");
    line += to_string(*entry.value.exact);
  } else {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", entry.value.value);
    line += buf;
  }
  return line;
}

// ---------------------------------------------------------------------------
// contractions

namespace detail {

/// For every edge: subset sums of y over the edge's vertices.
inline void subset_sums(const Edge& e, std::span<const long double> y, std::vector<long double>& sums) {
  const std::size_t s = e.size();
  sums.assign(std::size_t{1} << s, 0.0L);
  for (std::size_t mask = 1; mask < sums.size(); ++mask) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    sums[mask] = sums[mask & (mask - 1)] + y[e[low] - 1];
  }
}

inline long double ipow_ld(long double base, std::size_t exp) {
  long double r = 1.0L;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

/// Sum over length-p tuples from e that cover e minus the vertex at position
/// `skip` (skip = s covers all of e).
inline long double covering_sum(const std::vector<long double>& sums, std::size_t s, std::size_t skip, std::size_t p) {
  const std::size_t full = sums.size() - 1;
  long double total = 0.0L;
  for (std::size_t mask = 0; mask <= full; ++mask) {
    if (skip < s && (mask >> skip & 1)) continue;
    long double term = ipow_ld(sums[full] - sums[mask], p);
    total += (__builtin_popcountll(mask) % 2) ? -term : term;
  }
  return total;
}

inline void check_dim(const TensorOperator& op, std::size_t size) {
  if (size != op.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(size) + " for dimension " + std::to_string(op.n()));
  }
}

/// z_i = sum_{e containing i} w_e * y^{e/i}_{m-1}, singletons included
/// (their term is y_i^{m-1}).
inline std::vector<long double> adjacency_core(const TensorOperator& op, std::span<const long double> y) {
  const std::size_t m = op.order();
  std::vector<long double> z(op.n(), 0.0L);
  std::vector<long double> sums;
  const auto& edges = op.hypergraph().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    subset_sums(e, y, sums);
    for (std::size_t pos = 0; pos < e.size(); ++pos)
      z[e[pos] - 1] += op.edge_weight_ld(k) * covering_sum(sums, e.size(), pos, m - 1);
  }
  return z;
}

}  // namespace detail

/// T x^{m-1}: the i-th component is sum over (i2..im) of t_{i i2 .. im} x_i2 .. x_im.
/// Call it qualified when passing a std::vector; otherwise argument-dependent
/// lookup also finds std::apply.
inline std::vector<double> apply(const TensorOperator& op, std::span<const double> x) {
  detail::check_dim(op, x.size());
  const std::size_t n = op.n(), m = op.order();
  std::vector<long double> xl(x.begin(), x.end());
  std::vector<long double> out(n);
  if (op.kind() == TensorKind::NormalizedLaplacianSym) {
    std::vector<long double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = xl[i] * op.root_inv_degree(i + 1);
    auto z = detail::adjacency_core(op, y);
    for (std::size_t i = 0; i < n; ++i)
      out[i] = detail::ipow_ld(xl[i], m - 1) - op.root_inv_degree(i + 1) * z[i];
  } else {
    auto z = detail::adjacency_core(op, xl);
    for (std::size_t i = 0; i < n; ++i) {
      long double d = static_cast<long double>(op.degree(i + 1));
      long double p = detail::ipow_ld(xl[i], m - 1);
      switch (op.kind()) {
        case TensorKind::Adjacency: out[i] = z[i]; break;
        case TensorKind::Laplacian: out[i] = d * p - z[i]; break;
        case TensorKind::SignlessLaplacian: out[i] = d * p + z[i]; break;
        case TensorKind::NormalizedLaplacianRW: out[i] = p - z[i] / d; break;
        case TensorKind::NormalizedAdjacency: out[i] = z[i] / d; break;
        case TensorKind::NormalizedLaplacianSym: break;
      }
    }
  }
  return {out.begin(), out.end()};
}

/// F_T(x) = sum over all index tuples of t_{i1..im} x_i1 .. x_im, evaluated
/// per edge through x^e_m; equals x . (T x^{m-1}).
inline double quadratic_form(const TensorOperator& op, std::span<const double> x) {
  detail::check_dim(op, x.size());
  const std::size_t n = op.n(), m = op.order();
  const auto& edges = op.hypergraph().edges();
  std::vector<long double> xl(x.begin(), x.end());
  long double power_sum = 0.0L, degree_sum = 0.0L;
  for (std::size_t i = 0; i < n; ++i) {
    long double p = detail::ipow_ld(xl[i], m);
    power_sum += p;
    degree_sum += static_cast<long double>(op.degree(i + 1)) * p;
  }
  std::vector<long double> sums;
  long double edge_part = 0.0L;
  switch (op.kind()) {
    case TensorKind::Adjacency:
    case TensorKind::Laplacian:
    case TensorKind::SignlessLaplacian:
    case TensorKind::NormalizedLaplacianSym: {
      std::vector<long double> y = xl;
      if (op.kind() == TensorKind::NormalizedLaplacianSym)
        for (std::size_t i = 0; i < n; ++i) y[i] *= op.root_inv_degree(i + 1);
      for (std::size_t k = 0; k < edges.size(); ++k) {
        detail::subset_sums(edges[k], y, sums);
        edge_part += op.edge_weight_ld(k) * detail::covering_sum(sums, edges[k].size(), edges[k].size(), m);
      }
      break;
    }
    case TensorKind::NormalizedLaplacianRW:
    case TensorKind::NormalizedAdjacency: {
      // entries depend on the first index, so expand by the leading vertex
      for (std::size_t k = 0; k < edges.size(); ++k) {
        const Edge& e = edges[k];
        detail::subset_sums(e, xl, sums);
        for (std::size_t pos = 0; pos < e.size(); ++pos) {
          long double lead = xl[e[pos] - 1] / static_cast<long double>(op.degree(e[pos]));
          edge_part += op.edge_weight_ld(k) * lead * detail::covering_sum(sums, e.size(), pos, m - 1);
        }
      }
      break;
    }
  }
  long double total = 0.0L;
  switch (op.kind()) {
    case TensorKind::Adjacency: total = edge_part; break;
    case TensorKind::Laplacian: total = degree_sum - edge_part; break;
    case TensorKind::SignlessLaplacian: total = degree_sum + edge_part; break;
    case TensorKind::NormalizedLaplacianRW:
    case TensorKind::NormalizedLaplacianSym: total = power_sum - edge_part; break;
    case TensorKind::NormalizedAdjacency: total = edge_part; break;
  }
  return static_cast<double>(total);
}

/// Per-edge Laplacian form L(e)x^m = sum_{v in e} x_v^m - (s/alpha) x^e_m.
inline double edge_laplacian_form(const TensorOperator& op, std::size_t edge_idx, std::span<const double> x) {
  detail::check_dim(op, x.size());
  const Edge& e = op.hypergraph().edges().at(edge_idx);
  std::vector<long double> xl(x.begin(), x.end()), sums;
  detail::subset_sums(e, xl, sums);
  long double total = 0.0L;
  for (Vertex v : e) total += detail::ipow_ld(xl[v - 1], op.order());
  total -= op.edge_weight_ld(edge_idx) * detail::covering_sum(sums, e.size(), e.size(), op.order());
  return static_cast<double>(total);
}

/// Row sums sum_{i2..im} t_{i i2 .. im}, exactly.  Every surjective tuple
/// over e with a fixed first vertex is one of alpha(m, s) / s.
inline std::vector<Rational> row_sums_exact(const TensorOperator& op) {
  std::vector<Rational> rows(op.n());
  for (Vertex i = 1; i <= op.n(); ++i) rows[i - 1] = *diagonal_value(op, i).exact;
  if (op.kind() == TensorKind::NormalizedLaplacianSym) {
    EntryStream stream(op);
    for (auto& r : rows) r = 0;
    while (auto entry = stream.next()) {
      if (!entry->value.exact) {
        throw Error(ErrorCode::IrrationalEntries, "normalized-sym row sums are irrational for unequal degrees");
      }
      rows[entry->index.front() - 1] += *entry->value.exact;
    }
    return rows;
  }
  const auto& edges = op.hypergraph().edges();
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    if (e.size() < 2) continue;
    Rational per_row = op.alpha(e.size()) / BigInt(e.size());
    Rational c = entry_coefficient(op, e) * per_row;
    for (Vertex v : e) {
      Rational value = c;
      if (op.kind() == TensorKind::NormalizedLaplacianRW || op.kind() == TensorKind::NormalizedAdjacency)
        value /= op.degree(v);
      rows[v - 1] += value;
    }
  }
  return rows;
}

inline std::vector<double> row_sums(const TensorOperator& op) {
  if (op.kind() == TensorKind::NormalizedLaplacianSym) {
    std::vector<double> ones(op.n(), 1.0);
    return hyperspec::apply(op, ones);
  }
  std::vector<double> out;
  for (const auto& r : row_sums_exact(op)) out.push_back(to_double(r));
  return out;
}

/// Gershgorin data per row: diagonal entry and the sum of absolute values of
/// the off-diagonal entries in that row.
struct GershgorinDisk {
  double center = 0.0;
  double radius = 0.0;
};

inline std::vector<GershgorinDisk> gershgorin_disks(const TensorOperator& op) {
  const std::size_t n = op.n(), m = op.order();
  std::vector<GershgorinDisk> disks(n);
  for (Vertex i = 1; i <= n; ++i) disks[i - 1].center = diagonal_value(op, i).value;
  const auto& edges = op.hypergraph().edges();
  if (op.kind() == TensorKind::NormalizedLaplacianSym) {
    std::vector<long double> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = op.root_inv_degree(i + 1);
    std::vector<long double> sums;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      const Edge& e = edges[k];
      if (e.size() < 2) continue;
      detail::subset_sums(e, c, sums);
      for (std::size_t pos = 0; pos < e.size(); ++pos) {
        long double row = op.edge_weight_ld(k) * c[e[pos] - 1] * detail::covering_sum(sums, e.size(), pos, m - 1);
        disks[e[pos] - 1].radius += static_cast<double>(row);
      }
    }
    return disks;
  }
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const Edge& e = edges[k];
    if (e.size() < 2) continue;
    // |coefficient| times alpha/s tuples per row
    double per_row = 1.0;  // (s/alpha) * (alpha/s)
    for (Vertex v : e) {
      double value = per_row;
      if (op.kind() == TensorKind::NormalizedLaplacianRW || op.kind() == TensorKind::NormalizedAdjacency)
        value /= static_cast<double>(op.degree(v));
      disks[v - 1].radius += value;
    }
  }
  return disks;
}

/// max_i sum over the row of |t_{i i2 .. im}|.
inline double max_abs_row_sum(const TensorOperator& op) {
  double best = 0.0;
  for (const auto& d : gershgorin_disks(op)) best = std::max(best, std::abs(d.center) + d.radius);
  return best;
}

}  // namespace hyperspec
