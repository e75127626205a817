#pragma once

// Hypergraph combinators: Cartesian product, spanning subhypergraphs,
// partition of the edges by cardinality, and regular fixture families.

#include "hyperspec/eigensolvers.hpp"
#include "hyperspec/hypergraph.hpp"
#include "hyperspec/hypermatrix.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace hyperspec {

/// (a, b) <-> (a - 1) * n2 + b, all ids 1-based.
struct ProductIndexMap {
  std::size_t n1 = 0, n2 = 0;

  Vertex id(Vertex a, Vertex b) const { return (a - 1) * n2 + b; }
  std::pair<Vertex, Vertex> factors(Vertex v) const { return {(v - 1) / n2 + 1, (v - 1) % n2 + 1}; }
  std::size_t size() const { return n1 * n2; }
};

struct Product {
  Hypergraph graph;
  ProductIndexMap map;
  std::optional<std::size_t> mce_g, mce_h;  // empty for an edgeless factor
  // Singleton edges {a} of G and {b} of H both produce {(a, b)}; the simple
  // product keeps one copy.  Nonzero count breaks degree additivity there.
  std::size_t merged_loops = 0;

  bool orders_match() const { return mce_g && mce_h && *mce_g == *mce_h; }
};

namespace detail {
inline std::optional<std::size_t> mce_or_none(const Hypergraph& h) {
  if (h.edges().empty()) return std::nullopt;
  return mce(h);
}
}  // namespace detail

/// Edges {a} x e for every vertex a of G and edge e of H, and e x {b} for
/// every edge e of G and vertex b of H.
inline Product cartesian_product(const Hypergraph& g, const Hypergraph& h) {
  ProductIndexMap map{g.n(), h.n()};
  std::vector<std::vector<Vertex>> edges;
  edges.reserve(g.n() * h.edge_count() + h.n() * g.edge_count());
  for (Vertex a = 1; a <= g.n(); ++a)
    for (const Edge& e : h.edges()) {
      std::vector<Vertex> vs;
      for (Vertex b : e) vs.push_back(map.id(a, b));
      edges.push_back(std::move(vs));
    }
  std::size_t merged = 0;
  for (const Edge& e : g.edges())
    for (Vertex b = 1; b <= h.n(); ++b) {
      if (e.size() == 1 && std::binary_search(h.edges().begin(), h.edges().end(), Edge({b}))) {
        ++merged;
        continue;
      }
      std::vector<Vertex> vs;
      for (Vertex a : e) vs.push_back(map.id(a, b));
      edges.push_back(std::move(vs));
    }
  return {Hypergraph(map.size(), std::move(edges)), map, detail::mce_or_none(g), detail::mce_or_none(h), merged};
}

/// Assembles (lambda + mu, u(a) v(b)) from H-eigenpairs of the factors'
/// adjacency hypermatrices and certifies it on the product's adjacency
/// hypermatrix.
inline EigenPair product_eigenpair(const EigenPair& pair_g, const EigenPair& pair_h, const Product& product) {
  if (!product.orders_match()) {
    throw Error(ErrorCode::OrderMismatch, "factors have different maximum edge cardinality");
  }
  for (const EigenPair* p : {&pair_g, &pair_h}) {
    if (p->type != EigenType::H || p->op_kind != TensorKind::Adjacency) {
      throw Error(ErrorCode::KindUnsupported, "product pairs need H-eigenpairs of adjacency hypermatrices");
    }
    if (p->order != *product.mce_g) {
      throw Error(ErrorCode::OrderMismatch, "pair order differs from the factors' maximum edge cardinality");
    }
  }
  const auto& map = product.map;
  if (pair_g.x.size() != map.n1 || pair_h.x.size() != map.n2) {
    throw Error(ErrorCode::DimensionMismatch, "eigenvector lengths do not match the factors");
  }
  EigenPair w;
  w.type = EigenType::H;
  w.op_kind = TensorKind::Adjacency;
  w.order = pair_g.order;
  w.lambda = pair_g.lambda + pair_h.lambda;
  w.x.resize(map.size());
  for (Vertex a = 1; a <= map.n1; ++a)
    for (Vertex b = 1; b <= map.n2; ++b) w.x[map.id(a, b) - 1] = pair_g.x[a - 1] * pair_h.x[b - 1];
  TensorOperator op(product.graph, TensorKind::Adjacency, w.order);
  w.residual = h_residual(op, w.lambda, w.x);
  return w;
}

struct SpanningSub {
  Hypergraph graph;
  bool mce_preserved = false;
};

/// Same vertices, the edges at the given 0-based positions of g.edges().
inline SpanningSub spanning_sub(const Hypergraph& g, const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw Error(ErrorCode::PreconditionFailed, "spanning subhypergraph needs at least one edge");
  std::vector<std::vector<Vertex>> edges;
  for (std::size_t k : keep) {
    if (k >= g.edge_count()) {
      throw Error(ErrorCode::PreconditionFailed, "edge position " + std::to_string(k) + " out of range");
    }
    const Edge& e = g.edges()[k];
    edges.emplace_back(e.begin(), e.end());
  }
  Hypergraph sub(g.n(), std::move(edges));  // repeated positions surface as DuplicateEdge
  bool preserved = mce(sub) == mce(g);
  return {std::move(sub), preserved};
}

/// (i, G_i) for each cardinality i present, G_i holding the cardinality-i
/// edges on all of V.
inline std::vector<std::pair<std::size_t, Hypergraph>> cardinality_partition(const Hypergraph& g) {
  std::map<std::size_t, std::vector<std::vector<Vertex>>> parts;
  for (const Edge& e : g.edges()) parts[e.size()].emplace_back(e.begin(), e.end());
  std::vector<std::pair<std::size_t, Hypergraph>> out;
  for (auto& [s, edges] : parts) out.emplace_back(s, Hypergraph(g.n(), std::move(edges)));
  return out;
}

struct CompleteGraphPlusFullEdge {};
struct Cyclic {
  std::size_t s = 0;
};
using RegularSpec = std::variant<CompleteGraphPlusFullEdge, Cyclic>;

/// complete_graph_plus_full_edge: all pairs plus V itself, (n-1)+1 = n
/// regular.  cyclic(s): the n windows {i, i+1, ..., i+s-1} mod n,
/// s-regular and s-uniform.
inline Hypergraph regular_family(std::size_t n, const RegularSpec& spec) {
  std::vector<std::vector<Vertex>> edges;
  if (std::holds_alternative<CompleteGraphPlusFullEdge>(spec)) {
    if (n < 3) throw Error(ErrorCode::InfeasibleSpec, "complete graph plus full edge needs n >= 3");
    for (Vertex a = 1; a <= n; ++a)
      for (Vertex b = a + 1; b <= n; ++b) edges.push_back({a, b});
    std::vector<Vertex> all(n);
    std::iota(all.begin(), all.end(), Vertex{1});
    edges.push_back(std::move(all));
  } else {
    std::size_t s = std::get<Cyclic>(spec).s;
    if (s < 2 || s >= n) {
      throw Error(ErrorCode::InfeasibleSpec, "cyclic windows need 2 <= s < n, got s = " + std::to_string(s) +
                                                 ", n = " + std::to_string(n));
    }
    for (Vertex i = 0; i < n; ++i) {
      std::vector<Vertex> e;
      for (std::size_t k = 0; k < s; ++k) e.push_back((i + k) % n + 1);
      edges.push_back(std::move(e));
    }
  }
  Hypergraph h(n, std::move(edges));
  if (!degrees(h).is_regular) throw Error(ErrorCode::InfeasibleSpec, "generated hypergraph is not regular");
  return h;
}

}  // namespace hyperspec
