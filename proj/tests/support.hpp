#pragma once

// Fixture generators shared by the test binaries.

#include "hyperspec/hyperspec.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

namespace hyperspec::fixtures {

/// Random hypergraph on n vertices with up to `edges` distinct edges of
/// cardinality 1..max_card.  With cover = true every vertex lies in some edge.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, std::size_t n, std::size_t max_card, std::size_t edges,
                                    bool cover = false, bool singletons = true) {
  max_card = std::min(max_card, n);
  std::set<std::vector<Vertex>> chosen;
  std::uniform_int_distribution<std::size_t> card(singletons ? 1 : std::min<std::size_t>(2, max_card), max_card);
  std::vector<Vertex> all(n);
  for (std::size_t i = 0; i < n; ++i) all[i] = i + 1;
  for (std::size_t tries = 0; chosen.size() < edges && tries < 20 * edges + 20; ++tries) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Vertex> e(all.begin(), all.begin() + static_cast<long>(card(rng)));
    std::sort(e.begin(), e.end());
    chosen.insert(e);
  }
  if (cover) {
    std::vector<bool> hit(n, false);
    for (const auto& e : chosen)
      for (Vertex v : e) hit[v - 1] = true;
    for (Vertex v = 1; v <= n; ++v) {
      if (hit[v - 1]) continue;
      std::vector<Vertex> e{v};
      if (n > 1 && (!singletons || chosen.count(e))) e.push_back(v % n + 1);
      std::sort(e.begin(), e.end());
      chosen.insert(e);
      for (Vertex u : e) hit[u - 1] = true;
    }
  }
  if (chosen.empty()) chosen.insert({1});
  return Hypergraph(n, {chosen.begin(), chosen.end()});
}

inline std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<double> x(n);
  for (double& v : x) v = u(rng);
  return x;
}

/// T x^{m-1} by summing over every dense entry.
inline std::vector<double> dense_apply(const DenseTensor& t, const std::vector<double>& x) {
  std::vector<long double> y(t.n, 0.0L);
  std::vector<Vertex> idx(t.m, 1);
  for (std::size_t off = 0; off < t.values.size(); ++off) {
    long double term = t.values[off].value;
    if (term != 0.0L) {
      for (std::size_t p = 1; p < t.m; ++p) term *= x[idx[p] - 1];
      y[idx[0] - 1] += term;
    }
    for (std::size_t p = t.m; p-- > 0;) {
      if (++idx[p] <= t.n) break;
      idx[p] = 1;
    }
  }
  return {y.begin(), y.end()};
}

inline Hypergraph example_hypergraph() { return Hypergraph(5, {{1}, {2, 3}, {1, 4, 5}}); }

}  // namespace hyperspec::fixtures
