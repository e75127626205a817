#include "support.hpp"

#include <gtest/gtest.h>

using namespace hyperspec;

TEST(Product, EdgeTimesTriangle) {
  auto p = cartesian_product(Hypergraph(2, {{1, 2}}), Hypergraph(3, {{1, 2, 3}}));
  EXPECT_EQ(p.graph.n(), 6u);
  ASSERT_EQ(p.graph.edge_count(), 5u);
  std::size_t pairs = 0, triples = 0;
  for (const auto& e : p.graph.edges()) (e.size() == 2 ? pairs : triples) += 1;
  EXPECT_EQ(pairs, 3u);
  EXPECT_EQ(triples, 2u);
  EXPECT_FALSE(p.orders_match());
  EXPECT_EQ(p.merged_loops, 0u);
}

TEST(Product, EdgelessFactor) {
  Hypergraph g(3, {{1, 2}, {2, 3}});
  auto p = cartesian_product(g, Hypergraph(2, {}));
  EXPECT_EQ(p.graph.n(), 6u);
  EXPECT_EQ(p.graph.edge_count(), 2 * g.edge_count());
  EXPECT_FALSE(p.mce_h.has_value());
}

TEST(Product, IndexMapIsRowMajorBijection) {
  ProductIndexMap map{3, 4};
  std::vector<bool> seen(map.size() + 1, false);
  for (Vertex a = 1; a <= 3; ++a)
    for (Vertex b = 1; b <= 4; ++b) {
      Vertex v = map.id(a, b);
      ASSERT_GE(v, 1u);
      ASSERT_LE(v, map.size());
      EXPECT_FALSE(seen[v]);
      seen[v] = true;
      EXPECT_EQ(map.factors(v), std::make_pair(a, b));
    }
  EXPECT_EQ(map.id(2, 1), 5u);
}

TEST(Product, CountsAndDegreesProperty) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    bool loops = trial % 2 == 0;
    auto g = fixtures::random_hypergraph(rng, 1 + rng() % 4, 3, rng() % 4, false, loops);
    auto h = fixtures::random_hypergraph(rng, 1 + rng() % 4, 3, rng() % 4, false, !loops);
    auto p = cartesian_product(g, h);
    EXPECT_EQ(p.graph.n(), g.n() * h.n());
    EXPECT_EQ(p.graph.edge_count() + p.merged_loops, g.n() * h.edge_count() + h.n() * g.edge_count());
    if (p.merged_loops != 0) continue;
    auto dg = degrees(g).degrees, dh = degrees(h).degrees, dp = degrees(p.graph).degrees;
    for (Vertex a = 1; a <= g.n(); ++a)
      for (Vertex b = 1; b <= h.n(); ++b) EXPECT_EQ(dp[p.map.id(a, b) - 1], dg[a - 1] + dh[b - 1]);
  }
}

TEST(Product, SharedLoopsMerge) {
  auto p = cartesian_product(Hypergraph(1, {{1}}), Hypergraph(1, {{1}}));
  EXPECT_EQ(p.graph.edge_count(), 1u);
  EXPECT_EQ(p.merged_loops, 1u);
}

TEST(ProductPair, RegularFactors) {
  auto g = regular_family(3, CompleteGraphPlusFullEdge{});
  auto prod = cartesian_product(g, g);
  TensorOperator op(g, TensorKind::Adjacency);
  auto pair = h_power(op, SolverConfig{});
  auto w = product_eigenpair(pair, pair, prod);
  EXPECT_NEAR(w.lambda, 6.0, 1e-9);
  for (double v : w.x) EXPECT_NEAR(v, 1.0, 1e-9);
  EXPECT_LE(w.residual, 1e-9);
}

TEST(ProductPair, AdditivityProperty) {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 60 && checked < 20; ++trial) {
    auto g = fixtures::random_hypergraph(rng, 2 + rng() % 3, 3, 1 + rng() % 4, true, false);
    auto h = fixtures::random_hypergraph(rng, 2 + rng() % 3, 3, 1 + rng() % 4, true, false);
    if (mce(g) != mce(h)) continue;
    SolverConfig cfg;
    cfg.perturbation = 1e-12;
    auto pg = h_power(TensorOperator(g, TensorKind::Adjacency), cfg);
    auto ph = h_power(TensorOperator(h, TensorKind::Adjacency), cfg);
    auto prod = cartesian_product(g, h);
    auto w = product_eigenpair(pg, ph, prod);
    EXPECT_LE(w.residual, 1e-8) << serialize(g, Format::Lines) << "x\n" << serialize(h, Format::Lines);
    ++checked;
  }
  EXPECT_GE(checked, 10);
}

TEST(ProductPair, Guards) {
  auto g = regular_family(3, CompleteGraphPlusFullEdge{});
  auto pair = h_power(TensorOperator(g, TensorKind::Adjacency), SolverConfig{});
  auto mismatch = cartesian_product(g, Hypergraph(2, {{1, 2}}));
  EXPECT_THROW(product_eigenpair(pair, pair, mismatch), Error);

  auto prod = cartesian_product(g, g);
  EigenPair lap = pair;
  lap.op_kind = TensorKind::Laplacian;
  lap.lambda = 0.0;
  try {
    product_eigenpair(lap, pair, prod);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::KindUnsupported);
  }
}

TEST(SpanningSub, DropsAndFlags) {
  auto g = regular_family(3, CompleteGraphPlusFullEdge{});
  // canonical order: {1,2}, {1,2,3}, {1,3}, {2,3}
  auto sub = spanning_sub(g, {1, 2, 3});
  EXPECT_EQ(sub.graph.n(), 3u);
  EXPECT_EQ(sub.graph.edge_count(), 3u);
  EXPECT_TRUE(sub.mce_preserved);
  EXPECT_EQ(spanning_sub(g, {0, 1, 2, 3}).graph, g);
  EXPECT_FALSE(spanning_sub(g, {0, 2}).mce_preserved);
  EXPECT_THROW(spanning_sub(g, {}), Error);
}

TEST(CardinalityPartition, ExampleAndCounts) {
  auto parts = cardinality_partition(fixtures::example_hypergraph());
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].first, 1u);
  EXPECT_EQ(parts[0].second, Hypergraph(5, {{1}}));
  EXPECT_EQ(parts[1].second, Hypergraph(5, {{2, 3}}));
  EXPECT_EQ(parts[2].second, Hypergraph(5, {{1, 4, 5}}));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto h = fixtures::random_hypergraph(rng, 1 + rng() % 6, 4, rng() % 8);
    std::size_t total = 0;
    for (const auto& [s, part] : cardinality_partition(h)) {
      total += part.edge_count();
      EXPECT_EQ(part.n(), h.n());
      for (const auto& e : part.edges()) EXPECT_EQ(e.size(), s);
    }
    EXPECT_EQ(total, h.edge_count());
  }
  EXPECT_EQ(cardinality_partition(regular_family(5, Cyclic{3})).size(), 1u);
}

TEST(RegularFamily, Generators) {
  EXPECT_EQ(regular_family(3, CompleteGraphPlusFullEdge{}), Hypergraph(3, {{1, 2}, {2, 3}, {1, 3}, {1, 2, 3}}));
  auto c = regular_family(4, Cyclic{3});
  EXPECT_EQ(c, Hypergraph(4, {{1, 2, 3}, {2, 3, 4}, {3, 4, 1}, {4, 1, 2}}));
  EXPECT_EQ(degrees(c).k, 3u);
  auto tri = regular_family(3, Cyclic{2});
  EXPECT_EQ(tri, Hypergraph(3, {{1, 2}, {2, 3}, {1, 3}}));
  EXPECT_EQ(degrees(tri).k, 2u);
  EXPECT_THROW(regular_family(3, Cyclic{3}), Error);
  EXPECT_THROW(regular_family(2, CompleteGraphPlusFullEdge{}), Error);
  for (std::size_t n = 3; n <= 8; ++n) {
    EXPECT_TRUE(degrees(regular_family(n, CompleteGraphPlusFullEdge{})).is_regular);
    for (std::size_t s = 2; s < n; ++s) EXPECT_TRUE(degrees(regular_family(n, Cyclic{s})).is_regular);
  }
}
