#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace hyperspec;

namespace {

Hypergraph regular3() { return regular_family(3, CompleteGraphPlusFullEdge{}); }

bool has_lambda(const std::vector<EigenPair>& pairs, double lambda, double tol = 1e-6) {
  return std::any_of(pairs.begin(), pairs.end(), [&](const EigenPair& p) { return std::abs(p.lambda - lambda) <= tol; });
}

double l2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

TEST(HPower, RegularAdjacency) {
  TensorOperator op(regular3(), TensorKind::Adjacency);
  auto p = h_power(op, SolverConfig{});
  EXPECT_NEAR(p.lambda, 3.0, 1e-10);
  for (double v : p.x) EXPECT_NEAR(v, 1.0, 1e-10);
  EXPECT_LE(p.residual, 1e-10);
  EXPECT_LE(h_residual(op, p.lambda, p.x), 1e-10);
}

TEST(HPower, SingleEdgeOrderThree) {
  TensorOperator op(Hypergraph(2, {{1, 2}}), TensorKind::Adjacency, 3);
  auto p = h_power(op, SolverConfig{});
  EXPECT_NEAR(p.lambda, 1.0, 1e-10);
  EXPECT_NEAR(p.x[0], 1.0, 1e-10);
  EXPECT_NEAR(p.x[1], 1.0, 1e-10);
}

TEST(HPower, NormalizedAdjacencyIsStochasticProperty) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    auto h = fixtures::random_hypergraph(rng, 2 + rng() % 6, 4, 1 + rng() % 6, true);
    TensorOperator op(h, TensorKind::NormalizedAdjacency, std::max<std::size_t>(2, mce(h)) + rng() % 2);
    auto p = h_power(op, SolverConfig{});
    EXPECT_NEAR(p.lambda, 1.0, 1e-12);
    for (double v : p.x) EXPECT_NEAR(v, 1.0, 1e-12);
  }
}

TEST(HPower, SignlessLaplacianOfRegularIsTwiceDegree) {
  TensorOperator op(regular_family(6, Cyclic{3}), TensorKind::SignlessLaplacian);
  auto p = h_power(op, SolverConfig{});
  EXPECT_NEAR(p.lambda, 6.0, 1e-9);
}

TEST(HPower, Guards) {
  TensorOperator lap(regular3(), TensorKind::Laplacian);
  EXPECT_THROW(h_power(lap, SolverConfig{}), Error);
  SolverConfig bad;
  bad.tol = 0.0;
  EXPECT_THROW(h_power(TensorOperator(regular3(), TensorKind::Adjacency), bad), Error);
}

TEST(HPower, ReducibleNeedsPerturbation) {
  // {2,3} is a separate component: the all-ones start never balances
  TensorOperator op(fixtures::example_hypergraph(), TensorKind::Adjacency);
  SolverConfig cfg;
  cfg.max_iter = 500;
  try {
    h_power(op, cfg);
    FAIL() << "expected NotConverged";
  } catch (const NotConvergedError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotConverged);
    EXPECT_EQ(e.best().x.size(), 5u);
  }
  cfg.max_iter = 10000;
  cfg.perturbation = 1e-12;
  auto p = h_power(op, cfg);
  EXPECT_LE(p.residual, 1e-8);
  EXPECT_GT(p.lambda, 1.0);
  EXPECT_LE(p.lambda, 2.0);
}

TEST(ZShss, RegularContainsScaledDegree) {
  TensorOperator op(regular3(), TensorKind::Adjacency);
  auto r = z_shss(op, SolverConfig{});
  ASSERT_FALSE(r.pairs.empty());
  EXPECT_NEAR(r.pairs.front().lambda, std::sqrt(3.0), 1e-6);
  for (std::size_t k = 1; k < r.pairs.size(); ++k) EXPECT_GE(r.pairs[k - 1].lambda, r.pairs[k].lambda);
}

TEST(ZShss, RegularFamilyFormula) {
  for (auto [n, s] : std::vector<std::pair<std::size_t, std::size_t>>{{4, 3}, {5, 3}, {5, 4}, {6, 4}}) {
    auto h = regular_family(n, Cyclic{s});
    TensorOperator op(h, TensorKind::Adjacency);
    double expected = static_cast<double>(s) * std::pow(static_cast<double>(n), -(static_cast<double>(s) - 2.0) / 2.0);
    EXPECT_TRUE(has_lambda(z_shss(op, SolverConfig{}).pairs, expected)) << n << "," << s;
  }
}

TEST(ZShss, LaplacianHasZeroAtConstant) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    auto h = fixtures::random_hypergraph(rng, 2 + rng() % 5, 4, 1 + rng() % 5);
    TensorOperator op(h, TensorKind::Laplacian);
    auto r = z_shss(op, SolverConfig{});
    bool found = false;
    for (const auto& p : r.pairs) {
      if (std::abs(p.lambda) > 1e-8) continue;
      double c = 1.0 / std::sqrt(static_cast<double>(h.n()));
      bool constant = std::all_of(p.x.begin(), p.x.end(), [&](double v) { return std::abs(std::abs(v) - c) < 1e-8; });
      found = found || constant;
    }
    EXPECT_TRUE(found) << serialize(h, Format::Lines);
  }
}

TEST(ZShss, MatrixCase) {
  TensorOperator op(Hypergraph(2, {{1, 2}}), TensorKind::Adjacency);
  auto r = z_shss(op, SolverConfig{});
  ASSERT_EQ(r.pairs.size(), 2u);
  EXPECT_NEAR(r.pairs[0].lambda, 1.0, 1e-9);
  EXPECT_NEAR(r.pairs[1].lambda, -1.0, 1e-9);
}

TEST(ZShss, PairsAreCertifiedUnitVectorsProperty) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 15; ++trial) {
    auto h = fixtures::random_hypergraph(rng, 2 + rng() % 5, 4, 1 + rng() % 5, true);
    auto kinds = std::vector<TensorKind>{TensorKind::Adjacency, TensorKind::Laplacian, TensorKind::SignlessLaplacian,
                                         TensorKind::NormalizedLaplacianSym};
    TensorKind kind = kinds[rng() % kinds.size()];
    TensorOperator op(h, kind, std::max<std::size_t>(2, mce(h)) + rng() % 2);
    SolverConfig cfg;
    cfg.restarts = 5;
    cfg.seed = rng();
    for (const auto& p : z_shss(op, cfg).pairs) {
      EXPECT_NEAR(l2(p.x), 1.0, 1e-12);
      EXPECT_LE(z_residual(op, p.lambda, p.x), 1e-9);
    }
  }
}

TEST(ZShss, SeedDeterminism) {
  TensorOperator op(fixtures::example_hypergraph(), TensorKind::Adjacency);
  SolverConfig cfg;
  cfg.seed = 17;
  auto a = z_shss(op, cfg), b = z_shss(op, cfg);
  ASSERT_EQ(a.pairs.size(), b.pairs.size());
  for (std::size_t k = 0; k < a.pairs.size(); ++k) {
    EXPECT_EQ(a.pairs[k].lambda, b.pairs[k].lambda);
    EXPECT_EQ(a.pairs[k].x, b.pairs[k].x);
  }
}

TEST(Residuals, HScaleInvarianceProperty) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto h = fixtures::random_hypergraph(rng, 2 + rng() % 5, 4, 1 + rng() % 6, true);
    std::size_t m = mce(h) + rng() % 3;
    m = std::max<std::size_t>(m, 2);
    TensorOperator op(h, TensorKind::NormalizedAdjacency, m);
    auto p = h_power(op, SolverConfig{});
    std::vector<double> twice = p.x;
    for (double& v : twice) v *= 2.0;
    EXPECT_LE(h_residual(op, p.lambda, twice), 1e-10);
    if (m % 2 == 0) {
      std::vector<double> neg = p.x;
      for (double& v : neg) v = -v;
      EXPECT_LE(h_residual(op, p.lambda, neg), 1e-10);
    }
  }
}

TEST(KnownPairs, SingletonFreeCertify) {
  for (auto h : {regular_family(5, Cyclic{3}), regular_family(6, Cyclic{4}), Hypergraph(4, {{1, 2, 3}, {2, 3, 4}})}) {
    auto report = verify_known_pairs(TensorOperator(h, TensorKind::Laplacian));
    EXPECT_TRUE(report.all_certified()) << serialize(h, Format::Lines);
    EXPECT_EQ(report.pairs.size(), h.n() + 1);
    for (const auto& p : report.pairs) EXPECT_TRUE(p.hypothesis_holds);
  }
}

TEST(KnownPairs, SmallEdgesBreakBasisPairs) {
  auto report = verify_known_pairs(TensorOperator(fixtures::example_hypergraph(), TensorKind::Laplacian));
  ASSERT_EQ(report.pairs.size(), 6u);
  EXPECT_TRUE(report.pairs[0].certified);
  // vertex 1 lies in {1}, vertices 2 and 3 in {2,3}
  for (std::size_t j : {1u, 2u, 3u}) {
    EXPECT_FALSE(report.pairs[j].hypothesis_holds);
    EXPECT_FALSE(report.pairs[j].certified);
  }
  EXPECT_DOUBLE_EQ(report.pairs[1].lambda, 2.0);
  EXPECT_TRUE(report.pairs[4].certified);
  EXPECT_TRUE(report.pairs[5].certified);
}

TEST(KnownPairs, Guards) {
  EXPECT_THROW(verify_known_pairs(TensorOperator(regular3(), TensorKind::Adjacency)), Error);
  EXPECT_THROW(verify_known_pairs(TensorOperator(Hypergraph(2, {{1, 2}}), TensorKind::Laplacian)), Error);
}

TEST(Bounds, RegularAdjacencyPasses) {
  TensorOperator op(regular3(), TensorKind::Adjacency);
  std::vector<EigenPair> pairs{h_power(op, SolverConfig{})};
  for (auto& p : z_shss(op, SolverConfig{}).pairs) pairs.push_back(p);
  auto report = bound_report(op, pairs);
  EXPECT_TRUE(report.all_pass());
  auto it = std::find_if(report.checks.begin(), report.checks.end(),
                         [](const BoundCheck& c) { return c.name == "h_abs_le_max_degree"; });
  ASSERT_NE(it, report.checks.end());
  EXPECT_NEAR(it->slack(), 1e-9, 1e-9);
  EXPECT_TRUE(std::any_of(report.checks.begin(), report.checks.end(),
                          [](const BoundCheck& c) { return c.name == "z_abs_le_max_degree_over_xmax"; }));
}

TEST(Bounds, FlagsViolations) {
  TensorOperator op(regular3(), TensorKind::Adjacency);
  EigenPair fake;
  fake.lambda = 4.0;
  fake.x = {1.0, 1.0, 1.0};
  auto report = bound_report(op, {fake});
  EXPECT_FALSE(report.all_pass());
}

TEST(Bounds, TwoVertexPairsRespectTheoremsProperty) {
  // every real H-pair of a two-vertex operator, from the exact oracle
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    auto h = fixtures::random_hypergraph(rng, 2, 2, 1 + rng() % 3, true);
    std::size_t m = std::max<std::size_t>(2, mce(h)) + rng() % 4;
    for (TensorKind kind : {TensorKind::Adjacency, TensorKind::Laplacian, TensorKind::NormalizedLaplacianRW}) {
      TensorOperator op(h, kind, m);
      auto real = h_pairs_n2(op);
      if (real.continuum) continue;
      std::vector<EigenPair> certified;
      for (const auto& p : real.pairs)
        if (p.residual <= 1e-8) certified.push_back(p);
      auto report = bound_report(op, certified);
      EXPECT_TRUE(report.all_pass()) << to_string(kind) << " m=" << m << "\n" << serialize(h, Format::Lines);
    }
  }
}
