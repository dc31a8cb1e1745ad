// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "latwidth/corpus.hpp"
#include "latwidth/error.hpp"
#include "latwidth/exact_linalg.hpp"
#include "latwidth/oracle.hpp"
#include "latwidth/simplex_opt.hpp"

using namespace latwidth;

namespace {

const VSimplex kTriangle3(IntMatrix{{0, 3, 0}, {0, 0, 3}});
const VSimplex kUnit(IntMatrix{{0, 1, 0}, {0, 0, 1}});

}  // namespace

TEST(EdgeCone, Triangle) {
  EdgeCone e = edge_cone(kTriangle3, 0);
  EXPECT_EQ(e.edges, IntMatrix({{3, 0}, {0, 3}}));
  EXPECT_EQ(e.alpha, 9);
  EdgeCone e1 = edge_cone(kTriangle3, 1);
  EXPECT_EQ(e1.edges, IntMatrix({{-3, -3}, {0, 3}}));
  EXPECT_EQ(e1.alpha, 9);
}

TEST(LpVertex, PicksMaximizerWithLowestIndexOnTies) {
  EXPECT_EQ(lp_vertex(kTriangle3, IntVector{1, 0}), 1u);
  EXPECT_EQ(lp_vertex(kTriangle3, IntVector{0, 1}), 2u);
  EXPECT_EQ(lp_vertex(kTriangle3, IntVector{0, 0}), 0u);
  EXPECT_EQ(lp_vertex(kTriangle3, IntVector{1, 1}), 1u);
}

TEST(OppositeFacet, Triangle) {
  Halfspace h0 = opposite_facet(kTriangle3, 0);
  EXPECT_EQ(h0.a, IntVector({1, 1}));
  EXPECT_EQ(h0.a0, 3);
  Halfspace h1 = opposite_facet(kTriangle3, 1);
  EXPECT_EQ(h1.a, IntVector({-1, 0}));
  EXPECT_EQ(h1.a0, 0);
  Halfspace u0 = opposite_facet(kUnit, 0);
  EXPECT_EQ(u0.a, IntVector({1, 1}));
  EXPECT_EQ(u0.a0, 1);
}

TEST(OppositeFacet, TightExceptAtOwnVertex) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    VSimplex s = corpus::gen_simplex_v(3, 4, 10 + seed);
    for (std::size_t i = 0; i <= 3; ++i) {
      Halfspace h = opposite_facet(s, i);
      EXPECT_EQ(content(h.a), 1);
      for (std::size_t j = 0; j <= 3; ++j) {
        Integer lhs = dot(h.a, s.vertex(j));
        if (j == i)
          EXPECT_LT(lhs, h.a0);
        else
          EXPECT_EQ(lhs, h.a0);
      }
    }
  }
}

TEST(Punctured, TriangleExamples) {
  auto r = optimize_punctured({kTriangle3, IntVector{1, 0}});
  ASSERT_TRUE(r);
  EXPECT_EQ(r->value, 2);
  EXPECT_EQ(r->point, IntVector({2, 0}));
  EXPECT_EQ(r->alpha, 9);
  auto r2 = optimize_punctured({kTriangle3, IntVector{1, 1}});
  ASSERT_TRUE(r2);
  EXPECT_EQ(r2->value, 3);
  EXPECT_EQ(r2->point, IntVector({1, 2}));
}

TEST(Punctured, UnitSimplexHasNoNonVertexPoint) {
  EXPECT_FALSE(optimize_punctured({kUnit, IntVector{1, 1}}));
  EXPECT_FALSE(oracle::brute_punctured(kUnit, IntVector{1, 1}));
}

TEST(Punctured, ObjectiveLengthChecked) {
  EXPECT_THROW(optimize_punctured({kUnit, IntVector{1}}), InputError);
}

TEST(Punctured, MatchesBruteForce) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t s = 0; s < 25; ++s) {
      VSimplex simplex = corpus::gen_simplex_v(n, 4, 900 * n + s, 60);
      corpus::Rng rng(5 * n + s);
      IntVector c(n);
      for (auto& ci : c) ci = rng.uniform(-5, 5);
      auto r = optimize_punctured({simplex, c});
      auto brute = oracle::brute_punctured(simplex, c);
      ASSERT_EQ(r.has_value(), brute.has_value()) << "n=" << n << " seed=" << s;
      if (!r) continue;
      EXPECT_EQ(r->value, brute->value);
      EXPECT_EQ(r->point, brute->point);
      EXPECT_TRUE(oracle::in_simplex(simplex, r->point));
      Integer alpha = 0;
      for (std::size_t i = 0; i <= n; ++i) alpha = std::max(alpha, edge_cone(simplex, i).alpha);
      EXPECT_EQ(r->alpha, alpha);
    }
  }
}
