// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <algorithm>

#include "latwidth/corpus.hpp"
#include "latwidth/error.hpp"
#include "latwidth/exact_linalg.hpp"
#include "latwidth/oracle.hpp"
#include "latwidth/width.hpp"
#include "oracles.hpp"

using namespace latwidth;

namespace {

HSimplex unit_scaled(long n) {
  return HSimplex(IntMatrix{{-1, 0}, {0, -1}, {1, 1}}, IntVector{0, 0, n});
}

const HSimplex kLatticeFree(IntMatrix{{-2, 0}, {0, -2}, {2, 2}}, IntVector{-1, -1, 3});

bool in_normal_cone(const HSimplex& s, std::size_t vertex, const IntVector& c) {
  return cone_contains(normal_cone(s, s.vertices()[vertex]), to_rational(c));
}

}  // namespace

TEST(VertexPair, UnitSimplex) {
  VertexPair p = vertex_pair(unit_scaled(1), 0, 2);
  EXPECT_EQ(p.v, RatVector({1, 0}));
  EXPECT_EQ(p.u, RatVector({0, 0}));
  EXPECT_EQ(p.common, IntMatrix({{0}, {-1}}));
  EXPECT_EQ(p.a_v, IntVector({1, 1}));
  EXPECT_EQ(p.a_u, IntVector({-1, 0}));
  EXPECT_EQ(p.direction, IntVector({1, 0}));
  EXPECT_EQ(p.scale, 1);
  EXPECT_EQ(layer_limit(p), 1);
  EXPECT_THROW(vertex_pair(unit_scaled(1), 1, 1), InputError);
}

TEST(VertexPair, DirectionIsPrimitiveMultipleOfDifference) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    HSimplex s = corpus::gen_simplex_h(3, 4, 70 + seed);
    for (std::size_t i = 0; i <= 3; ++i) {
      for (std::size_t j = 0; j <= 3; ++j) {
        if (i == j) continue;
        VertexPair p = vertex_pair(s, i, j);
        ASSERT_GT(p.scale, 0);
        Integer g = 0;
        for (std::size_t k = 0; k < 3; ++k) {
          EXPECT_EQ(p.v[k] - p.u[k], p.scale * Rational(p.direction[k]));
          g = gcd(g, p.direction[k]);
        }
        EXPECT_EQ(g, 1);
      }
    }
  }
}

TEST(Layers, ValueFilterRejectsNonMultiples) {
  VertexPair p = vertex_pair(unit_scaled(1), 0, 2);
  EXPECT_FALSE(layer_nonempty_value(p, ref::frac(1, 2)));
  EXPECT_FALSE(layer_nonempty_value(p, 0));
  EXPECT_FALSE(layer_nonempty_value(p, -1));
  auto c = layer_nonempty_value(p, 1);
  ASSERT_TRUE(c);
  EXPECT_EQ(dot(*c, p.direction), 1);
}

TEST(Layers, PairMinimumOnUnitSimplex) {
  auto m = pair_minimum(vertex_pair(unit_scaled(1), 0, 2), 100);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->layer, 1);
  // (1, 0) and (1, 1) both lie in N(v) ∩ -N(u) on layer 1.
  EXPECT_TRUE(m->direction == IntVector({1, 0}) || m->direction == IntVector({1, 1}));
  EXPECT_THROW(pair_minimum(vertex_pair(unit_scaled(1), 0, 2), 0), InputError);
}

TEST(Layers, WitnessesLieInBothNormalCones) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    HSimplex s = corpus::gen_simplex_h(2 + seed % 2, 4, 90 + seed);
    const std::size_t n = s.dim();
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j <= n; ++j) {
        if (i == j) continue;
        VertexPair p = vertex_pair(s, i, j);
        LayerProbe probe(p);
        EXPECT_EQ(abs(det(probe.transform())), 1);
        const Integer limit = std::min(layer_limit(p), Integer(4));
        for (Integer k = 1; k <= limit; ++k) {
          auto c = probe.find(k);
          if (!c) continue;
          EXPECT_EQ(dot(*c, p.direction), k);
          EXPECT_TRUE(in_normal_cone(s, i, *c));
          IntVector neg(*c);
          for (auto& x : neg) x = -x;
          EXPECT_TRUE(in_normal_cone(s, j, neg));
        }
      }
    }
  }
}

TEST(Layers, BruteForceWitnessImpliesNonemptyLayer) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    HSimplex s = corpus::gen_simplex_h(2, 4, 140 + seed);
    for (std::size_t i = 0; i <= 2; ++i) {
      for (std::size_t j = 0; j <= 2; ++j) {
        if (i == j) continue;
        VertexPair p = vertex_pair(s, i, j);
        LayerProbe probe(p);
        ref::scan_box(2, -8, 8, [&](const std::int64_t* raw) {
          IntVector c = ref::to_int_vector(raw, 2);
          Integer k = dot(c, p.direction);
          if (k < 1 || k > 6) return;
          IntVector neg{-c[0], -c[1]};
          if (in_normal_cone(s, i, c) && in_normal_cone(s, j, neg))
            EXPECT_TRUE(probe.find(k)) << to_string(c) << " k=" << k;
        });
      }
    }
  }
}

TEST(Layers, LayerPointsSatisfyLayerEquation) {
  VertexPair p = vertex_pair(kLatticeFree, 0, 1);
  LayerProbe probe(p);
  for (Integer k = 1; k <= 3; ++k) {
    EXPECT_EQ(dot(p.direction, probe.layer_point_v(k)), Rational(k));
    EXPECT_EQ(dot(p.direction, probe.layer_point_u(k)), Rational(k));
  }
}

TEST(Width, UnitSimplexAndScalings) {
  for (long n = 1; n <= 4; ++n) {
    WidthResult r = width(unit_scaled(n));
    EXPECT_EQ(r.width, n);
    EXPECT_EQ(width_along(unit_scaled(n), r.direction), n);
    EXPECT_EQ(dot(r.direction, r.v) - dot(r.direction, r.u), Rational(n));
  }
}

TEST(Width, LatticeFreeTriangle) {
  WidthResult r = width(kLatticeFree);
  EXPECT_EQ(r.width, ref::frac(1, 2));
  WidthResult lf = width_lattice_free(kLatticeFree);
  EXPECT_EQ(lf.width, r.width);
  EXPECT_EQ(lf.direction, r.direction);
  EXPECT_EQ(minor_stats(kLatticeFree.a(), 2).min_abs_nonzero, 4);
}

TEST(Width, LatticeFreeModeRejectsWideSimplexWithPoints) {
  // Every 2×2 minor is ±1, so the cutoff is 1 while the width is 3.
  EXPECT_THROW(width_lattice_free(unit_scaled(3)), PreconditionError);
}

TEST(Width, DirectionSignIsNormalized) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    WidthResult r = width(corpus::gen_simplex_h(2, 5, 200 + seed));
    auto lead = std::find_if(r.direction.begin(), r.direction.end(),
                             [](const Integer& x) { return x != 0; });
    ASSERT_NE(lead, r.direction.end());
    EXPECT_GT(*lead, 0);
    EXPECT_GE(dot(r.direction, r.v), dot(r.direction, r.u));
  }
}

TEST(Width, PreprocessKeepsSimplexUpToUnimodularMap) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    HSimplex s = corpus::gen_simplex_h(2 + seed % 2, 5, 300 + seed);
    PreprocessedSimplex pre = preprocess_hnf(s);
    EXPECT_EQ(abs(det(pre.transform)), 1);
    EXPECT_EQ(pre.simplex.a(), s.a() * pre.transform);
    EXPECT_EQ(pre.simplex.b(), s.b());
    for (std::size_t i = 0; i <= s.dim(); ++i)
      EXPECT_EQ(mul(pre.transform, pre.simplex.vertices()[i]), s.vertices()[i]);
  }
}

TEST(Width, MatchesBruteForce) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 2;
    HSimplex s = corpus::gen_simplex_h(n, n == 2 ? 5 : 3, 400 + seed);
    WidthResult r = width(s);
    auto brute = oracle::brute_width(s, n == 2 ? 10 : 6);
    EXPECT_LE(r.width, brute.value) << "seed " << seed;
    EXPECT_EQ(r.width, brute.value) << "seed " << seed;
    EXPECT_EQ(width_along(s, r.direction), r.width);
  }
}

TEST(Width, InvariantUnderUnimodularMaps) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    HSimplex s = corpus::gen_simplex_h(2, 4, 500 + seed);
    IntMatrix u = corpus::gen_unimodular(2, 4, 600 + seed);
    HSimplex t(s.a() * u, s.b());
    EXPECT_EQ(width(s).width, width(t).width) << "seed " << seed;
  }
}

TEST(Width, LatticeFreeCorpus) {
  for (const auto& s : corpus::fixed_lattice_free_corpus()) {
    WidthResult r = width_lattice_free(s);
    EXPECT_EQ(r.width, width(s).width);
    EXPECT_LE(r.width, Rational(minor_stats(s.a(), s.dim()).min_abs_nonzero));
  }
}
