// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include <limits>
#include <set>

#include "latwidth/corpus.hpp"
#include "latwidth/error.hpp"
#include "latwidth/exact_linalg.hpp"
#include "latwidth/oracle.hpp"

using namespace latwidth;
using namespace latwidth::corpus;

TEST(Rng, DeterministicAndInRange) {
  Rng a(12345), b(12345);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    std::int64_t x = a.uniform(-3, 3);
    EXPECT_EQ(x, b.uniform(-3, 3));
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 3);
    seen.insert(x);
  }
  EXPECT_EQ(seen.size(), 7u);
  Rng c(7);
  EXPECT_EQ(c.uniform(5, 5), 5);
}

TEST(Rng, FullRangeIsTheRawEngineStream) {
  // The 10000th output of a default-seeded mt19937_64 is fixed by the standard.
  Rng r(5489);
  std::int64_t x = 0;
  for (int i = 0; i < 10000; ++i)
    x = r.uniform(std::numeric_limits<std::int64_t>::min(),
                  std::numeric_limits<std::int64_t>::max());
  EXPECT_EQ(static_cast<std::uint64_t>(x), 9981545732273789042ull);
}

TEST(GenCone, HitsTargetDeterminant) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::uint64_t d = 1; d <= 30; ++d) {
      IntMatrix g = gen_cone(n, d, 10 * n + d);
      EXPECT_EQ(abs(det(g)), Integer(static_cast<unsigned long>(d)));
      EXPECT_EQ(g, gen_cone(n, d, 10 * n + d));
    }
}

TEST(GenSimplex, ValidAndBounded) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    HSimplex h = gen_simplex_h(2 + seed % 3, 4, seed);
    EXPECT_EQ(h, gen_simplex_h(2 + seed % 3, 4, seed));
    for (const auto& v : h.vertices())
      for (const auto& x : v) EXPECT_LE(abs(x), 4);
    VSimplex v = gen_simplex_v(2 + seed % 3, 4, seed, 50);
    for (std::size_t i = 0; i <= v.dim(); ++i) {
      IntMatrix edges(v.dim(), v.dim());
      for (std::size_t j = 0, k = 0; j <= v.dim(); ++j) {
        if (j == i) continue;
        IntVector e = v.vertex(j);
        for (std::size_t r = 0; r < v.dim(); ++r) e[r] -= v.vertex(i)[r];
        edges.set_column(k++, e);
      }
      EXPECT_LE(abs(det(edges)), 50);
    }
    HSimplex hv = to_h_form(v);
    for (std::size_t i = 0; i <= v.dim(); ++i)
      EXPECT_EQ(hv.vertices()[i], to_rational(v.vertex(i)));
  }
}

TEST(GenLatticeFree, CertifiedByEnumeration) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    HSimplex s = gen_lattice_free_simplex(2 + seed % 2, seed);
    EXPECT_TRUE(oracle::lattice_free(s));
  }
  auto fixed = fixed_lattice_free_corpus();
  ASSERT_FALSE(fixed.empty());
  EXPECT_EQ(fixed[0], HSimplex(IntMatrix{{-2, 0}, {0, -2}, {2, 2}}, IntVector{-1, -1, 3}));
  for (const auto& s : fixed) EXPECT_TRUE(oracle::lattice_free(s));
}

TEST(GenConeIp, MeetsPreconditions) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      ConeIpInstance inst = gen_cone_ip(n, seed, 30);
      EXPECT_NO_THROW(inst.validate());
      EXPECT_LE(abs(det(inst.shifted.cone.generators())), 8);
      EXPECT_EQ(inst, gen_cone_ip(n, seed, 30));
    }
}

TEST(GenUnimodular, DeterminantOne) {
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    EXPECT_EQ(abs(det(gen_unimodular(3, 10, seed))), 1);
}
