// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "latwidth/corpus.hpp"
#include "latwidth/error.hpp"
#include "latwidth/oracle.hpp"
#include "oracles.hpp"

using namespace latwidth;
using namespace latwidth::oracle;

namespace {

const HSimplex kUnit(IntMatrix{{-1, 0}, {0, -1}, {1, 1}}, IntVector{0, 0, 1});
const HSimplex kLatticeFree(IntMatrix{{-2, 0}, {0, -2}, {2, 2}}, IntVector{-1, -1, 3});

}  // namespace

TEST(Box, VolumeAndValidation) {
  EXPECT_EQ(Box(IntVector{-1, 0}, IntVector{1, 3}).volume(), 12);
  EXPECT_THROW(Box(IntVector{2}, IntVector{1}), InputError);
  EXPECT_THROW(Box(IntVector{0}, IntVector{1, 1}), InputError);
}

TEST(Enumerate, LexicographicOrder) {
  auto pts = enum_lattice_points([](const IntVector&) { return true; },
                                 Box(IntVector{0, 0}, IntVector{1, 1}));
  ASSERT_EQ(pts.size(), 4u);
  EXPECT_EQ(pts[0], IntVector({0, 0}));
  EXPECT_EQ(pts[1], IntVector({0, 1}));
  EXPECT_EQ(pts[3], IntVector({1, 1}));
}

TEST(Enumerate, BudgetIsEnforced) {
  Box box(IntVector{-50, -50, -50}, IntVector{50, 50, 50});
  EXPECT_THROW(enum_lattice_points([](const IntVector&) { return true; }, box, 1000),
               BudgetExceeded);
}

TEST(Enumerate, UnitSimplexPoints) {
  auto pts = lattice_points(kUnit);
  EXPECT_EQ(pts, (std::vector<IntVector>{{0, 0}, {0, 1}, {1, 0}}));
  EXPECT_FALSE(lattice_free(kUnit));
  EXPECT_TRUE(lattice_free(kLatticeFree));
}

TEST(BruteOptimize, OrthantTriangle) {
  auto r = brute_optimize(
      [](const IntVector& x) { return x[0] >= 0 && x[1] >= 0 && x[0] + x[1] <= 3; },
      IntVector{1, 1}, Box(IntVector{-5, -5}, IntVector{5, 5}));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->value, 3);
  EXPECT_EQ(r->point, IntVector({0, 3}));
}

TEST(CramerVertices, MatchLibraryVertices) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    HSimplex s = corpus::gen_simplex_h(2 + seed % 3, 4, seed);
    EXPECT_EQ(cramer_vertices(s), s.vertices());
    Box box = simplex_box(s);
    for (const auto& v : s.vertices())
      for (std::size_t i = 0; i < s.dim(); ++i) {
        EXPECT_LE(Rational(box.lower[i]), v[i]);
        EXPECT_GE(Rational(box.upper[i]), v[i]);
      }
  }
}

TEST(InSimplex, HAndVFormsAgree) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    VSimplex v = corpus::gen_simplex_v(2 + seed % 2, 4, 40 + seed);
    HSimplex h = corpus::to_h_form(v);
    const std::size_t n = v.dim();
    ref::scan_box(n, -5, 5, [&](const std::int64_t* raw) {
      IntVector x = ref::to_int_vector(raw, n);
      EXPECT_EQ(in_simplex(v, x), in_simplex(h, x)) << to_string(x);
    });
  }
}

TEST(BruteWidth, SmallExamples) {
  EXPECT_EQ(brute_width(kUnit, 1).value, 1);
  EXPECT_EQ(brute_width(kUnit, 3).value, 1);
  EXPECT_EQ(brute_width(kLatticeFree, 3).value, ref::frac(1, 2));
  EXPECT_THROW(brute_width(kUnit, 0), InputError);
}

TEST(BrutePunctured, Triangle) {
  VSimplex t(IntMatrix{{0, 3, 0}, {0, 0, 3}});
  auto r = brute_punctured(t, IntVector{1, 1});
  ASSERT_TRUE(r);
  EXPECT_EQ(r->value, 3);
  EXPECT_EQ(r->point, IntVector({1, 2}));
}

TEST(ConeMembership, AgreesWithFixedWidthCheck) {
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix gen = corpus::gen_cone(3, 1 + trial % 9, 700 + trial);
    ref::FastCone fast(gen);
    ref::scan_box(3, -4, 4, [&](const std::int64_t* raw) {
      EXPECT_EQ(in_cone(gen, ref::to_int_vector(raw, 3)), fast.contains(raw));
    });
  }
}

TEST(ConeMembership, ShiftedCone) {
  ShiftedCone s(RatVector{ref::frac(1, 2), 0}, Cone(IntMatrix::identity(2)));
  EXPECT_TRUE(in_shifted_cone(s, IntVector{1, 0}));
  EXPECT_FALSE(in_shifted_cone(s, IntVector{0, 0}));
  EXPECT_FALSE(in_shifted_cone(s, IntVector{1, -1}));
}
