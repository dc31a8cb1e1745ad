// SPDX-License-Identifier: Apache-2.0
#include <gtest/gtest.h>

#include "latwidth/error.hpp"
#include "latwidth/matrix.hpp"

using namespace latwidth;

TEST(Matrix, InitializerListAndAccess) {
  IntMatrix m{{1, 2, 3}, {4, 5, 6}};
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(m(1, 2), 6);
  EXPECT_EQ(m.row_vector(0), (IntVector{1, 2, 3}));
  EXPECT_EQ(m.column(1), (IntVector{2, 5}));
}

TEST(Matrix, TransposeAndProduct) {
  IntMatrix a{{1, 2}, {3, 4}};
  IntMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (IntMatrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transposed(), (IntMatrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(a * IntVector({1, -1}), (IntVector{-1, -1}));
  EXPECT_EQ(IntMatrix::identity(2) * a, a);
}

TEST(Matrix, FromColumnsAndSelect) {
  IntMatrix m = IntMatrix::from_columns({{1, 0}, {1, 2}});
  EXPECT_EQ(m, (IntMatrix{{1, 1}, {0, 2}}));
  std::vector<std::size_t> rows{1}, cols{0, 1};
  EXPECT_EQ(m.select(rows, cols), (IntMatrix{{0, 2}}));
}

TEST(Matrix, SwapRowsAndColumns) {
  IntMatrix m{{1, 2}, {3, 4}};
  m.swap_rows(0, 1);
  EXPECT_EQ(m, (IntMatrix{{3, 4}, {1, 2}}));
  m.swap_columns(0, 1);
  EXPECT_EQ(m, (IntMatrix{{4, 3}, {2, 1}}));
}

TEST(Matrix, RationalConversions) {
  RatVector v{Rational(1, 2), Rational(2)};
  EXPECT_FALSE(is_integral(v));
  EXPECT_THROW(to_integer(v), InvariantViolation);
  EXPECT_EQ(to_integer(RatVector{Rational(2), Rational(-3)}), (IntVector{2, -3}));
  EXPECT_EQ(mul(IntMatrix{{2, 0}, {0, 2}}, v), (RatVector{Rational(1), Rational(4)}));
}

TEST(Matrix, ContentAndMaxAbs) {
  EXPECT_EQ(content(IntVector{4, -6, 10}), 2);
  EXPECT_EQ(content(IntVector{0, 0}), 0);
  EXPECT_EQ(max_abs(IntMatrix{{1, -7}, {3, 2}}), 7);
}

TEST(Matrix, ToString) {
  EXPECT_EQ(to_string(IntVector{1, -2}), "(1 -2)");
}
