// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>

#include "latwidth/matrix.hpp"

namespace latwidth {

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det(const IntMatrix& m);

/// Exact inverse over the rationals. Throws InputError on singular input.
RatMatrix inverse_rational(const IntMatrix& m);

/// Inverse of a unimodular matrix, as an integer matrix.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Solve m·x = rhs for square nonsingular m.
RatVector solve(const IntMatrix& m, const RatVector& rhs);

std::size_t rank(const IntMatrix& m);

/// Smith normal form with the convention A = P·S·Q.
///
/// P and Q are unimodular, S is diagonal with nonnegative entries and
/// S(0,0) | S(1,1) | ... | S(n-1,n-1).
struct SnfResult {
  IntMatrix P;
  IntMatrix S;
  IntMatrix Q;

  // Largest invariant factor, S(n-1,n-1).
  const Integer& last() const { return S(S.rows() - 1, S.cols() - 1); }
};

SnfResult snf(const IntMatrix& a);

/// Column-style Hermite normal form: H = A·U with U unimodular.
///
/// Rows are scanned top to bottom; each row that is independent of the rows
/// above it receives a positive pivot in the next pivot column, and the
/// entries to the left of that pivot are reduced into [0, pivot). When the
/// leading cols(A) rows are nonsingular the pivots sit on the diagonal and
/// the top square block is lower triangular.
struct HnfResult {
  IntMatrix H;
  IntMatrix U;
  std::vector<std::size_t> pivot_rows;
};

HnfResult hnf(const IntMatrix& a);

/// Minor statistics of order k: max |minor|, min nonzero |minor|, gcd of
/// all minors. Enumerates every k×k minor, so cost is exponential in k;
/// intended for desk-scale matrices.
struct MinorStats {
  std::size_t k = 0;
  Integer max_abs;
  Integer min_abs_nonzero;
  Integer gcd;
};

MinorStats minor_stats(const IntMatrix& a, std::size_t k);

struct ExtGcd {
  Integer g;  // gcd(a, b) >= 0
  Integer u;  // u·a + w·b = g
  Integer w;
};

ExtGcd ext_gcd(const Integer& a, const Integer& b);

/// Unimodular U with v^T·U = (content(v), 0, ..., 0), built from
/// extended-gcd column reductions.
IntMatrix unimodular_completion(const IntVector& v);

/// Floor/ceil of a rational as an integer.
Integer floor_q(const Rational& q);
Integer ceil_q(const Rational& q);

/// Nonnegative residue of x modulo m (m > 0).
Integer mod_floor(const Integer& x, const Integer& m);

}  // namespace latwidth
