// SPDX-License-Identifier: Apache-2.0
#include "latwidth/exact_linalg.hpp"

#include <algorithm>
#include <numeric>

namespace latwidth {

namespace {

void require_square(const IntMatrix& m, const char* what) {
  if (!m.square() || m.rows() == 0)
    throw InputError(std::string(what) + ": expected a nonempty square matrix");
}

// Rows (i, j) of m are replaced by [[a, b], [c, d]]·(row i; row j).
void combine_rows(IntMatrix& m, std::size_t i, std::size_t j, const Integer& a,
                  const Integer& b, const Integer& c, const Integer& d) {
  for (std::size_t k = 0; k < m.cols(); ++k) {
    Integer ri = a * m(i, k) + b * m(j, k);
    Integer rj = c * m(i, k) + d * m(j, k);
    m(i, k) = std::move(ri);
    m(j, k) = std::move(rj);
  }
}

// Columns (i, j) of m become (a·col_i + b·col_j, c·col_i + d·col_j).
void combine_columns(IntMatrix& m, std::size_t i, std::size_t j,
                     const Integer& a, const Integer& b, const Integer& c,
                     const Integer& d) {
  for (std::size_t k = 0; k < m.rows(); ++k) {
    Integer ci = a * m(k, i) + b * m(k, j);
    Integer cj = c * m(k, i) + d * m(k, j);
    m(k, i) = std::move(ci);
    m(k, j) = std::move(cj);
  }
}

// Coefficients (a, b, c, d), ad - bc = 1, sending (x, y) to (g, 0).
struct GcdStep {
  Integer a, b, c, d;
};

GcdStep gcd_step(const Integer& x, const Integer& y) {
  // Keep x in place when it already divides y; gcdext may otherwise hand back
  // a swap when |x| = |y|, and elimination loops would cycle.
  if (x != 0 && mpz_divisible_p(y.get_mpz_t(), x.get_mpz_t()))
    return {1, 0, Integer(-y / x), 1};
  auto [g, u, w] = ext_gcd(x, y);
  return {u, w, Integer(-y / g), Integer(x / g)};
}

}  // namespace

ExtGcd ext_gcd(const Integer& a, const Integer& b) {
  ExtGcd r;
  if (a == 0 && b == 0) return {0, 0, 0};
  mpz_gcdext(r.g.get_mpz_t(), r.u.get_mpz_t(), r.w.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer mod_floor(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer det(const IntMatrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

RatVector solve(const IntMatrix& m, const RatVector& rhs) {
  require_square(m, "solve");
  const std::size_t n = m.rows();
  if (rhs.size() != n) throw InputError("solve: right-hand side length mismatch");
  RatMatrix a = to_rational(m);
  RatVector x = rhs;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw InputError("solve: singular matrix");
    a.swap_rows(k, p);
    std::swap(x[k], x[p]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      x[i] -= f * x[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) x[i] /= a(i, i);
  return x;
}

RatMatrix inverse_rational(const IntMatrix& m) {
  require_square(m, "inverse_rational");
  const std::size_t n = m.rows();
  RatMatrix a = to_rational(m);
  RatMatrix inv = RatMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw InputError("inverse_rational: singular matrix");
    a.swap_rows(k, p);
    inv.swap_rows(k, p);
    const Rational pivot = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (abs(det(m)) != 1) throw InputError("inverse_unimodular: matrix is not unimodular");
  return to_integer(inverse_rational(m));
}

std::size_t rank(const IntMatrix& m) {
  RatMatrix a = to_rational(m);
  std::size_t r = 0;
  for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
    std::size_t p = r;
    while (p < a.rows() && a(p, col) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      Rational f = a(i, col) / a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    ++r;
  }
  return r;
}

SnfResult snf(const IntMatrix& a) {
  require_square(a, "snf");
  const std::size_t n = a.rows();
  IntMatrix P = IntMatrix::identity(n);
  IntMatrix S = a;
  IntMatrix Q = IntMatrix::identity(n);

  // Invariant: a = P·S·Q. A row operation S <- M·S is paired with
  // P <- P·M^{-1}; a column operation S <- S·F with Q <- F^{-1}·Q.
  auto row_op = [&](std::size_t i, std::size_t j, const GcdStep& s) {
    combine_rows(S, i, j, s.a, s.b, s.c, s.d);
    // M^{-1} = [[d, -b], [-c, a]]; columns of P combine accordingly.
    combine_columns(P, i, j, s.d, Integer(-s.c), Integer(-s.b), s.a);
  };
  auto col_op = [&](std::size_t i, std::size_t j, const GcdStep& s) {
    combine_columns(S, i, j, s.a, s.b, s.c, s.d);
    combine_rows(Q, i, j, s.d, Integer(-s.c), Integer(-s.b), s.a);
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pi = n, pj = n;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j)
        if (S(i, j) != 0 && (pi == n || abs(S(i, j)) < abs(S(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi == n) throw InputError("snf: singular matrix");
    S.swap_rows(k, pi);
    P.swap_columns(k, pi);
    S.swap_columns(k, pj);
    Q.swap_rows(k, pj);

    for (;;) {
      for (std::size_t i = k + 1; i < n; ++i)
        if (S(i, k) != 0) row_op(k, i, gcd_step(S(k, k), S(i, k)));
      for (std::size_t j = k + 1; j < n; ++j)
        if (S(k, j) != 0) col_op(k, j, gcd_step(S(k, k), S(k, j)));
      bool clear = true;
      for (std::size_t i = k + 1; i < n; ++i)
        if (S(i, k) != 0) clear = false;
      if (!clear) continue;

      std::size_t bad = n;
      for (std::size_t i = k + 1; i < n && bad == n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(k, k).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == n) break;
      // Pull the offending row into row k and eliminate again.
      row_op(k, bad, GcdStep{1, 1, 0, 1});
    }
    if (S(k, k) < 0) {
      for (std::size_t j = 0; j < n; ++j) S(k, j) = -S(k, j);
      for (std::size_t i = 0; i < n; ++i) P(i, k) = -P(i, k);
    }
  }
  return {std::move(P), std::move(S), std::move(Q)};
}

HnfResult hnf(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (n == 0) throw InputError("hnf: matrix has no columns");
  HnfResult r{a, IntMatrix::identity(n), {}};
  IntMatrix& H = r.H;
  IntMatrix& U = r.U;
  auto col_op = [&](std::size_t i, std::size_t j, const GcdStep& s) {
    combine_columns(H, i, j, s.a, s.b, s.c, s.d);
    combine_columns(U, i, j, s.a, s.b, s.c, s.d);
  };

  std::size_t pc = 0;
  for (std::size_t i = 0; i < m && pc < n; ++i) {
    for (std::size_t j = pc + 1; j < n; ++j) {
      if (H(i, j) == 0) continue;
      if (H(i, pc) == 0) {
        H.swap_columns(pc, j);
        U.swap_columns(pc, j);
      } else {
        col_op(pc, j, gcd_step(H(i, pc), H(i, j)));
      }
    }
    if (H(i, pc) == 0) continue;
    if (H(i, pc) < 0) {
      for (std::size_t k = 0; k < m; ++k) H(k, pc) = -H(k, pc);
      for (std::size_t k = 0; k < n; ++k) U(k, pc) = -U(k, pc);
    }
    for (std::size_t j = 0; j < pc; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, j).get_mpz_t(), H(i, pc).get_mpz_t());
      if (q == 0) continue;
      for (std::size_t k = 0; k < m; ++k) H(k, j) -= q * H(k, pc);
      for (std::size_t k = 0; k < n; ++k) U(k, j) -= q * U(k, pc);
    }
    r.pivot_rows.push_back(i);
    ++pc;
  }
  if (pc < n) throw InputError("hnf: matrix does not have full column rank");
  return r;
}

MinorStats minor_stats(const IntMatrix& a, std::size_t k) {
  if (k == 0 || k > std::min(a.rows(), a.cols()))
    throw InputError("minor_stats: order out of range");
  MinorStats s;
  s.k = k;
  bool any_nonzero = false;

  // Iterate over k-subsets in lexicographic order via index vectors.
  auto first = [k] {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    return idx;
  };
  auto next = [k](std::vector<std::size_t>& idx, std::size_t limit) {
    for (std::size_t t = k; t-- > 0;) {
      if (idx[t] + (k - t) < limit) {
        ++idx[t];
        for (std::size_t u = t + 1; u < k; ++u) idx[u] = idx[u - 1] + 1;
        return true;
      }
    }
    return false;
  };

  auto rows = first();
  do {
    auto cols = first();
    do {
      Integer d = abs(det(a.select(rows, cols)));
      if (d > s.max_abs) s.max_abs = d;
      mpz_gcd(s.gcd.get_mpz_t(), s.gcd.get_mpz_t(), d.get_mpz_t());
      if (d != 0 && (!any_nonzero || d < s.min_abs_nonzero)) {
        s.min_abs_nonzero = d;
        any_nonzero = true;
      }
    } while (next(cols, a.cols()));
  } while (next(rows, a.rows()));

  if (!any_nonzero)
    throw InputError("minor_stats: every minor of order " + std::to_string(k) +
                     " vanishes, smallest nonzero minor undefined");
  return s;
}

IntMatrix unimodular_completion(const IntVector& v) {
  const std::size_t n = v.size();
  if (n == 0) throw InputError("unimodular_completion: empty vector");
  IntMatrix row(1, n);
  row.set_row(0, v);
  IntMatrix U = IntMatrix::identity(n);
  for (std::size_t j = 1; j < n; ++j) {
    if (row(0, j) == 0) continue;
    if (row(0, 0) == 0) {
      row.swap_columns(0, j);
      U.swap_columns(0, j);
      continue;
    }
    GcdStep s = gcd_step(row(0, 0), row(0, j));
    combine_columns(row, 0, j, s.a, s.b, s.c, s.d);
    combine_columns(U, 0, j, s.a, s.b, s.c, s.d);
  }
  if (row(0, 0) < 0)
    for (std::size_t k = 0; k < n; ++k) U(k, 0) = -U(k, 0);
  return U;
}

}  // namespace latwidth
