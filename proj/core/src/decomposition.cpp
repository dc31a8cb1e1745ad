// SPDX-License-Identifier: Apache-2.0
#include "latwidth/decomposition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "latwidth/exact_linalg.hpp"

namespace latwidth {

IntMatrix replace_column(const IntMatrix& a, std::size_t j, const IntVector& b) {
  IntMatrix r = a;
  r.set_column(j, b);
  return r;
}

IntVector congruence_solution(const IntMatrix& a, const IntVector& t) {
  const std::size_t n = a.rows();
  if (t.size() != n) throw InputError("congruence_solution: t has wrong length");
  SnfResult f = snf(a);
  const Integer m = f.last();
  IntVector x(n, Integer(0));
  if (m == 1) return x;
  IntMatrix q_inv = inverse_unimodular(f.Q);
  // Q^{-1}·S^{-1}·S_nn is integral because every S_ii divides S_nn.
  IntVector scaled(n);
  for (std::size_t i = 0; i < n; ++i) {
    LATWIDTH_CHECK(mpz_divisible_p(m.get_mpz_t(), f.S(i, i).get_mpz_t()),
                   "Smith form divisibility chain broken");
    scaled[i] = (m / f.S(i, i)) * t[i];
  }
  x = q_inv * scaled;
  for (auto& xi : x) xi = mod_floor(xi, m);
  return x;
}

std::vector<SplitPiece> split(const IntMatrix& a, const RatVector& y,
                              const SplitObserver& observer) {
  const std::size_t n = a.cols();
  if (y.size() != n) throw InputError("split: y has wrong length");
  bool nonzero = false;
  for (const auto& yj : y) {
    if (yj < 0) throw InputError("split: y has a negative component");
    if (yj > 0) nonzero = true;
  }
  if (!nonzero) throw InputError("split: y is zero");
  RatVector b_rat = mul(a, y);
  if (!is_integral(b_rat)) throw InputError("split: A·y is not integral");
  IntVector b = to_integer(b_rat);
  const Integer det_a = abs(det(a));
  std::vector<SplitPiece> out;
  for (std::size_t j = 0; j < n; ++j) {
    if (y[j] == 0) continue;
    IntMatrix child = replace_column(a, j, b);
    LATWIDTH_CHECK(Rational(abs(det(child))) == y[j] * Rational(det_a),
                   "split: |det A[j,b]| != y_j·|det A|");
    if (observer) observer(SplitEvent{a, y, j, child});
    out.push_back({j, std::move(child)});
  }
  return out;
}

StepResult even_step(const IntMatrix& a, const SplitObserver& observer) {
  const std::size_t n = a.rows();
  const Integer delta = abs(det(a));
  if (delta == 0 || delta % 2 != 0) throw InputError("even_step: |det A| must be even");
  SnfResult f = snf(a);
  const Integer m = f.last();
  LATWIDTH_CHECK(m % 2 == 0, "even_step: S_nn must be even when |det A| is even");
  IntMatrix q_inv = inverse_unimodular(f.Q);
  IntVector q = q_inv.column(n - 1);
  bool odd = false;
  RatVector y(n);
  for (std::size_t i = 0; i < n; ++i) {
    Integer qi = mod_floor((m / 2) * q[i], m);
    if (q[i] % 2 != 0) odd = true;
    y[i] = Rational(qi, m);
    y[i].canonicalize();
  }
  LATWIDTH_CHECK(odd, "even_step: last column of Q^{-1} has no odd component");
  StepResult r;
  r.pieces = split(a, y, observer);
  r.weights = RatMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) r.weights.set_column(k, y);
  for (const auto& p : r.pieces)
    LATWIDTH_CHECK(abs(det(p.gen)) * 2 == delta, "even_step: piece determinant is not Δ/2");
  return r;
}

StepResult odd_step(const IntMatrix& a, const SplitObserver& observer) {
  const std::size_t n = a.rows();
  const Integer delta = abs(det(a));
  if (delta % 2 == 0 || delta <= 1) throw InputError("odd_step: |det A| must be odd and > 1");
  const Integer m = snf(a).last();

  // Deterministic choice: t = e_n, then the other unit vectors.
  IntVector x;
  for (std::size_t t_idx = n; t_idx-- > 0;) {
    IntVector t(n, Integer(0));
    t[t_idx] = 1;
    x = congruence_solution(a, t);
    if (std::any_of(x.begin(), x.end(), [](const Integer& v) { return v != 0; })) break;
  }
  LATWIDTH_CHECK(std::any_of(x.begin(), x.end(), [](const Integer& v) { return v != 0; }),
                 "odd_step: no nonzero solution of the congruence system");

  // Column k: y^(k) = λ_k·x mod S_nn with λ_k·x_k ≡ -gcd(S_nn, x_k).
  RatMatrix c(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k] == 0) continue;
    ExtGcd e = ext_gcd(x[k], m);
    Integer lambda = mod_floor(-e.u, m);
    LATWIDTH_CHECK(mod_floor(lambda * x[k] + e.g, m) == 0, "odd_step: λ_k does not solve its congruence");
    for (std::size_t i = 0; i < n; ++i) {
      c(i, k) = Rational(mod_floor(lambda * x[i], m), m);
      c(i, k).canonicalize();
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      LATWIDTH_CHECK(c(i, k) >= 0 && c(i, k) <= c(i, i), "odd_step: 0 <= C_ik <= C_ii violated");

  StepResult r;
  r.weights = c;
  const Integer det_a = abs(det(a));
  for (std::size_t i = 0; i < n; ++i) {
    if (c(i, i) == 0) continue;
    RatVector w = c.column(i);
    RatVector b_rat = mul(a, w);
    LATWIDTH_CHECK(is_integral(b_rat), "odd_step: A·C is not integral");
    IntMatrix child = replace_column(a, i, to_integer(b_rat));
    const Integer d = abs(det(child));
    LATWIDTH_CHECK(Rational(d) == w[i] * Rational(det_a), "odd_step: |det A[i,b]| != C_ii·|det A|");
    LATWIDTH_CHECK(d % 2 == 0 && d < delta, "odd_step: piece determinant is not even and smaller");
    if (observer) observer(SplitEvent{a, w, i, child});
    r.pieces.push_back({i, std::move(child)});
  }
  LATWIDTH_CHECK(!r.pieces.empty(), "odd_step: index set I is empty");
  return r;
}

IntMatrix canonical_columns(const IntMatrix& a) {
  std::vector<std::size_t> order(a.cols());
  std::iota(order.begin(), order.end(), 0);
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return cols[x] < cols[y]; });
  IntMatrix r(a.rows(), a.cols());
  for (std::size_t j = 0; j < order.size(); ++j) r.set_column(j, cols[order[j]]);
  return r;
}

namespace {

// Sort generator columns and permute coefficient columns alongside.
DecompositionPiece canonicalize(DecompositionPiece p) {
  const std::size_t n = p.gen.cols();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<IntVector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(p.gen.column(j));
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return cols[x] < cols[y]; });
  DecompositionPiece r{IntMatrix(n, n), RatMatrix(n, n), p.depth};
  for (std::size_t j = 0; j < n; ++j) {
    r.gen.set_column(j, cols[order[j]]);
    r.coeffs.set_column(j, p.coeffs.column(order[j]));
  }
  return r;
}

void check_piece(const UnimodularDecomposition& d, const DecompositionPiece& p,
                 const Integer& delta) {
  LATWIDTH_CHECK(abs(det(p.gen)) == 1, "decompose: piece is not unimodular");
  LATWIDTH_CHECK(to_rational(d.root) * p.coeffs == to_rational(p.gen),
                 "decompose: root·T != piece generators");
  const Rational bound = Rational(delta * delta);
  for (const auto& t : p.coeffs.data()) {
    LATWIDTH_CHECK(t >= 0, "decompose: negative coefficient certificate");
    LATWIDTH_CHECK(t <= bound, "decompose: coefficient exceeds Δ²");
  }
  if (p.depth >= 1) {
    Integer growth;
    mpz_ui_pow_ui(growth.get_mpz_t(), 2, p.depth - 1);
    const Rational m = max_abs(p.coeffs);
    // The k = 1 case is attained with equality by surviving original columns.
    if (p.depth == 1)
      LATWIDTH_CHECK(m <= Rational(growth), "decompose: coefficient growth bound after 1 step");
    else
      LATWIDTH_CHECK(m < Rational(growth), "decompose: coefficient growth bound after k steps");
  }
}

}  // namespace

UnimodularDecomposition decompose(const IntMatrix& a, const DecomposeOptions& options) {
  if (!a.square() || a.rows() == 0) throw InputError("decompose: expected a square matrix");
  const Integer delta = abs(det(a));
  if (delta == 0) throw InputError("decompose: singular matrix");
  const std::size_t n = a.rows();

  UnimodularDecomposition out;
  out.root = a;

  std::map<std::vector<Integer>, std::size_t> seen;  // canonical gen -> depth
  std::vector<DecompositionPiece> level;
  level.push_back({a, RatMatrix::identity(n), 0});
  while (!level.empty()) {
    std::vector<DecompositionPiece> next;
    for (auto& node : level) {
      const Integer d = abs(det(node.gen));
      if (d == 1) {
        out.pieces.push_back(std::move(node));
        continue;
      }
      StepResult step = (d % 2 == 0) ? even_step(node.gen, options.observer)
                                     : odd_step(node.gen, options.observer);
      for (auto& sp : step.pieces) {
        DecompositionPiece child{std::move(sp.gen), node.coeffs, node.depth + 1};
        RatVector w = step.weights.column(sp.column);
        child.coeffs.set_column(sp.column, node.coeffs * w);
        if (options.deduplicate) {
          child = canonicalize(std::move(child));
          if (!seen.emplace(child.gen.data(), child.depth).second) continue;
        }
        next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }

  for (const auto& p : out.pieces) out.steps = std::max(out.steps, p.depth);

  Integer two_pow;
  mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, out.steps);
  LATWIDTH_CHECK(two_pow <= delta * delta, "decompose: depth exceeds 2·log2(Δ)");
  Integer count_bound;
  mpz_ui_pow_ui(count_bound.get_mpz_t(), n, out.steps);
  LATWIDTH_CHECK(Integer(static_cast<unsigned long>(out.pieces.size())) <= count_bound,
                 "decompose: piece count exceeds n^steps");
  for (const auto& p : out.pieces) check_piece(out, p, delta);
  return out;
}

}  // namespace latwidth
