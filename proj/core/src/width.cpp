// SPDX-License-Identifier: Apache-2.0
#include "latwidth/width.hpp"

#include <algorithm>

#include "latwidth/exact_linalg.hpp"

namespace latwidth {

namespace {

RatVector sub(const RatVector& a, const RatVector& b) {
  RatVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector negated(const IntVector& a) {
  IntVector r;
  for (const auto& x : a) r.push_back(-x);
  return r;
}

IntMatrix with_column(const IntMatrix& m, const IntVector& extra) {
  IntMatrix r(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    r(i, m.cols()) = extra[i];
  }
  return r;
}

}  // namespace

VertexPair vertex_pair(const HSimplex& s, std::size_t v_index, std::size_t u_index) {
  const std::size_t n = s.dim();
  if (v_index > n || u_index > n || v_index == u_index)
    throw InputError("vertex_pair: need two distinct vertex indices");
  VertexPair p;
  p.v_index = v_index;
  p.u_index = u_index;
  p.v = s.vertices()[v_index];
  p.u = s.vertices()[u_index];
  p.common = IntMatrix(n, n - 1);
  std::size_t col = 0;
  for (std::size_t r = 0; r <= n; ++r) {
    if (r == v_index || r == u_index) continue;
    p.common.set_column(col++, s.a().row_vector(r));
  }
  // Vertex i is where every row except row i is tight.
  p.a_v = s.a().row_vector(u_index);
  p.a_u = s.a().row_vector(v_index);

  RatVector diff = sub(p.v, p.u);
  Integer denom_lcm = 1;
  for (const auto& q : diff)
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den_mpz_t());
  IntVector scaled;
  for (const auto& q : diff) scaled.push_back(q.get_num() * (denom_lcm / q.get_den()));
  const Integer c = content(scaled);
  LATWIDTH_CHECK(c != 0, "vertex_pair: coincident vertices");
  for (auto& x : scaled) x /= c;
  p.direction = std::move(scaled);
  p.scale = Rational(c, denom_lcm);
  p.scale.canonicalize();

  LATWIDTH_CHECK(dot(p.a_v, diff) > 0, "vertex_pair: a_v·(v-u) must be positive");
  LATWIDTH_CHECK(dot(negated(p.a_u), diff) > 0, "vertex_pair: -a_u·(v-u) must be positive");
  return p;
}

Integer layer_limit(const VertexPair& pair) {
  return std::min(dot(pair.a_v, pair.direction), Integer(-dot(pair.a_u, pair.direction)));
}

LayerProbe::LayerProbe(const VertexPair& pair) : pair_(pair) {
  const std::size_t n = pair.direction.size();
  u_ = unimodular_completion(pair.direction);
  u_inv_ = inverse_unimodular(u_);
  LATWIDTH_CHECK(u_inv_.row_vector(0) == pair.direction,
                 "LayerProbe: first row of the inverse transform must be the direction");
  if (n >= 2) {
    IntMatrix moved = u_inv_ * pair.common;
    b_proj_ = IntMatrix(n - 1, n - 1);
    for (std::size_t j = 0; j < n - 1; ++j) {
      LATWIDTH_CHECK(moved(0, j) == 0, "LayerProbe: common facets not orthogonal to v-u");
      for (std::size_t i = 1; i < n; ++i) b_proj_(i - 1, j) = moved(i, j);
    }
    decomposition_ = decompose(b_proj_);
  }
}

RatVector LayerProbe::layer_point_v(const Integer& k) const {
  Rational t(k, dot(pair_.a_v, pair_.direction));
  t.canonicalize();
  RatVector p;
  for (const auto& x : pair_.a_v) p.push_back(Rational(x) * t);
  return p;
}

RatVector LayerProbe::layer_point_u(const Integer& k) const {
  Rational t(k, -dot(pair_.a_u, pair_.direction));
  t.canonicalize();
  RatVector p;
  for (const auto& x : pair_.a_u) p.push_back(-Rational(x) * t);
  return p;
}

std::optional<IntVector> LayerProbe::find(const Integer& k) const {
  if (k < 1) throw InputError("layer index must be positive");
  const std::size_t n = pair_.direction.size();
  IntVector c;
  if (n == 1) {
    c = {u_(0, 0) * k};
  } else {
    RatVector zv = mul(u_inv_, layer_point_v(k));
    RatVector zu = mul(u_inv_, layer_point_u(k));
    LATWIDTH_CHECK(zv[0] == Rational(k) && zu[0] == Rational(k),
                   "LayerProbe: layer points left the hyperplane");
    RatVector pv(zv.begin() + 1, zv.end());
    RatVector pu(zu.begin() + 1, zu.end());

    // p_u - cone(B') = {z : B'^{-1} z <= B'^{-1} p_u}, scaled by |det B'|.
    const Integer d = abs(det(b_proj_));
    RatMatrix inv = inverse_rational(b_proj_);
    IntMatrix r(n - 1, n - 1);
    for (std::size_t i = 0; i < n - 1; ++i)
      for (std::size_t j = 0; j < n - 1; ++j) {
        Rational e = inv(i, j) * Rational(d);
        LATWIDTH_CHECK(e.get_den() == 1, "LayerProbe: scaled inverse is not integral");
        r(i, j) = e.get_num();
      }
    IntVector rhs;
    for (const auto& q : mul(r, pu)) rhs.push_back(floor_q(q));

    ConeIpInstance inst{r, rhs, ShiftedCone(pv, Cone(b_proj_)), std::nullopt};
    ConeIpResult res = solve(inst, *decomposition_);
    if (!res.feasible) return std::nullopt;
    IntVector z{k};
    z.insert(z.end(), res.point.begin(), res.point.end());
    c = u_ * z;
  }

  LATWIDTH_CHECK(dot(c, pair_.direction) == k, "LayerProbe: witness is not on layer k");
  LATWIDTH_CHECK(cone_contains(Cone(with_column(pair_.common, pair_.a_v)), to_rational(c)),
                 "LayerProbe: witness is not in N(v)");
  LATWIDTH_CHECK(cone_contains(Cone(with_column(pair_.common, pair_.a_u)),
                               to_rational(negated(c))),
                 "LayerProbe: witness is not in -N(u)");
  return c;
}

std::optional<IntVector> layer_nonempty(const VertexPair& pair, const Integer& k) {
  return LayerProbe(pair).find(k);
}

std::optional<IntVector> layer_nonempty_value(const VertexPair& pair, const Rational& value) {
  Rational k = value / pair.scale;
  if (k.get_den() != 1 || k <= 0) return std::nullopt;
  return layer_nonempty(pair, k.get_num());
}

namespace {

std::optional<PairMinimum> search_layers(const LayerProbe& probe, const Integer& limit) {
  for (Integer k = 1; k <= limit; ++k)
    if (auto c = probe.find(k)) return PairMinimum{k, std::move(*c)};
  return std::nullopt;
}

}  // namespace

std::optional<PairMinimum> pair_minimum(const VertexPair& pair, const Integer& cutoff) {
  if (cutoff < 1) throw InputError("pair_minimum: cutoff must be positive");
  const Integer limit = layer_limit(pair);
  auto r = search_layers(LayerProbe(pair), std::min(cutoff, limit));
  LATWIDTH_CHECK(r || cutoff < limit, "pair_minimum: layer a_v·g or -a_u·g must be nonempty");
  return r;
}

Rational width_along(const HSimplex& s, const IntVector& c) {
  std::optional<Rational> lo, hi;
  for (const auto& v : s.vertices()) {
    Rational x = dot(c, v);
    if (!lo || x < *lo) lo = x;
    if (!hi || x > *hi) hi = x;
  }
  return *hi - *lo;
}

PreprocessedSimplex preprocess_hnf(const HSimplex& s) {
  const std::size_t n = s.dim();
  HnfResult h = hnf(s.a());
  for (std::size_t i = 0; i < n; ++i)
    LATWIDTH_CHECK(h.pivot_rows[i] == i, "preprocess_hnf: leading rows must be nonsingular");
  const Integer delta = minor_stats(s.a(), n).max_abs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Integer& e = h.H(i, j);
      if (j > i) LATWIDTH_CHECK(e == 0, "preprocess_hnf: not lower triangular");
      if (j < i) LATWIDTH_CHECK(e >= 0 && e < h.H(i, i), "preprocess_hnf: entry not reduced");
      LATWIDTH_CHECK(abs(e) <= delta, "preprocess_hnf: entry exceeds Δ(A)");
    }
  }
  return {HSimplex(std::move(h.H), s.b()), std::move(h.U)};
}

namespace {

WidthResult search_width(const HSimplex& s, const std::optional<Integer>& width_cutoff) {
  const std::size_t n = s.dim();
  PreprocessedSimplex pre = preprocess_hnf(s);
  const HSimplex& t = pre.simplex;

  std::optional<Rational> best;
  IntVector best_dir;
  std::size_t best_v = 0, best_u = 0;
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (i == j) continue;
      VertexPair pair = vertex_pair(t, i, j);
      Integer cap = layer_limit(pair);
      if (width_cutoff) cap = std::min(cap, floor_q(Rational(*width_cutoff) / pair.scale));
      // Only strictly better layers matter once a candidate exists.
      if (best) cap = std::min(cap, Integer(ceil_q(*best / pair.scale) - 1));
      if (cap < 1) continue;
      auto found = search_layers(LayerProbe(pair), cap);
      if (!found) continue;
      best = pair.scale * Rational(found->layer);
      best_dir = std::move(found->direction);
      best_v = i;
      best_u = j;
    }
  }
  if (!best)
    throw PreconditionError(
        "width search found no direction within the layer cutoff; the simplex is not "
        "lattice-free");

  // c·x = c·U·x' so a direction c' of the transformed simplex is c = U^{-T}·c'.
  IntVector dir = inverse_unimodular(pre.transform).transposed() * best_dir;
  // Report the sign with a positive leading entry; v stays the maximizer.
  auto lead = std::find_if(dir.begin(), dir.end(), [](const Integer& x) { return x != 0; });
  if (lead != dir.end() && *lead < 0) {
    for (auto& x : dir) x = -x;
    std::swap(best_v, best_u);
  }
  WidthResult r{*best, std::move(dir), best_v, best_u, s.vertices()[best_v],
                s.vertices()[best_u]};
  LATWIDTH_CHECK(width_along(s, r.direction) == r.width,
                 "width: flat direction does not realise the reported width");
  LATWIDTH_CHECK(dot(r.direction, r.v) - dot(r.direction, r.u) == r.width,
                 "width: direction is not extremal at the reported pair");
  return r;
}

}  // namespace

WidthResult width(const HSimplex& s) { return search_width(s, std::nullopt); }

WidthResult width_lattice_free(const HSimplex& s) {
  const Integer delta_min = minor_stats(s.a(), s.dim()).min_abs_nonzero;
  WidthResult r = search_width(s, delta_min);
  LATWIDTH_CHECK(r.width <= Rational(delta_min), "width_lattice_free: width exceeds δ(A)");
  return r;
}

}  // namespace latwidth
