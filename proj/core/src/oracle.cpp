// SPDX-License-Identifier: Apache-2.0
#include "latwidth/oracle.hpp"

#include <numeric>
#include <set>

#include "latwidth/exact_linalg.hpp"

namespace latwidth::oracle {

Box::Box(IntVector lo, IntVector hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (lower.size() != upper.size()) throw InputError("box bounds differ in dimension");
  for (std::size_t i = 0; i < lower.size(); ++i)
    if (lower[i] > upper[i]) throw InputError("box lower bound exceeds upper bound");
}

Integer Box::volume() const {
  Integer v = 1;
  for (std::size_t i = 0; i < lower.size(); ++i) v *= upper[i] - lower[i] + 1;
  return v;
}

void for_each_lattice_point(const Box& box, std::uint64_t budget,
                            const std::function<void(const IntVector&)>& visit) {
  if (box.volume() > Integer(static_cast<unsigned long>(budget)))
    throw BudgetExceeded("enumeration box holds " + box.volume().get_str() +
                         " points, budget is " + std::to_string(budget));
  const std::size_t n = box.dim();
  if (n == 0) return;
  IntVector x = box.lower;
  for (;;) {
    visit(x);
    std::size_t k = n;
    while (k-- > 0) {
      if (x[k] < box.upper[k]) {
        ++x[k];
        break;
      }
      x[k] = box.lower[k];
    }
    if (k == static_cast<std::size_t>(-1)) return;
  }
}

std::vector<IntVector> enum_lattice_points(const PointPredicate& pred, const Box& box,
                                           std::uint64_t budget) {
  std::vector<IntVector> out;
  for_each_lattice_point(box, budget, [&](const IntVector& x) {
    if (pred(x)) out.push_back(x);
  });
  return out;
}

std::optional<BruteOptimum> brute_optimize(const PointPredicate& pred, const IntVector& c,
                                           const Box& box, std::uint64_t budget) {
  std::optional<BruteOptimum> best;
  for_each_lattice_point(box, budget, [&](const IntVector& x) {
    if (!pred(x)) return;
    Integer v = dot(c, x);
    // Lexicographic enumeration: the first point at a value is the smallest.
    if (!best || v > best->value) best = BruteOptimum{x, v};
  });
  return best;
}

std::vector<RatVector> cramer_vertices(const HSimplex& s) {
  const std::size_t n = s.dim();
  std::vector<RatVector> out;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    IntMatrix m(n, n);
    IntVector rhs;
    std::size_t r = 0;
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == skip) continue;
      for (std::size_t j = 0; j < n; ++j) m(r, j) = s.a()(i, j);
      rhs.push_back(s.b()[i]);
      ++r;
    }
    const Integer d = det(m);
    RatVector v(n);
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix mj = m;
      mj.set_column(j, rhs);
      v[j] = Rational(det(mj), d);
      v[j].canonicalize();
    }
    out.push_back(std::move(v));
  }
  return out;
}

Box simplex_box(const HSimplex& s) {
  const std::size_t n = s.dim();
  auto verts = cramer_vertices(s);
  IntVector lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = floor_q(verts[0][j]);
    hi[j] = ceil_q(verts[0][j]);
    for (const auto& v : verts) {
      lo[j] = std::min(lo[j], floor_q(v[j]));
      hi[j] = std::max(hi[j], ceil_q(v[j]));
    }
  }
  IntMatrix ab(n + 1, n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = 0; j < n; ++j) ab(i, j) = s.a()(i, j);
    ab(i, n) = s.b()[i];
  }
  const Rational bound(minor_stats(ab, n).max_abs, minor_stats(s.a(), n).min_abs_nonzero);
  for (const auto& v : verts)
    for (const auto& x : v)
      LATWIDTH_CHECK(abs(x) <= bound, "simplex vertex violates the Cramer bound");
  return Box(lo, hi);
}

Box simplex_box(const VSimplex& s) {
  const std::size_t n = s.dim();
  IntVector lo(n), hi(n);
  for (std::size_t j = 0; j < n; ++j) {
    lo[j] = hi[j] = s.verts()(j, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      lo[j] = std::min(lo[j], Integer(s.verts()(j, i)));
      hi[j] = std::max(hi[j], Integer(s.verts()(j, i)));
    }
  }
  return Box(lo, hi);
}

bool in_simplex(const HSimplex& s, const IntVector& x) {
  for (std::size_t i = 0; i < s.a().rows(); ++i) {
    Integer lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += s.a()(i, j) * x[j];
    if (lhs > s.b()[i]) return false;
  }
  return true;
}

namespace {

// Signs of the Cramer numerators of [verts; 1]·λ = [x; 1] are linear in x;
// the cofactors are computed once per simplex.
class Barycentric {
 public:
  explicit Barycentric(const VSimplex& s) : n_(s.dim()) {
    IntMatrix m(n_ + 1, n_ + 1);
    for (std::size_t j = 0; j <= n_; ++j) {
      for (std::size_t i = 0; i < n_; ++i) m(i, j) = s.verts()(i, j);
      m(n_, j) = 1;
    }
    sign_ = sgn(det(m));
    cof_ = IntMatrix(n_ + 1, n_ + 1);
    std::vector<std::size_t> rows, cols;
    for (std::size_t i = 0; i <= n_; ++i)
      for (std::size_t j = 0; j <= n_; ++j) {
        rows.clear();
        cols.clear();
        for (std::size_t t = 0; t <= n_; ++t) {
          if (t != i) rows.push_back(t);
          if (t != j) cols.push_back(t);
        }
        Integer minor = n_ == 0 ? Integer(1) : det(m.select(rows, cols));
        cof_(i, j) = ((i + j) % 2 == 0) ? minor : Integer(-minor);
      }
  }

  bool contains(const IntVector& x) const {
    for (std::size_t j = 0; j <= n_; ++j) {
      Integer num = cof_(n_, j);
      for (std::size_t i = 0; i < n_; ++i) num += x[i] * cof_(i, j);
      if (sgn(num) * sign_ < 0) return false;
    }
    return true;
  }

 private:
  std::size_t n_;
  int sign_;
  IntMatrix cof_;
};

}  // namespace

bool in_simplex(const VSimplex& s, const IntVector& x) { return Barycentric(s).contains(x); }

std::vector<IntVector> lattice_points(const HSimplex& s, std::uint64_t budget) {
  return enum_lattice_points([&](const IntVector& x) { return in_simplex(s, x); },
                             simplex_box(s), budget);
}

bool lattice_free(const HSimplex& s, std::uint64_t budget) {
  return lattice_points(s, budget).empty();
}

BruteWidth brute_width(const HSimplex& s, const Integer& radius, std::uint64_t budget) {
  if (radius < 1) throw InputError("brute_width: radius must be at least 1");
  const std::size_t n = s.dim();
  auto verts = cramer_vertices(s);
  // Common denominator so every c·v is an integer numerator over `den`.
  Integer den = 1;
  for (const auto& v : verts)
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<IntVector> scaled;
  for (const auto& v : verts) {
    IntVector w;
    for (const auto& q : v) w.push_back(q.get_num() * (den / q.get_den()));
    scaled.push_back(std::move(w));
  }
  BruteWidth best{0, {}, radius};
  bool have = false;
  Integer best_spread;
  Box ball(IntVector(n, Integer(-radius)), IntVector(n, radius));
  for_each_lattice_point(ball, budget, [&](const IntVector& c) {
    // c and -c have the same spread; keep c whose first nonzero entry is positive.
    std::size_t k = 0;
    while (k < n && c[k] == 0) ++k;
    if (k == n || c[k] < 0) return;
    Integer lo = dot(c, scaled[0]), hi = lo;
    for (std::size_t i = 1; i < scaled.size(); ++i) {
      Integer x = dot(c, scaled[i]);
      if (x < lo) lo = x;
      if (x > hi) hi = x;
    }
    Integer spread = hi - lo;
    if (!have || spread < best_spread) {
      have = true;
      best_spread = spread;
      best.direction = c;
    }
  });
  best.value = Rational(best_spread, den);
  best.value.canonicalize();
  return best;
}

std::optional<BruteOptimum> brute_punctured(const VSimplex& s, const IntVector& c,
                                            std::uint64_t budget) {
  std::set<IntVector> verts;
  for (std::size_t i = 0; i <= s.dim(); ++i) verts.insert(s.vertex(i));
  Barycentric bary(s);
  return brute_optimize(
      [&](const IntVector& x) { return !verts.count(x) && bary.contains(x); }, c,
      simplex_box(s), budget);
}

bool in_cone(const IntMatrix& gen, const IntVector& x) {
  const Integer d = det(gen);
  if (d == 0) throw InputError("in_cone: singular generators");
  for (std::size_t j = 0; j < gen.cols(); ++j) {
    IntMatrix mj = gen;
    mj.set_column(j, x);
    if (sgn(det(mj)) * sgn(d) < 0) return false;
  }
  return true;
}

bool in_shifted_cone(const ShiftedCone& shifted, const IntVector& x) {
  const RatVector& p = shifted.apex;
  Integer den = 1;
  for (const auto& q : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  IntVector d(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    d[i] = den * x[i] - p[i].get_num() * (den / p[i].get_den());
  return in_cone(shifted.cone.generators(), d);
}

std::optional<BruteOptimum> brute_cone_ip(const ConeIpInstance& inst, const Integer& radius,
                                          std::uint64_t budget) {
  if (radius < 0) throw InputError("brute_cone_ip: negative radius");
  const std::size_t n = inst.shifted.cone.dim();
  const IntVector c = inst.objective.value_or(IntVector(n, Integer(0)));
  auto feasible = [&](const IntVector& x) {
    for (std::size_t i = 0; i < inst.a.rows(); ++i) {
      Integer lhs = 0;
      for (std::size_t j = 0; j < n; ++j) lhs += inst.a(i, j) * x[j];
      if (lhs > inst.b[i]) return false;
    }
    return in_shifted_cone(inst.shifted, x);
  };
  return brute_optimize(feasible, c, Box(IntVector(n, Integer(-radius)), IntVector(n, radius)),
                        budget);
}

}  // namespace latwidth::oracle
