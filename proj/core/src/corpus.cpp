// SPDX-License-Identifier: Apache-2.0
#include "latwidth/corpus.hpp"

#include <limits>

#include "latwidth/exact_linalg.hpp"
#include "latwidth/oracle.hpp"
#include "latwidth/simplex_opt.hpp"

namespace latwidth::corpus {

namespace {

constexpr std::size_t kAttempts = 200000;

// Distinct stream per (generator, seed) pair.
std::uint64_t stream(std::uint64_t tag, std::uint64_t seed) {
  return seed * 0x9E3779B97F4A7C15ULL + tag;
}

std::size_t pick(Rng& rng, std::size_t n) {
  return static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1));
}

}  // namespace

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InputError("Rng::uniform: empty range");
  // Unsigned arithmetic: hi - lo can exceed the signed range.
  const std::uint64_t base = static_cast<std::uint64_t>(lo);
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - base + 1;
  if (range == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t r;
  do r = engine_();
  while (r >= limit);
  return static_cast<std::int64_t>(base + r % range);
}

IntMatrix gen_cone(std::size_t n, std::uint64_t target_det, std::uint64_t seed) {
  if (n == 0 || target_det == 0) throw InputError("gen_cone: need n >= 1 and target_det >= 1");
  Rng rng(stream(1, seed));
  IntMatrix m = IntMatrix::identity(n);
  std::uint64_t rest = target_det;
  for (std::uint64_t p = 2; p * p <= rest; ++p)
    while (rest % p == 0) {
      std::size_t i = pick(rng, n);
      m(i, i) *= static_cast<unsigned long>(p);
      rest /= p;
    }
  if (rest > 1) {
    std::size_t i = pick(rng, n);
    m(i, i) *= static_cast<unsigned long>(rest);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = rng.uniform(-2, 2);
  if (n >= 2) {
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t i = pick(rng, n), j = pick(rng, n - 1);
      if (j >= i) ++j;
      long s = rng.uniform(0, 1) ? 1 : -1;
      for (std::size_t k = 0; k < n; ++k) m(i, k) += s * m(j, k);
    }
    for (std::size_t t = 0; t < n; ++t) {
      std::size_t i = pick(rng, n), j = pick(rng, n - 1);
      if (j >= i) ++j;
      long s = rng.uniform(0, 1) ? 1 : -1;
      for (std::size_t k = 0; k < n; ++k) m(k, i) += s * m(k, j);
    }
  }
  LATWIDTH_CHECK(abs(det(m)) == Integer(static_cast<unsigned long>(target_det)),
                 "gen_cone: determinant drifted");
  return m;
}

HSimplex gen_simplex_h(std::size_t n, std::int64_t coord_bound, std::uint64_t seed) {
  Rng rng(stream(2, seed));
  for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
    IntMatrix a(n + 1, n);
    IntVector b(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.uniform(-coord_bound, coord_bound);
      b[i] = rng.uniform(-2 * coord_bound, 2 * coord_bound);
    }
    try {
      HSimplex s(a, b);
      bool inside = true;
      for (const auto& v : s.vertices())
        for (const auto& x : v)
          if (abs(x) > Rational(coord_bound)) inside = false;
      if (inside) return s;
    } catch (const InputError&) {
    }
  }
  throw InputError("gen_simplex_h: sampling budget exhausted");
}

VSimplex gen_simplex_v(std::size_t n, std::int64_t coord_bound, std::uint64_t seed,
                       std::uint64_t max_det) {
  Rng rng(stream(3, seed));
  for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
    IntMatrix v(n, n + 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= n; ++j) v(i, j) = rng.uniform(-coord_bound, coord_bound);
    try {
      VSimplex s(v);
      if (max_det > 0) {
        bool ok = true;
        for (std::size_t i = 0; i <= n && ok; ++i)
          ok = edge_cone(s, i).alpha <= Integer(static_cast<unsigned long>(max_det));
        if (!ok) continue;
      }
      return s;
    } catch (const InputError&) {
    }
  }
  throw InputError("gen_simplex_v: sampling budget exhausted");
}

HSimplex to_h_form(const VSimplex& s) {
  const std::size_t n = s.dim();
  IntMatrix a(n + 1, n);
  IntVector b(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    Halfspace h = opposite_facet(s, i);
    a.set_row(i, h.a);
    b[i] = h.a0;
  }
  return HSimplex(std::move(a), std::move(b));
}

HSimplex gen_lattice_free_simplex(std::size_t n, std::uint64_t seed) {
  Rng rng(stream(4, seed));
  for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
    IntMatrix a(n + 1, n);
    IntVector b(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = rng.uniform(-4, 4);
      b[i] = rng.uniform(-4, 4);
    }
    try {
      HSimplex s(a, b);
      bool small = true;
      for (const auto& v : s.vertices())
        for (const auto& x : v)
          if (abs(x) > 4) small = false;
      if (small && oracle::lattice_free(s)) return s;
    } catch (const InputError&) {
    }
  }
  throw InputError("gen_lattice_free_simplex: sampling budget exhausted");
}

std::vector<HSimplex> fixed_lattice_free_corpus() {
  std::vector<HSimplex> out;
  out.emplace_back(IntMatrix{{-2, 0}, {0, -2}, {2, 2}}, IntVector{-1, -1, 3});
  // Long thin triangle strictly between the lines x2 = 0 and x2 = 1.
  out.emplace_back(IntMatrix{{0, -3}, {-1, 6}, {1, 6}}, IntVector{-1, 3, 8});
  // Corner at (1/2, 1/2, 1/2) cut by x1 + x2 + x3 <= 2.
  out.emplace_back(IntMatrix{{-2, 0, 0}, {0, -2, 0}, {0, 0, -2}, {2, 2, 2}},
                   IntVector{-1, -1, -1, 4});
  return out;
}

ConeIpInstance gen_cone_ip(std::size_t n, std::uint64_t seed, std::int64_t box_radius) {
  Rng rng(stream(5, seed));
  for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
    const auto target = static_cast<std::uint64_t>(rng.uniform(1, 8));
    IntMatrix c = gen_cone(n, target, stream(6, seed) + attempt);
    if (max_abs(c) > 5) continue;
    Cone cone(c);

    const std::size_t m = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n) + 1));
    IntMatrix a(m, n);
    std::size_t filled = 0;
    for (std::size_t tries = 0; tries < 1000 && filled < m; ++tries) {
      IntVector row(n);
      for (auto& x : row) x = rng.uniform(-5, 5);
      if (content(row) == 0 || !in_dual_cone(row, cone)) continue;
      a.set_row(filled++, row);
    }
    if (filled < m) continue;

    IntVector b(m);
    for (auto& x : b) x = rng.uniform(-5, 15);
    RatVector p(n);
    for (auto& x : p) {
      x = Rational(rng.uniform(-6, 6), rng.uniform(1, 3));
      x.canonicalize();
    }

    std::optional<IntVector> objective;
    if (rng.uniform(0, 3) != 0) {
      for (std::size_t tries = 0; tries < 1000; ++tries) {
        IntVector obj(n), neg(n);
        for (std::size_t i = 0; i < n; ++i) {
          obj[i] = rng.uniform(-5, 5);
          neg[i] = -obj[i];
        }
        if (in_dual_cone(neg, cone)) {
          objective = obj;
          break;
        }
      }
      if (!objective) continue;
    }

    // Bounded region inside the box: with ā the sum of the rows, points are
    // p + C·t with t_j·(ā·g_j) <= Σb - ā·p.
    IntVector sum_row(n, Integer(0));
    Integer sum_b = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n; ++j) sum_row[j] += a(i, j);
      sum_b += b[i];
    }
    const Rational slack = Rational(sum_b) - dot(sum_row, p);
    bool bounded = true;
    std::vector<Rational> t_max(n);
    for (std::size_t j = 0; j < n && bounded; ++j) {
      Integer along = dot(sum_row, c.column(j));
      if (along <= 0) {
        bounded = false;
        break;
      }
      t_max[j] = slack > 0 ? slack / Rational(along) : Rational(0);
    }
    if (!bounded) continue;
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
      Rational extent = abs(p[i]) + 1;
      for (std::size_t j = 0; j < n; ++j) extent += Rational(abs(c(i, j))) * t_max[j];
      if (extent > Rational(box_radius)) inside = false;
    }
    if (!inside) continue;

    ConeIpInstance inst{a, b, ShiftedCone(p, cone), objective};
    inst.validate();
    return inst;
  }
  throw InputError("gen_cone_ip: sampling budget exhausted");
}

IntMatrix gen_unimodular(std::size_t n, std::size_t ops, std::uint64_t seed) {
  Rng rng(stream(7, seed));
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  for (std::size_t t = 0; t < ops; ++t) {
    std::size_t i = pick(rng, n), j = pick(rng, n - 1);
    if (j >= i) ++j;
    long s = rng.uniform(-2, 2);
    for (std::size_t k = 0; k < n; ++k) u(k, i) += s * u(k, j);
    if (rng.uniform(0, 3) == 0) u.swap_columns(i, j);
  }
  return u;
}

}  // namespace latwidth::corpus
