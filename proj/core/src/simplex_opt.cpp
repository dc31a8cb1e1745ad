// SPDX-License-Identifier: Apache-2.0
#include "latwidth/simplex_opt.hpp"

#include <set>

#include "latwidth/cone_ip.hpp"
#include "latwidth/decomposition.hpp"
#include "latwidth/exact_linalg.hpp"

namespace latwidth {

EdgeCone edge_cone(const VSimplex& s, std::size_t i) {
  const std::size_t n = s.dim();
  if (i > n) throw InputError("edge_cone: vertex index out of range");
  EdgeCone e{i, IntMatrix(n, n), 0};
  std::size_t col = 0;
  for (std::size_t j = 0; j <= n; ++j) {
    if (j == i) continue;
    for (std::size_t r = 0; r < n; ++r) e.edges(r, col) = s.verts()(r, j) - s.verts()(r, i);
    ++col;
  }
  e.alpha = abs(det(e.edges));
  return e;
}

std::size_t lp_vertex(const VSimplex& s, const IntVector& c) {
  if (c.size() != s.dim()) throw InputError("lp_vertex: objective has wrong length");
  std::size_t best = 0;
  Integer best_value = dot(c, s.vertex(0));
  for (std::size_t i = 1; i <= s.dim(); ++i) {
    Integer v = dot(c, s.vertex(i));
    if (v > best_value) {
      best = i;
      best_value = v;
    }
  }
  return best;
}

Halfspace opposite_facet(const VSimplex& s, std::size_t i) {
  const std::size_t n = s.dim();
  if (i > n) throw InputError("opposite_facet: vertex index out of range");
  std::vector<std::size_t> others;
  for (std::size_t j = 0; j <= n; ++j)
    if (j != i) others.push_back(j);

  // Normal of the hyperplane through the other vertices: generalized cross
  // product of the n-1 edges from others[0], by cofactor expansion.
  IntVector base = s.vertex(others[0]);
  IntMatrix edges(n - 1, n);
  for (std::size_t r = 1; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) edges(r - 1, k) = s.verts()(k, others[r]) - base[k];
  IntVector a(n);
  if (n == 1) {
    a[0] = 1;
  } else {
    std::vector<std::size_t> rows(n - 1);
    for (std::size_t r = 0; r < n - 1; ++r) rows[r] = r;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<std::size_t> cols;
      for (std::size_t t = 0; t < n; ++t)
        if (t != k) cols.push_back(t);
      Integer m = det(edges.select(rows, cols));
      a[k] = (k % 2 == 0) ? m : Integer(-m);
    }
  }
  const Integer g = content(a);
  if (g == 0) throw InputError("opposite_facet: degenerate simplex");
  for (auto& x : a) x /= g;
  Integer a0 = dot(a, base);
  Integer at_i = dot(a, s.vertex(i));
  if (at_i == a0) throw InputError("opposite_facet: degenerate simplex");
  if (at_i > a0) {
    for (auto& x : a) x = -x;
    a0 = -a0;
  }
  for (auto j : others)
    LATWIDTH_CHECK(dot(a, s.vertex(j)) == a0, "opposite_facet: facet not tight at a vertex");
  return {std::move(a), std::move(a0)};
}

std::optional<PuncturedOptimum> optimize_punctured(const PuncturedSimplexInstance& inst) {
  const VSimplex& s = inst.simplex;
  const IntVector& c = inst.objective;
  const std::size_t n = s.dim();
  if (c.size() != n) throw InputError("optimize_punctured: objective has wrong length");

  Integer alpha = 0;
  for (std::size_t i = 0; i <= n; ++i) alpha = std::max(alpha, edge_cone(s, i).alpha);

  const std::size_t top = lp_vertex(s, c);
  EdgeCone cone = edge_cone(s, top);
  Halfspace h = opposite_facet(s, top);

  // |det B| <= (n+1)·Δ(vertex matrix) by expansion along the row of ones.
  LATWIDTH_CHECK(cone.alpha <= Integer(static_cast<unsigned long>(n + 1)) *
                                   minor_stats(s.verts(), n).max_abs,
                 "optimize_punctured: edge-cone determinant exceeds (n+1)·Δ(A)");

  IntMatrix facet_row(1, n);
  facet_row.set_row(0, h.a);
  ConeIpInstance inst_ip{facet_row, {h.a0},
                         ShiftedCone(to_rational(s.vertex(top)), Cone(cone.edges)), c};
  inst_ip.validate();  // a and -c lie in the dual cone of the edges

  std::set<IntVector> vertex_set;
  for (std::size_t i = 0; i <= n; ++i) vertex_set.insert(s.vertex(i));

  // Non-vertex apexes of the sub-cones that meet P, with their generators.
  std::vector<std::pair<IntVector, IntMatrix>> roots;
  UnimodularDecomposition d = decompose(cone.edges);
  for (const auto& [apex, gen] : lattice_apexes(inst_ip.shifted.apex, d)) {
    // On (y + cone(gen)) ∩ P the apex y is the maximizer. When y is a vertex
    // of S, the remaining integer points of that sub-cone are covered by the
    // sub-cones at y + g for each generator g.
    std::vector<IntVector> work{apex};
    std::set<IntVector> expanded;
    while (!work.empty()) {
      IntVector y = std::move(work.back());
      work.pop_back();
      if (!satisfies(inst_ip.a, inst_ip.b, y)) continue;
      if (!vertex_set.count(y)) {
        roots.emplace_back(std::move(y), gen);
        continue;
      }
      if (!expanded.insert(y).second) continue;
      for (std::size_t j = 0; j < n; ++j) {
        IntVector next = y;
        for (std::size_t r = 0; r < n; ++r) next[r] += gen(r, j);
        work.push_back(std::move(next));
      }
    }
  }
  if (roots.empty()) return std::nullopt;

  std::optional<Integer> top_value;
  for (const auto& [y, gen] : roots) {
    Integer v = dot(c, y);
    if (!top_value || v > *top_value) top_value = v;
  }

  // Optimal points of y + cone(gen) are y plus nonnegative integer
  // combinations of the generators orthogonal to c; walk them for the
  // lexicographically smallest non-vertex one.
  std::optional<PuncturedOptimum> best;
  for (const auto& [root, gen] : roots) {
    if (dot(c, root) != *top_value) continue;
    std::set<IntVector> seen;
    std::vector<std::size_t> flat;
    for (std::size_t j = 0; j < n; ++j)
      if (dot(c, gen.column(j)) == 0) flat.push_back(j);
    std::vector<IntVector> work{root};
    while (!work.empty()) {
      IntVector y = std::move(work.back());
      work.pop_back();
      if (!satisfies(inst_ip.a, inst_ip.b, y) || !seen.insert(y).second) continue;
      if (!vertex_set.count(y) && (!best || y < best->point))
        best = PuncturedOptimum{y, *top_value, alpha};
      for (auto j : flat) {
        IntVector next = y;
        for (std::size_t r = 0; r < n; ++r) next[r] += gen(r, j);
        work.push_back(std::move(next));
      }
    }
  }
  LATWIDTH_CHECK(best.has_value(), "optimize_punctured: optimal root vanished");
  LATWIDTH_CHECK(!vertex_set.count(best->point), "optimize_punctured: returned a vertex");
  LATWIDTH_CHECK(dot(h.a, best->point) <= h.a0, "optimize_punctured: point outside the simplex");
  return best;
}

}  // namespace latwidth
