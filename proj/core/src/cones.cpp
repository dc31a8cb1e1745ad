// SPDX-License-Identifier: Apache-2.0
#include "latwidth/cones.hpp"

#include <numeric>

#include "latwidth/exact_linalg.hpp"

namespace latwidth {

Cone::Cone(IntMatrix generators) : gen_(std::move(generators)) {
  if (!gen_.square() || gen_.rows() == 0)
    throw InputError("cone generators must form a nonempty square matrix");
  if (det(gen_) == 0) throw InputError("cone generators are linearly dependent");
}

ShiftedCone::ShiftedCone(RatVector p, Cone c) : apex(std::move(p)), cone(std::move(c)) {
  if (apex.size() != cone.dim()) throw InputError("apex dimension does not match cone");
}

namespace {

std::vector<std::size_t> all_but(std::size_t count, std::size_t skip) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < count; ++i)
    if (i != skip) idx.push_back(i);
  return idx;
}

}  // namespace

HSimplex::HSimplex(IntMatrix a, IntVector b) : a_(std::move(a)), b_(std::move(b)) {
  const std::size_t n = a_.cols();
  if (n == 0 || a_.rows() != n + 1)
    throw InputError("H-simplex needs an (n+1)×n constraint matrix");
  if (b_.size() != n + 1) throw InputError("H-simplex right-hand side has wrong length");
  std::vector<std::size_t> cols(n);
  std::iota(cols.begin(), cols.end(), 0);
  for (std::size_t i = 0; i <= n; ++i) {
    auto rows = all_but(n + 1, i);
    IntMatrix sub = a_.select(rows, cols);
    if (det(sub) == 0) {
      std::string list;
      for (auto r : rows) list += (list.empty() ? "" : ",") + std::to_string(r + 1);
      throw InputError("not a simplex: rows " + list + " singular");
    }
    RatVector rhs;
    for (auto r : rows) rhs.emplace_back(b_[r]);
    RatVector v = solve(sub, rhs);
    if (dot(a_.row_vector(i), v) >= Rational(b_[i]))
      throw InputError("not a simplex: facet " + std::to_string(i + 1) +
                       " does not cut off a bounded full-dimensional region");
    vertices_.push_back(std::move(v));
  }
}

VSimplex::VSimplex(IntMatrix verts) : verts_(std::move(verts)) {
  const std::size_t n = verts_.rows();
  if (n == 0 || verts_.cols() != n + 1)
    throw InputError("V-simplex needs n+1 vertices in dimension n");
  IntMatrix edges(n, n);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 0; i < n; ++i) edges(i, j - 1) = verts_(i, j) - verts_(i, 0);
  if (det(edges) == 0) throw InputError("not a simplex: vertices are affinely dependent");
}

bool cone_contains(const Cone& c, const RatVector& x) {
  if (x.size() != c.dim()) throw InputError("cone_contains: dimension mismatch");
  for (const auto& t : solve(c.generators(), x))
    if (t < 0) return false;
  return true;
}

std::vector<RatVector> vertices(const HSimplex& s) { return s.vertices(); }

std::vector<std::size_t> tight_rows(const HSimplex& s, const RatVector& x) {
  if (x.size() != s.dim()) throw InputError("tight_rows: dimension mismatch");
  std::vector<std::size_t> rows;
  for (std::size_t j = 0; j < s.a().rows(); ++j)
    if (dot(s.a().row_vector(j), x) == Rational(s.b()[j])) rows.push_back(j);
  return rows;
}

Cone normal_cone(const HSimplex& s, const RatVector& v) {
  const std::size_t n = s.dim();
  for (std::size_t j = 0; j < s.a().rows(); ++j)
    if (dot(s.a().row_vector(j), v) > Rational(s.b()[j]))
      throw InputError("normal_cone: point is outside the simplex");
  auto rows = tight_rows(s, v);
  if (rows.size() != n)
    throw InputError("normal_cone: point is not a vertex (" + std::to_string(rows.size()) +
                     " tight rows)");
  IntMatrix gen(n, n);
  for (std::size_t k = 0; k < n; ++k) gen.set_column(k, s.a().row_vector(rows[k]));
  return Cone(std::move(gen));
}

bool in_dual_cone(const IntVector& a, const Cone& c) {
  const IntMatrix& g = c.generators();
  if (a.size() != g.rows()) throw InputError("in_dual_cone: dimension mismatch");
  for (std::size_t j = 0; j < g.cols(); ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < g.rows(); ++i) s += a[i] * g(i, j);
    if (s < 0) return false;
  }
  return true;
}

bool rows_in_dual_cone(const IntMatrix& a, const Cone& c) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!in_dual_cone(a.row_vector(i), c)) return false;
  return true;
}

}  // namespace latwidth
