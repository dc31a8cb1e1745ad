// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "latwidth/matrix.hpp"

namespace latwidth {

/// Simplicial cone spanned by the columns of a square nonsingular matrix.
class Cone {
 public:
  explicit Cone(IntMatrix generators);

  const IntMatrix& generators() const { return gen_; }
  std::size_t dim() const { return gen_.rows(); }

  friend bool operator==(const Cone& x, const Cone& y) { return x.gen_ == y.gen_; }

 private:
  IntMatrix gen_;
};

/// Translate of a simplicial cone by a rational apex: apex + cone.
struct ShiftedCone {
  RatVector apex;
  Cone cone;

  ShiftedCone(RatVector p, Cone c);

  friend bool operator==(const ShiftedCone&, const ShiftedCone&) = default;
};

/// Full-dimensional simplex {x : A·x <= b} with A of shape (n+1)×n.
///
/// Construction validates that every n-row subsystem is nonsingular and that
/// the point where all rows except row i are tight strictly satisfies row i.
/// Those two conditions are equivalent to the system describing a bounded
/// full-dimensional simplex. Vertex i is the vertex opposite to facet i.
class HSimplex {
 public:
  HSimplex(IntMatrix a, IntVector b);

  const IntMatrix& a() const { return a_; }
  const IntVector& b() const { return b_; }
  std::size_t dim() const { return a_.cols(); }
  const std::vector<RatVector>& vertices() const { return vertices_; }

  friend bool operator==(const HSimplex& x, const HSimplex& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  IntMatrix a_;
  IntVector b_;
  std::vector<RatVector> vertices_;
};

/// Simplex given by its n+1 vertices (columns of an n×(n+1) matrix).
class VSimplex {
 public:
  explicit VSimplex(IntMatrix verts);

  const IntMatrix& verts() const { return verts_; }
  std::size_t dim() const { return verts_.rows(); }
  IntVector vertex(std::size_t i) const { return verts_.column(i); }

  friend bool operator==(const VSimplex& x, const VSimplex& y) {
    return x.verts_ == y.verts_;
  }

 private:
  IntMatrix verts_;
};

/// x ∈ cone(gen): solves gen·t = x and checks t >= 0.
bool cone_contains(const Cone& c, const RatVector& x);

/// Vertices of an H-simplex; entry i solves the system with row i dropped.
std::vector<RatVector> vertices(const HSimplex& s);

/// Indices of rows tight at x, ascending.
std::vector<std::size_t> tight_rows(const HSimplex& s, const RatVector& x);

/// Normal cone at a vertex: generated by the transposes of the tight rows,
/// in ascending row order.
Cone normal_cone(const HSimplex& s, const RatVector& v);

/// Every row a of A satisfies a·g >= 0 for every generator g of C, i.e.
/// a^T ∈ cone((C^{-1})^T).
bool rows_in_dual_cone(const IntMatrix& a, const Cone& c);

/// Ditto for a single vector.
bool in_dual_cone(const IntVector& a, const Cone& c);

}  // namespace latwidth
