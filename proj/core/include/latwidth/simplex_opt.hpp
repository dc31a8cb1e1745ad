// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>

#include "latwidth/cones.hpp"

namespace latwidth {

struct PuncturedSimplexInstance {
  VSimplex simplex;
  IntVector objective;
};

/// Edges leaving vertex i as columns (vertex order, vertex i skipped).
struct EdgeCone {
  std::size_t vertex = 0;
  IntMatrix edges;
  Integer alpha;  // |det(edges)|
};

EdgeCone edge_cone(const VSimplex& s, std::size_t i);

/// Vertex maximizing c; ties go to the lowest index.
std::size_t lp_vertex(const VSimplex& s, const IntVector& c);

/// Primitive inequality a·x <= a0 tight at every vertex except i and strict
/// at vertex i.
struct Halfspace {
  IntVector a;
  Integer a0;
};

Halfspace opposite_facet(const VSimplex& s, std::size_t i);

struct PuncturedOptimum {
  IntVector point;
  Integer value;
  Integer alpha;  // max_i |det B_i|, reported as instance metadata
};

/// max c·x over (S ∩ Z^n) \ vert(S); nothing if that set is empty.
/// Ties are broken toward the lexicographically smallest point.
std::optional<PuncturedOptimum> optimize_punctured(const PuncturedSimplexInstance& inst);

}  // namespace latwidth
