// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <optional>

#include "latwidth/cone_ip.hpp"
#include "latwidth/cones.hpp"

namespace latwidth {

/// Two vertices of an H-simplex with their facet data.
///
/// v is vertex `v_index` and u is vertex `u_index`. `common` holds, as
/// columns, the n-1 rows tight at both; a_v is tight at v only and a_u at u
/// only, so N(v) = cone(common, a_v) and N(u) = cone(common, a_u).
///
/// v - u = scale·direction with `direction` a primitive integer vector and
/// scale > 0, so c·(v - u) = scale·(c·direction) and layers are indexed by
/// the integer c·direction.
struct VertexPair {
  std::size_t v_index = 0;
  std::size_t u_index = 0;
  RatVector v;
  RatVector u;
  IntMatrix common;
  IntVector a_v;
  IntVector a_u;
  IntVector direction;
  Rational scale;
};

VertexPair vertex_pair(const HSimplex& s, std::size_t v_index, std::size_t u_index);

/// Largest layer index worth searching: min(a_v·g, -a_u·g) with g the
/// primitive direction. Both a_v and -a_u lie in M(v, u).
Integer layer_limit(const VertexPair& pair);

/// Lattice-free feasibility machinery for one pair, reusable across layers:
/// the unimodular change of variables sending the direction to e_1, the
/// projected (n-1)×(n-1) generator block and its unimodular decomposition.
class LayerProbe {
 public:
  explicit LayerProbe(const VertexPair& pair);

  /// Some integer c in N(v) ∩ -N(u) with c·direction = k, or nothing.
  std::optional<IntVector> find(const Integer& k) const;

  const IntMatrix& transform() const { return u_; }
  const IntMatrix& projected_generators() const { return b_proj_; }

  /// The layer set N(v) ∩ -N(u) ∩ {c·direction = k} described as
  /// (p_v + cone(common)) ∩ (p_u - cone(common)).
  RatVector layer_point_v(const Integer& k) const;
  RatVector layer_point_u(const Integer& k) const;

 private:
  VertexPair pair_;
  IntMatrix u_;       // direction^T·u_ = e_1^T
  IntMatrix u_inv_;   // first row equals direction^T
  IntMatrix b_proj_;  // rows 2..n of u_inv_·common
  std::optional<UnimodularDecomposition> decomposition_;
};

/// Layer test on the primitive direction: k >= 1 counts c·direction.
std::optional<IntVector> layer_nonempty(const VertexPair& pair, const Integer& k);

/// Layer test on the raw value c·(v - u) = value. Values that are not a
/// positive multiple of pair.scale have no integer c at all.
std::optional<IntVector> layer_nonempty_value(const VertexPair& pair, const Rational& value);

struct PairMinimum {
  Integer layer;  // k* on the primitive direction
  IntVector direction;
};

/// Smallest layer k <= min(cutoff, layer_limit(pair)) that holds an integer
/// direction of M(v, u), with its witness.
std::optional<PairMinimum> pair_minimum(const VertexPair& pair, const Integer& cutoff);

struct WidthResult {
  Rational width;
  IntVector direction;
  std::size_t v_index = 0;
  std::size_t u_index = 0;
  RatVector v;  // maximizer of direction over the simplex
  RatVector u;  // minimizer
};

/// Column-style HNF of the constraint matrix: S' = {x' : A·U·x' <= b}.
/// x = U·x' maps S' onto S; a direction c' of S' corresponds to
/// c = U^{-T}·c' of S with the same width.
struct PreprocessedSimplex {
  HSimplex simplex;
  IntMatrix transform;
};

PreprocessedSimplex preprocess_hnf(const HSimplex& s);

/// Lattice width and a flat direction. Pairs are searched in lexicographic
/// order of (v_index, u_index); ties keep the first witness found.
WidthResult width(const HSimplex& s);

/// Same, for simplices without integer points: each pair searches layers
/// only up to width δ_n(A). Throws PreconditionError if no pair succeeds
/// within that cutoff, which can only happen when the simplex does contain
/// an integer point.
WidthResult width_lattice_free(const HSimplex& s);

/// max - min of c·x over the vertices.
Rational width_along(const HSimplex& s, const IntVector& c);

}  // namespace latwidth
