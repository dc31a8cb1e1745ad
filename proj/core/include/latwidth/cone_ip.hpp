// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "latwidth/cones.hpp"
#include "latwidth/decomposition.hpp"

namespace latwidth {

/// Integer points of P(A, b) ∩ (p + cone(C)), optionally maximizing c.
///
/// Requirements, checked by validate(): every row a of A has a·g >= 0 for
/// each generator g of C, and, when an objective is present, c·g <= 0 for
/// each generator (c is non-increasing along every recession direction of
/// the shifted cone, which makes the apex of every unimodular piece its
/// maximizer).
struct ConeIpInstance {
  IntMatrix a;
  IntVector b;
  ShiftedCone shifted;
  std::optional<IntVector> objective;

  void validate() const;

  friend bool operator==(const ConeIpInstance&, const ConeIpInstance&) = default;
};

struct ConeIpResult {
  bool feasible = false;
  IntVector point;
  std::optional<Integer> value;
};

/// Integer apex of one unimodular piece of the shifted cone.
struct LatticeApex {
  IntVector apex;
  IntMatrix gen;
};

/// (p + cone(C)) ∩ Z^n = ⋃ (x_i + cone(B_i)) ∩ Z^n over the unimodular
/// pieces B_i of cone(C), with x_i = B_i·ceil(B_i^{-1}·p).
std::vector<LatticeApex> lattice_apexes(const ShiftedCone& shifted);
std::vector<LatticeApex> lattice_apexes(const RatVector& apex,
                                        const UnimodularDecomposition& decomposition);

/// Emptiness test for P(A,b) ∩ (x + cone(B)) ∩ Z^n: nonempty iff A·x <= b.
/// Throws PreconditionError if some row of A lies outside the dual cone of B.
bool apex_feasible(const IntMatrix& a, const IntVector& b, const IntVector& x,
                   const IntMatrix& gen);

/// Throws PreconditionError when the instance requirements fail.
ConeIpResult solve(const ConeIpInstance& instance);

/// Same, reusing a decomposition of the instance's cone generators.
ConeIpResult solve(const ConeIpInstance& instance,
                   const UnimodularDecomposition& decomposition);

/// Componentwise check of A·x <= b.
bool satisfies(const IntMatrix& a, const IntVector& b, const IntVector& x);

}  // namespace latwidth
