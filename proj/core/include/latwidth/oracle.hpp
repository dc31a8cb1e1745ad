// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "latwidth/cone_ip.hpp"
#include "latwidth/cones.hpp"

namespace latwidth::oracle {

// Brute-force references. Everything here goes through plain enumeration
// and its own Cramer/barycentric arithmetic; only matrix storage and det are
// shared with the algorithms under test.

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

struct Box {
  IntVector lower;
  IntVector upper;

  Box(IntVector lo, IntVector hi);
  std::size_t dim() const { return lower.size(); }
  Integer volume() const;  // number of integer points
};

using PointPredicate = std::function<bool(const IntVector&)>;

/// Every integer point of the box satisfying the predicate, in lexicographic
/// order. Throws BudgetExceeded if the box holds more than `budget` points.
std::vector<IntVector> enum_lattice_points(const PointPredicate& pred, const Box& box,
                                           std::uint64_t budget = kDefaultBudget);

/// Visits the points without storing them.
void for_each_lattice_point(const Box& box, std::uint64_t budget,
                            const std::function<void(const IntVector&)>& visit);

struct BruteOptimum {
  IntVector point;
  Integer value;
};

/// max c·x over matching points (ties: lexicographically smallest point).
std::optional<BruteOptimum> brute_optimize(const PointPredicate& pred, const IntVector& c,
                                           const Box& box,
                                           std::uint64_t budget = kDefaultBudget);

/// Vertices of an H-simplex by Cramer's rule, vertex i dropping row i.
std::vector<RatVector> cramer_vertices(const HSimplex& s);

/// Smallest box containing the simplex, checked against the Cramer bound
/// ‖x‖∞ <= Δ_n(A b) / δ_n(A).
Box simplex_box(const HSimplex& s);
Box simplex_box(const VSimplex& s);

bool in_simplex(const HSimplex& s, const IntVector& x);
/// Barycentric membership test for conv(vertices).
bool in_simplex(const VSimplex& s, const IntVector& x);

std::vector<IntVector> lattice_points(const HSimplex& s, std::uint64_t budget = kDefaultBudget);
bool lattice_free(const HSimplex& s, std::uint64_t budget = kDefaultBudget);

struct BruteWidth {
  Rational value;
  IntVector direction;
  Integer radius;
};

/// min over nonzero integer c with ‖c‖∞ <= radius of max - min c·x over the
/// vertices. An upper bound on the lattice width; equal to it when some
/// flat direction lies in the ball.
BruteWidth brute_width(const HSimplex& s, const Integer& radius,
                       std::uint64_t budget = kDefaultBudget);

/// Punctured maximum: max c·x over (S ∩ Z^n) \ vert(S).
std::optional<BruteOptimum> brute_punctured(const VSimplex& s, const IntVector& c,
                                            std::uint64_t budget = kDefaultBudget);

/// x ∈ cone(gen) by Cramer's rule sign test.
bool in_cone(const IntMatrix& gen, const IntVector& x);

// x ∈ apex + cone(gen), by Cramer signs on the scaled difference.
bool in_shifted_cone(const ShiftedCone& shifted, const IntVector& x);

// Enumerates the box [-radius, radius]^n. Without an objective the value is 0 and
// the point is the lexicographically smallest feasible one.
std::optional<BruteOptimum> brute_cone_ip(const ConeIpInstance& inst, const Integer& radius,
                                          std::uint64_t budget = kDefaultBudget);

}  // namespace latwidth::oracle
