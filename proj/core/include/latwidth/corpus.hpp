// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "latwidth/cone_ip.hpp"
#include "latwidth/cones.hpp"

namespace latwidth::corpus {

/// Seeded generator. The engine is std::mt19937_64, whose output sequence is
/// fixed by the standard; bounded draws use rejection sampling on the raw
/// 64-bit output (no std distributions), so a seed yields the same instances
/// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// Nonsingular n×n matrix with |det| = target_det: upper triangular with the
/// prime factors of target_det spread over the diagonal and off-diagonal
/// entries in [-2, 2], then n random row and n random column operations
/// (add ± another line). Entries stay below max(target_det, 2)·4^n.
IntMatrix gen_cone(std::size_t n, std::uint64_t target_det, std::uint64_t seed);

/// Random-facet simplex: entries of A in [-coord_bound, coord_bound], vertices
/// (generally rational) inside [-coord_bound, coord_bound]^n.
HSimplex gen_simplex_h(std::size_t n, std::int64_t coord_bound, std::uint64_t seed);

/// Integer vertices in [-coord_bound, coord_bound]^n. When max_det > 0 the
/// edge determinant |det B_i| of every vertex is kept <= max_det.
VSimplex gen_simplex_v(std::size_t n, std::int64_t coord_bound, std::uint64_t seed,
                       std::uint64_t max_det = 0);

/// Facet description of an integer-vertex simplex; vertex i stays vertex i.
HSimplex to_h_form(const VSimplex& s);

/// Simplex without integer points, certified by enumeration.
HSimplex gen_lattice_free_simplex(std::size_t n, std::uint64_t seed);

/// Hand-picked lattice-free simplices, starting with
/// {-2x1 <= -1, -2x2 <= -1, 2x1 + 2x2 <= 3}.
std::vector<HSimplex> fixed_lattice_free_corpus();

/// Cone IP instance meeting the dual-cone conditions, with |det C| <= 8,
/// entries of C and A in [-5, 5], and a feasible region that is bounded and
/// lies inside [-box_radius, box_radius]^n.
ConeIpInstance gen_cone_ip(std::size_t n, std::uint64_t seed, std::int64_t box_radius = 30);

/// Random unimodular n×n matrix from `ops` elementary column operations.
IntMatrix gen_unimodular(std::size_t n, std::size_t ops, std::uint64_t seed);

}  // namespace latwidth::corpus
