// SPDX-License-Identifier: Apache-2.0
#include "latwidth/cone_ip.hpp"

#include "latwidth/exact_linalg.hpp"

namespace latwidth {

void ConeIpInstance::validate() const {
  const std::size_t n = shifted.cone.dim();
  if (a.cols() != n) throw InputError("cone-ip: constraint matrix has wrong width");
  if (b.size() != a.rows()) throw InputError("cone-ip: right-hand side has wrong length");
  if (!rows_in_dual_cone(a, shifted.cone))
    throw PreconditionError("cone-ip: a constraint row lies outside cone((C^{-1})^T)");
  if (objective) {
    if (objective->size() != n) throw InputError("cone-ip: objective has wrong length");
    IntVector neg;
    for (const auto& ci : *objective) neg.push_back(-ci);
    if (!in_dual_cone(neg, shifted.cone))
      throw PreconditionError(
          "cone-ip: objective increases along a generator of C (need c·g <= 0)");
  }
}

bool satisfies(const IntMatrix& a, const IntVector& b, const IntVector& x) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (dot(a.row_vector(i), x) > b[i]) return false;
  return true;
}

std::vector<LatticeApex> lattice_apexes(const RatVector& p,
                                        const UnimodularDecomposition& decomposition) {
  std::vector<LatticeApex> out;
  if (is_integral(p)) {
    // An integer apex is its own lattice apex in every unimodular piece.
    const IntVector x = to_integer(p);
    for (const auto& piece : decomposition.pieces) out.push_back({x, piece.gen});
    return out;
  }
  for (const auto& piece : decomposition.pieces) {
    IntMatrix inv = inverse_unimodular(piece.gen);
    RatVector coords = mul(inv, p);
    IntVector s;
    for (const auto& q : coords) s.push_back(ceil_q(q));
    IntVector x = piece.gen * s;

    // x - p ∈ cone(B) and stepping back along any generator leaves p + cone(B).
    RatVector offset(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) offset[i] = Rational(x[i]) - p[i];
    for (const auto& t : mul(inv, offset))
      LATWIDTH_CHECK(t >= 0 && t < 1, "lattice_apexes: apex is not minimal in its piece");
    out.push_back({std::move(x), piece.gen});
  }
  return out;
}

std::vector<LatticeApex> lattice_apexes(const ShiftedCone& shifted) {
  return lattice_apexes(shifted.apex, decompose(shifted.cone.generators()));
}

bool apex_feasible(const IntMatrix& a, const IntVector& b, const IntVector& x,
                   const IntMatrix& gen) {
  if (!rows_in_dual_cone(a, Cone(gen)))
    throw PreconditionError("apex_feasible: a constraint row lies outside the dual cone");
  return satisfies(a, b, x);
}

ConeIpResult solve(const ConeIpInstance& instance,
                   const UnimodularDecomposition& decomposition) {
  instance.validate();
  if (!(decomposition.root == instance.shifted.cone.generators()))
    throw InputError("cone-ip: decomposition belongs to a different cone");
  ConeIpResult best;
  // Pieces lie inside cone(C), so validate() already put every row of A in
  // each piece's dual cone and the apex test reduces to A·x <= b.
  for (const auto& [x, gen] : lattice_apexes(instance.shifted.apex, decomposition)) {
    if (!satisfies(instance.a, instance.b, x)) continue;
    if (!instance.objective) return {true, x, std::nullopt};
    Integer v = dot(*instance.objective, x);
    if (!best.feasible || v > *best.value || (v == *best.value && x < best.point)) {
      best = {true, x, v};
    }
  }
  return best;
}

ConeIpResult solve(const ConeIpInstance& instance) {
  instance.validate();
  return solve(instance, decompose(instance.shifted.cone.generators()));
}

}  // namespace latwidth
