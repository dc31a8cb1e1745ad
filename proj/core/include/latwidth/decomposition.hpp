// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "latwidth/matrix.hpp"

namespace latwidth {

/// One unimodular cone of a decomposition, with gen = root·coeffs.
struct DecompositionPiece {
  IntMatrix gen;
  RatMatrix coeffs;
  std::size_t depth = 0;  // number of reduction steps on this piece's branch
};

struct UnimodularDecomposition {
  IntMatrix root;
  std::vector<DecompositionPiece> pieces;
  std::size_t steps = 0;  // deepest branch
};

/// A replacement A[j, b] performed during a split, reported to observers.
struct SplitEvent {
  const IntMatrix& parent;
  const RatVector& y;  // b = parent·y
  std::size_t column;
  const IntMatrix& child;
};

using SplitObserver = std::function<void(const SplitEvent&)>;

/// A solution x of  A·x ≡ 0 (mod S_nn), 0 <= x < S_nn, obtained as
/// x = Q^{-1}·S^{-1}·S_nn·t mod S_nn from the Smith form A = P·S·Q.
IntVector congruence_solution(const IntMatrix& a, const IntVector& t);

/// A with column j replaced by b.
IntMatrix replace_column(const IntMatrix& a, std::size_t j, const IntVector& b);

struct SplitPiece {
  std::size_t column;
  IntMatrix gen;
};

/// Strict decomposition cone(A) = ⋃_{y_j > 0} cone(A[j, A·y]) for y >= 0,
/// y != 0, A·y integral. Checks |det A[j,b]| = y_j·|det A| on every piece.
std::vector<SplitPiece> split(const IntMatrix& a, const RatVector& y,
                              const SplitObserver& observer = {});

/// Split step for even |det A|: every piece has |det| = |det A| / 2.
/// The returned y (size n, entries 0 or 1/2) is the split vector used.
struct StepResult {
  std::vector<SplitPiece> pieces;
  // Column i of `weights` is the coefficient vector (w.r.t. A) of the column
  // inserted into the piece that replaced column `pieces[k].column == i`.
  RatMatrix weights;
};

StepResult even_step(const IntMatrix& a, const SplitObserver& observer = {});

/// Step for odd |det A| > 1: every piece has even |det| < |det A|.
/// weights(i, k) satisfies 0 <= weights(i, k) <= weights(i, i) < 1.
StepResult odd_step(const IntMatrix& a, const SplitObserver& observer = {});

struct DecomposeOptions {
  SplitObserver observer;
  bool deduplicate = true;
};

/// Non-strict unimodular decomposition of cone(A) alternating odd and even
/// steps until every piece is unimodular. Runtime checks: piece count and
/// depth bounds, coefficient growth, unimodularity of the output.
UnimodularDecomposition decompose(const IntMatrix& a, const DecomposeOptions& options = {});

/// Canonical form used for deduplication: columns sorted lexicographically.
IntMatrix canonical_columns(const IntMatrix& a);

}  // namespace latwidth
