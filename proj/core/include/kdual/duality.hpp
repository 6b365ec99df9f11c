#pragma once

#include "kdual/dga.hpp"
#include "kdual/graded.hpp"
#include "kdual/report.hpp"

namespace kdual {

/// Compares D(THH(A)) with THH(B^op), B the Koszul dual of A, on w.
/// Left: homology of the linear dual of the Hochschild complex of a.
/// Right: Hochschild homology of the opposite of the Koszul dual, built from
/// a truncated bar construction. Each side vanishes outside its support, so
/// only the nonnegative part of w is computed.
///
/// a must be simply coconnective of finite total dimension. Otherwise the
/// report is marked hypothesis_violated and fails (sides that can still be
/// computed are filled in).
DualityReport verify_thh_duality(const DGAlgebra& a, const TruncationWindow& w);

/// Hochschild homology of the strict loop-algebra model of the n-sphere
/// (the free algebra on one class of degree n - 1, the Koszul dual of the
/// sphere's cochain model) against the closed-form homology of its free
/// loop space.
DualityReport free_loop_profile(int n, const TruncationWindow& w);

}  // namespace kdual
