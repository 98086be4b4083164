#pragma once

#include "conelink/bigint.hpp"
#include "conelink/invariants.hpp"

// Independent brute-force verifiers for the closed forms in
// invariants.hpp. Deliberately formula-disjoint: power series and product
// formulas only, so agreement with the main implementations is evidence,
// not tautology.
namespace conelink::oracle {

// Euler characteristic of the smooth degree-d hypersurface of dimension n,
// via adjunction: d * [h^n] (1+h)^{n+2} / (1+dh), computed with truncated
// exact-integer series.
BigInt euler_chern(int n, long d);

// First Betti number of a smooth plane curve of degree d: (d-1)(d-2).
BigInt genus_curve(long d);

// Exhaustive inversion scan over 1..d_max with no monotonicity shortcut.
DegreeCandidates invert_scan(int n, const BigInt& b, long d_max);

// Poincare duality for the closed odd-dimensional link: b_i = b_{2m+1-i}.
bool duality_check(const LinkBettiVector& link);

} // namespace conelink::oracle
