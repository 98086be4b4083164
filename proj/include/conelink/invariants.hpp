#pragma once

#include <vector>

#include "conelink/bigint.hpp"
#include "conelink/errors.hpp"

namespace conelink {

// A smooth degree-d hypersurface of complex dimension n in projective
// (n+1)-space. Valid by construction: n >= 0, d >= 1.
class HypersurfaceClass {
public:
    HypersurfaceClass(int dim, long degree);

    int dim() const noexcept { return dim_; }
    long degree() const noexcept { return degree_; }

    friend bool operator==(const HypersurfaceClass&, const HypersurfaceClass&) = default;

private:
    int dim_;
    long degree_;
};

// Rational Betti numbers b_0..b_{2m} of a compact base of complex
// dimension m. Entries are nonnegative and the length is exactly 2m+1.
class BettiVector {
public:
    BettiVector(int dim, std::vector<BigInt> values);
    // Deduces the dimension from the (odd) length.
    explicit BettiVector(std::vector<BigInt> values);

    int dim() const noexcept { return dim_; }
    const std::vector<BigInt>& values() const noexcept { return values_; }

    // b_i with the convention b_i = 0 for i < 0 or i > 2m.
    BigInt entry(int i) const;

    friend bool operator==(const BettiVector&, const BettiVector&) = default;

private:
    void validate() const;

    int dim_;
    std::vector<BigInt> values_;
};

// Rational Betti numbers b_0..b_{2m+1} of the link of a cone over an
// m-dimensional base. Length is exactly 2m+2; entries are nonnegative.
// (A zero alternating sum holds for every vector produced from a valid
// base, but is not forced on raw values.)
class LinkBettiVector {
public:
    LinkBettiVector(int base_dim, std::vector<BigInt> values);
    explicit LinkBettiVector(std::vector<BigInt> values);

    int base_dim() const noexcept { return base_dim_; }
    const std::vector<BigInt>& values() const noexcept { return values_; }

    friend bool operator==(const LinkBettiVector&, const LinkBettiVector&) = default;

private:
    void validate() const;

    int base_dim_;
    std::vector<BigInt> values_;
};

// All degrees consistent with a given middle Betti number, ascending.
// At most two matches are possible; two happens only as the {1, 2} tie in
// odd dimension, where the growth function takes the same value at 1 and 2.
struct DegreeCandidates {
    std::vector<long> matches;

    friend bool operator==(const DegreeCandidates&, const DegreeCandidates&) = default;
};

BigInt alternating_sum(const std::vector<BigInt>& values);

// b_n of the smooth degree-d hypersurface of dimension n:
// ((d-1)^{n+2} + (-1)^{n+1}) / d + (3(-1)^n + 1) / 2, with the division
// always exact.
BigInt middle_betti(int n, long d);

// Full Betti vector: 1 in even degrees, 0 in odd degrees, middle_betti in
// degree n.
BettiVector hypersurface_betti(const HypersurfaceClass& h);

BigInt euler_characteristic(const BettiVector& b);
BigInt euler_characteristic(const LinkBettiVector& l);

// Betti numbers of the link of the cone over a base with Betti vector
// `base`: b_i(L) = b_i(X) - b_{i-2}(X) for i <= m, and
// b_{i+1}(L) = b_i(X) - b_{i+2}(X) for i >= m. The two ranges overlap in i
// but fill disjoint output indices (0..m and m+1..2m+1). Throws
// invalid_base_error if any difference is negative.
LinkBettiVector link_betti_from_base(const BettiVector& base);

// link_betti_from_base composed with hypersurface_betti. Never throws
// invalid_base_error for a valid hypersurface class.
LinkBettiVector link_betti_of_cone(const HypersurfaceClass& h);

// ((x-1)^{n+2} + (-1)^{n+1}) / x as an exact rational. This is the strictly
// increasing (on integers >= 2) function whose values drive degree
// recovery; at integer x the result is always an integer.
Rational middle_betti_growth(int n, long x);

// Every d >= 1 with middle_betti(n, d) = b, found by an ascending scan that
// checks d = 1 and d = 2 explicitly and stops as soon as the value exceeds
// b at some d >= 3 (complete by strict monotonicity on integers >= 2).
DegreeCandidates degree_from_middle_betti(int n, const BigInt& b);

// True iff the two base vectors agree in dimension and every entry.
// Cones over bases with different Betti vectors are not homeomorphic.
bool compare_base_betti(const BettiVector& x, const BettiVector& y);

// True iff the cones of degree p and r over dimension-n hypersurface bases
// have different link Betti vectors. Rational coefficients cannot separate
// p = 1 from r = 2 in odd dimension (the lens-space torsion is invisible).
bool cone_degree_separation(int n, long p, long r);

// Order of the torsion of H^2 of the punctured cone of a homogeneous
// surface of degree d: exactly d (1 means torsion free).
long torsion_h2_surface(long d);

} // namespace conelink
