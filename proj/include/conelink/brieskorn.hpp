#pragma once

#include <vector>

#include "conelink/errors.hpp"
#include "conelink/invariants.hpp"

namespace conelink::bp {

// Exponents a_1 <= ... <= a_n of z_1^{a_1} + ... + z_n^{a_n}, each >= 2.
// Construction sorts, so every operation is invariant under permutation of
// the raw input.
class ExponentTuple {
public:
    explicit ExponentTuple(std::vector<long> raw);

    int ambient_dim() const noexcept { return static_cast<int>(exponents_.size()); }
    const std::vector<long>& exponents() const noexcept { return exponents_; }

    friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;

private:
    std::vector<long> exponents_;
};

// The tangent cone at the origin is {z_1^a + ... + z_k^a = 0} x C^{n-k},
// where a is the minimal exponent and k how many times it occurs.
struct TangentCone {
    long degree;
    int count;

    friend bool operator==(const TangentCone&, const TangentCone&) = default;
};

struct Fingerprint {
    int ambient_dim;     // n
    long tangent_degree; // a, the minimal exponent
    int tangent_count;   // k
    long multiplicity;   // = a
    int singular_dim;    // n - k, dimension of Sing of the tangent cone

    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

enum class Outcome { Distinguished, NotDistinguished };
enum class Reason { DimensionMismatch, SingularSetDimension, TangentConeDegree, None };

// Distinguished certifies the germs are not bi-Lipschitz equivalent;
// NotDistinguished only means these invariants cannot tell them apart.
struct Verdict {
    Outcome outcome;
    Reason reason;
    Fingerprint left;
    Fingerprint right;
};

const char* to_string(Outcome o);
const char* to_string(Reason r);

TangentCone tangent_cone(const ExponentTuple& t);

// The multiplicity of the germ at 0 is the minimal exponent.
long multiplicity(const ExponentTuple& t);

int singular_set_dim(const ExponentTuple& t);

Fingerprint fingerprint(const ExponentTuple& t);

// Checks the invariants in order: ambient dimension, then the count of
// minimal exponents, then the minimal exponent itself; reports the first
// mismatch.
Verdict bilipschitz_verdict(const ExponentTuple& s, const ExponentTuple& t);

// Rational Betti numbers of the link of the tangent-cone factor
// {w_1^a + ... + w_k^a = 0}, i.e. of the cone over the smooth degree-a
// hypersurface of dimension k-2. Throws k_too_small_error for k <= 2.
LinkBettiVector link_betti(const ExponentTuple& t);

} // namespace conelink::bp
