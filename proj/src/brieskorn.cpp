#include "conelink/brieskorn.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace conelink::bp {

ExponentTuple::ExponentTuple(std::vector<long> raw) : exponents_(std::move(raw)) {
    if (exponents_.empty()) {
        throw domain_error("bad-exponent", "an exponent tuple needs at least one entry");
    }
    for (long a : exponents_) {
        if (a < 2) {
            throw domain_error("bad-exponent",
                               "every exponent must be >= 2, got " + std::to_string(a));
        }
    }
    std::sort(exponents_.begin(), exponents_.end());
}

const char* to_string(Outcome o) {
    return o == Outcome::Distinguished ? "Distinguished" : "NotDistinguished";
}

const char* to_string(Reason r) {
    switch (r) {
        case Reason::DimensionMismatch: return "DimensionMismatch";
        case Reason::SingularSetDimension: return "SingularSetDimension";
        case Reason::TangentConeDegree: return "TangentConeDegree";
        case Reason::None: return "None";
    }
    return "None";
}

TangentCone tangent_cone(const ExponentTuple& t) {
    const std::vector<long>& a = t.exponents();
    int count = 1;
    while (count < static_cast<int>(a.size()) && a[static_cast<std::size_t>(count)] == a[0]) {
        ++count;
    }
    return TangentCone{a[0], count};
}

long multiplicity(const ExponentTuple& t) { return t.exponents().front(); }

int singular_set_dim(const ExponentTuple& t) {
    return t.ambient_dim() - tangent_cone(t).count;
}

Fingerprint fingerprint(const ExponentTuple& t) {
    const TangentCone cone = tangent_cone(t);
    return Fingerprint{t.ambient_dim(), cone.degree, cone.count, cone.degree,
                       t.ambient_dim() - cone.count};
}

Verdict bilipschitz_verdict(const ExponentTuple& s, const ExponentTuple& t) {
    const Fingerprint left = fingerprint(s);
    const Fingerprint right = fingerprint(t);
    Reason reason = Reason::None;
    if (left.ambient_dim != right.ambient_dim) {
        reason = Reason::DimensionMismatch;
    } else if (left.tangent_count != right.tangent_count) {
        reason = Reason::SingularSetDimension;
    } else if (left.tangent_degree != right.tangent_degree) {
        reason = Reason::TangentConeDegree;
    }
    const Outcome outcome =
        reason == Reason::None ? Outcome::NotDistinguished : Outcome::Distinguished;
    return Verdict{outcome, reason, left, right};
}

LinkBettiVector link_betti(const ExponentTuple& t) {
    const TangentCone cone = tangent_cone(t);
    if (cone.count <= 2) {
        throw k_too_small_error("the minimal exponent occurs only " + std::to_string(cone.count) +
                                " time(s); the link formulas need at least 3");
    }
    return link_betti_of_cone(HypersurfaceClass(cone.count - 2, cone.degree));
}

} // namespace conelink::bp
