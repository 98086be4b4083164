#include "conelink/oracles.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace conelink::oracle {

BigInt euler_chern(int n, long d) {
    HypersurfaceClass check(n, d);
    const std::size_t terms = static_cast<std::size_t>(n) + 1;

    // (1+h)^{n+2} truncated at order n, built by repeated multiplication.
    std::vector<BigInt> binomial(terms, BigInt(0));
    binomial[0] = 1;
    for (int rep = 0; rep < n + 2; ++rep) {
        for (std::size_t i = terms; i-- > 1;) {
            binomial[i] += binomial[i - 1];
        }
    }

    // 1/(1+dh) as the geometric series sum_j (-d)^j h^j.
    std::vector<BigInt> inverse(terms, BigInt(0));
    inverse[0] = 1;
    for (std::size_t j = 1; j < terms; ++j) {
        inverse[j] = inverse[j - 1] * (-d);
    }

    BigInt coefficient = 0;
    for (std::size_t j = 0; j < terms; ++j) {
        coefficient += binomial[j] * inverse[terms - 1 - j];
    }
    return coefficient * d;
}

BigInt genus_curve(long d) {
    if (d < 1) {
        throw domain_error("bad-hypersurface",
                           "curve degree must be positive, got " + std::to_string(d));
    }
    return BigInt(d - 1) * BigInt(d - 2);
}

DegreeCandidates invert_scan(int n, const BigInt& b, long d_max) {
    if (d_max < 1) {
        throw domain_error("bad-argument",
                           "scan bound must be positive, got " + std::to_string(d_max));
    }
    DegreeCandidates out;
    for (long d = 1; d <= d_max; ++d) {
        if (middle_betti(n, d) == b) out.matches.push_back(d);
    }
    return out;
}

bool duality_check(const LinkBettiVector& link) {
    const std::vector<BigInt>& v = link.values();
    for (std::size_t i = 0; i < v.size() / 2; ++i) {
        if (v[i] != v[v.size() - 1 - i]) return false;
    }
    return true;
}

} // namespace conelink::oracle
