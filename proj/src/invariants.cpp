#include "conelink/invariants.hpp"

#include <cstddef>
#include <string>
#include <utility>

namespace conelink {

namespace {

std::string shape_message(const char* what, std::size_t got) {
    return std::string(what) + " (got " + std::to_string(got) + " entries)";
}

// (x-1)^{n+2} + (-1)^{n+1}, the numerator shared by middle_betti and
// middle_betti_growth.
BigInt growth_numerator(int n, long x) {
    const int sign = (n % 2 == 0) ? -1 : 1;
    return pow_big(BigInt(x) - 1, static_cast<unsigned long>(n) + 2) + sign;
}

} // namespace

HypersurfaceClass::HypersurfaceClass(int dim, long degree) : dim_(dim), degree_(degree) {
    if (dim_ < 0) {
        throw domain_error("bad-hypersurface",
                           "hypersurface dimension must be nonnegative, got " + std::to_string(dim_));
    }
    if (degree_ < 1) {
        throw domain_error("bad-hypersurface",
                           "hypersurface degree must be positive, got " + std::to_string(degree_));
    }
}

BettiVector::BettiVector(int dim, std::vector<BigInt> values)
    : dim_(dim), values_(std::move(values)) {
    if (dim_ < 0) {
        throw domain_error("bad-betti-vector", "base dimension must be nonnegative");
    }
    validate();
}

BettiVector::BettiVector(std::vector<BigInt> values) : dim_(0), values_(std::move(values)) {
    if (values_.empty() || values_.size() % 2 == 0) {
        throw domain_error("bad-betti-vector",
                           shape_message("a base Betti vector has an odd number of entries",
                                         values_.size()));
    }
    dim_ = static_cast<int>((values_.size() - 1) / 2);
    validate();
}

void BettiVector::validate() const {
    if (values_.size() != static_cast<std::size_t>(2 * dim_ + 1)) {
        throw domain_error("bad-betti-vector",
                           shape_message("a base Betti vector needs exactly 2*dim+1 entries",
                                         values_.size()));
    }
    for (const BigInt& v : values_) {
        if (v < 0) {
            throw domain_error("bad-betti-vector", "Betti numbers are nonnegative");
        }
    }
}

BigInt BettiVector::entry(int i) const {
    if (i < 0 || i > 2 * dim_) return 0;
    return values_[static_cast<std::size_t>(i)];
}

LinkBettiVector::LinkBettiVector(int base_dim, std::vector<BigInt> values)
    : base_dim_(base_dim), values_(std::move(values)) {
    if (base_dim_ < 0) {
        throw domain_error("bad-betti-vector", "base dimension must be nonnegative");
    }
    validate();
}

LinkBettiVector::LinkBettiVector(std::vector<BigInt> values)
    : base_dim_(0), values_(std::move(values)) {
    if (values_.empty() || values_.size() % 2 != 0) {
        throw domain_error("bad-betti-vector",
                           shape_message("a link Betti vector has an even number of entries",
                                         values_.size()));
    }
    base_dim_ = static_cast<int>(values_.size() / 2 - 1);
    validate();
}

void LinkBettiVector::validate() const {
    if (values_.size() != static_cast<std::size_t>(2 * base_dim_ + 2)) {
        throw domain_error("bad-betti-vector",
                           shape_message("a link Betti vector needs exactly 2*dim+2 entries",
                                         values_.size()));
    }
    for (const BigInt& v : values_) {
        if (v < 0) {
            throw domain_error("bad-betti-vector", "Betti numbers are nonnegative");
        }
    }
}

BigInt alternating_sum(const std::vector<BigInt>& values) {
    BigInt sum = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i % 2 == 0) {
            sum += values[i];
        } else {
            sum -= values[i];
        }
    }
    return sum;
}

BigInt middle_betti(int n, long d) {
    HypersurfaceClass check(n, d);
    BigInt quotient, remainder;
    const BigInt numerator = growth_numerator(n, d);
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), numerator.get_mpz_t(),
                BigInt(d).get_mpz_t());
    if (remainder != 0) {
        // d always divides (d-1)^{n+2} + (-1)^{n+1}; reaching this line is a bug.
        throw std::logic_error("middle Betti division left a remainder");
    }
    return quotient + ((n % 2 == 0) ? 2 : -1);
}

BettiVector hypersurface_betti(const HypersurfaceClass& h) {
    const int n = h.dim();
    std::vector<BigInt> values(static_cast<std::size_t>(2 * n + 1), BigInt(0));
    for (int i = 0; i <= 2 * n; i += 2) {
        values[static_cast<std::size_t>(i)] = 1;
    }
    values[static_cast<std::size_t>(n)] = middle_betti(n, h.degree());
    return BettiVector(n, std::move(values));
}

BigInt euler_characteristic(const BettiVector& b) { return alternating_sum(b.values()); }

BigInt euler_characteristic(const LinkBettiVector& l) { return alternating_sum(l.values()); }

LinkBettiVector link_betti_from_base(const BettiVector& base) {
    const int m = base.dim();
    std::vector<BigInt> link(static_cast<std::size_t>(2 * m + 2));
    for (int i = 0; i <= m; ++i) {
        BigInt v = base.entry(i) - base.entry(i - 2);
        if (v < 0) {
            throw invalid_base_error("b_" + std::to_string(i) + " - b_" + std::to_string(i - 2) +
                                     " is negative; not the Betti vector of a smooth projective base");
        }
        link[static_cast<std::size_t>(i)] = std::move(v);
    }
    for (int i = m; i <= 2 * m; ++i) {
        BigInt v = base.entry(i) - base.entry(i + 2);
        if (v < 0) {
            throw invalid_base_error("b_" + std::to_string(i) + " - b_" + std::to_string(i + 2) +
                                     " is negative; not the Betti vector of a smooth projective base");
        }
        link[static_cast<std::size_t>(i + 1)] = std::move(v);
    }
    return LinkBettiVector(m, std::move(link));
}

LinkBettiVector link_betti_of_cone(const HypersurfaceClass& h) {
    return link_betti_from_base(hypersurface_betti(h));
}

Rational middle_betti_growth(int n, long x) {
    if (n < 0) {
        throw domain_error("bad-dimension",
                           "dimension must be nonnegative, got " + std::to_string(n));
    }
    if (x < 1) {
        throw domain_error("bad-argument",
                           "the growth function is defined for x >= 1, got " + std::to_string(x));
    }
    Rational value(growth_numerator(n, x), BigInt(x));
    value.canonicalize();
    return value;
}

DegreeCandidates degree_from_middle_betti(int n, const BigInt& b) {
    if (n < 1) {
        throw domain_error("bad-dimension",
                           "degree recovery needs dimension >= 1, got " + std::to_string(n));
    }
    DegreeCandidates out;
    if (b < 0) return out;
    for (long d = 1; d <= 2; ++d) {
        if (middle_betti(n, d) == b) out.matches.push_back(d);
    }
    for (long d = 3;; ++d) {
        const BigInt value = middle_betti(n, d);
        if (value == b) out.matches.push_back(d);
        if (value > b) break;
    }
    return out;
}

bool compare_base_betti(const BettiVector& x, const BettiVector& y) { return x == y; }

bool cone_degree_separation(int n, long p, long r) {
    if (n < 1) {
        throw domain_error("bad-dimension",
                           "cone separation needs dimension >= 1, got " + std::to_string(n));
    }
    return !(link_betti_of_cone(HypersurfaceClass(n, p)) ==
             link_betti_of_cone(HypersurfaceClass(n, r)));
}

long torsion_h2_surface(long d) {
    if (d < 1) {
        throw domain_error("bad-hypersurface",
                           "surface degree must be positive, got " + std::to_string(d));
    }
    return d;
}

} // namespace conelink
