#pragma once

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>

namespace conelink {

// All invariants are computed exactly; (d-1)^{n+2} overflows machine words
// already at modest (n, d).
using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt pow_big(const BigInt& base, unsigned long exp) {
    BigInt result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
    return result;
}

inline std::string to_decimal(const BigInt& value) { return value.get_str(); }

// Strict decimal parse: optional leading '-', then digits only. GMP's own
// string constructor silently skips whitespace, which is too lax for CLI
// input.
inline BigInt parse_decimal(const std::string& text) {
    const std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (start == text.size()) {
        throw std::invalid_argument("'" + text + "' is not a decimal integer");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw std::invalid_argument("'" + text + "' is not a decimal integer");
        }
    }
    return BigInt(text, 10);
}

} // namespace conelink
