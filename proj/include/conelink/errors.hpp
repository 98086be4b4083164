#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace conelink {

// Errors carry a stable machine-parsable code. The CLI prints
// "error[<code>]: <message>" and maps domain_error to exit status 1,
// usage_error to exit status 2.
class coded_error : public std::runtime_error {
public:
    coded_error(std::string code, const std::string& message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// A well-formed request whose values lie outside the mathematical domain.
class domain_error : public coded_error {
public:
    using coded_error::coded_error;
};

// A malformed request (bad flags, bad ranges, unparsable numbers).
class usage_error : public coded_error {
public:
    using coded_error::coded_error;
};

// The base vector cannot come from a smooth projective base: one of the
// link-Betti differences would be negative.
class invalid_base_error : public domain_error {
public:
    explicit invalid_base_error(const std::string& message)
        : domain_error("invalid-base", message) {}
};

// Fewer than three minimal exponents: the tangent-cone factor is not a cone
// over a smooth projective hypersurface, so the link formulas do not apply.
class k_too_small_error : public domain_error {
public:
    explicit k_too_small_error(const std::string& message)
        : domain_error("k-too-small", message) {}
};

} // namespace conelink
