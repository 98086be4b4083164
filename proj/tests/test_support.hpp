#pragma once

#include <initializer_list>
#include <vector>

#include "conelink/bigint.hpp"

namespace test_support {

inline std::vector<conelink::BigInt> big(std::initializer_list<long> values) {
    return std::vector<conelink::BigInt>(values.begin(), values.end());
}

} // namespace test_support
