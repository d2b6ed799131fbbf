#pragma once

#include <numeric>

namespace timmp {

template <class Range>
std::int64_t lcm_of_denominators(const Range& values) {
    std::int64_t result = 1;
    for (const Rational& v : values) {
        result = std::lcm(result, v.denominator_i64());
    }
    return result;
}

}  // namespace timmp
