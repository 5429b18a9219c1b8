#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dreg {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k) with C(n, k) = 0 whenever k < 0, n < 0 or k > n.
inline Integer binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    Integer r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

/// Number of monomials of degree d in n variables.
inline Integer count_monomials(std::int64_t n, std::int64_t d)
{
    if (d < 0 || n < 0) {
        return 0;
    }
    if (n == 0) {
        return d == 0 ? 1 : 0;
    }
    return binomial(n + d - 1, d);
}

inline std::string to_string(const Integer& v) { return v.str(); }

} // namespace dreg
