#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "stirmat/errors.hpp"

namespace stirmat {

using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Integer& value) { return value.str(); }

// Quotient of an exact division; a nonzero remainder is an internal bug.
inline Integer exact_div(const Integer& numerator, const Integer& denominator, const char* where) {
    Integer quotient;
    Integer remainder;
    boost::multiprecision::divide_qr(numerator, denominator, quotient, remainder);
    if (remainder != 0) {
        throw ConsistencyError(std::string(where) + ": " + numerator.str() + " is not divisible by " +
                               denominator.str());
    }
    return quotient;
}

inline Integer factorial(std::size_t n) {
    Integer r = 1;
    for (std::size_t i = 2; i <= n; ++i) r *= i;
    return r;
}

inline Integer power(unsigned base, std::size_t exponent) {
    return boost::multiprecision::pow(Integer(base), static_cast<unsigned>(exponent));
}

// n * (n-1) * ... * (n-k+1); zero once a factor hits zero.
inline Integer falling_factorial(long long n, std::size_t k) {
    Integer r = 1;
    for (std::size_t i = 0; i < k; ++i) r *= n - static_cast<long long>(i);
    return r;
}

} // namespace stirmat
