#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "polycount/errors.hpp"

namespace polycount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// 50 decimal digits; used where double precision is not enough (threshold
// margins near zero, logs of exact rationals).
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational result = 1;
    Rational b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

// Natural log of a positive rational, computed at BigFloat precision.
inline BigFloat log_rational(const Rational& value) {
    if (value <= 0) throw PreconditionError("log_rational: value must be positive");
    const BigFloat num(boost::multiprecision::numerator(value));
    const BigFloat den(boost::multiprecision::denominator(value));
    return boost::multiprecision::log(num) - boost::multiprecision::log(den);
}

inline std::string rational_to_string(const Rational& value) {
    return value.str();
}

inline Rational rational_from_string(const std::string& text) {
    try {
        return Rational(text);
    } catch (const std::exception&) {
        throw PreconditionError("not a rational: '" + text + "'");
    }
}

} // namespace polycount
