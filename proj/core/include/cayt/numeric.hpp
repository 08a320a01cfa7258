#ifndef CAYT_NUMERIC_HPP
#define CAYT_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cayt {

// Counts routinely reach k^n, so everything countable is arbitrary precision
// and averages stay exact rationals until the output boundary.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigInt rat_num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline double to_double(const Rational& r) { return static_cast<double>(r); }

inline BigInt int_pow(BigInt base, unsigned exp) {
    BigInt out = 1;
    while (exp != 0) {
        if (exp & 1u) out *= base;
        base *= base;
        exp >>= 1u;
    }
    return out;
}

} // namespace cayt

#endif
