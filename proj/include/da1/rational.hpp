#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace da1 {

// Exact scalar types. Rational is kept in canonical form by the backend:
// lowest terms, positive denominator, sign carried by the numerator.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numer(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denom(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rational& q) { return denom(q) == 1; }

// binomial(n, k) for n >= 0; zero outside the triangle.
inline Integer binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer r = 1;
    for (int t = 0; t < k; ++t) {
        r *= n - t;
        r /= t + 1;
    }
    return r;
}

// Falling factorial n(n-1)...(n-k+1); empty product for k = 0.
inline Integer falling(int n, int k) {
    Integer r = 1;
    for (int t = 0; t < k; ++t) r *= n - t;
    return r;
}

inline Integer factorial(int n) { return falling(n, n); }

// "num" or "num/den", matching what the expression parser accepts.
inline std::string to_string(const Rational& q) {
    if (is_integer(q)) return numer(q).str();
    return numer(q).str() + "/" + denom(q).str();
}

} // namespace da1
