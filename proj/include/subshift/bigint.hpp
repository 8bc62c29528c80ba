#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "subshift/errors.hpp"

namespace subshift {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_numerator(const BigRational& r) {
    return boost::multiprecision::numerator(r);
}

inline BigInt big_denominator(const BigRational& r) {
    return boost::multiprecision::denominator(r);
}

// floor(a / b) for b > 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if (q * b > a) --q;
    return q;
}

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if (q * b > a) --q;
    return q;
}

// v <- (v * m) mod d, assuming 0 <= v < d and m >= 1.  Small multipliers
// avoid division: the product is below m*d, so a short subtraction loop
// suffices.
inline void mul_small_mod(BigInt& v, unsigned long m, const BigInt& d) {
    v *= m;
    if (v >= d) {
        if (m <= 8) {
            do {
                v -= d;
            } while (v >= d);
        } else {
            v %= d;
        }
    }
}

BigInt pow_big(long long base, int exp);

// Parses "a/b" or "a"; used for CLI rational flags.
BigRational parse_rational(std::string_view text);

std::string rational_to_string(const BigRational& r);

}  // namespace subshift
