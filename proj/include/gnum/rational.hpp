#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace gnum {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "3", "-3/4", "0.125", "1e-3" into an exact rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Canonical text: "0", "-2", "3/4".
std::string to_string(const Rational& q);

inline std::strong_ordering compare(const Rational& a, const Rational& b) {
    const int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

inline std::strong_ordering compare(const Integer& a, const Integer& b) {
    const int c = cmp(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integer(const Rational& q);

// q^n for integer n (q != 0 when n < 0).
Rational pow(const Rational& q, long n);

Integer lcm(const Integer& a, const Integer& b);

// Prime factorization of |n| (n != 0). Trial division followed by Pollard rho.
std::map<Integer, long> factor(const Integer& n);

// Factorization of a positive rational as prime -> signed exponent.
std::map<Integer, long> factor(const Rational& q);

// Smallest prime dividing n (n >= 2).
Integer smallest_prime_factor(const Integer& n);

double to_double(const Rational& q);

struct RationalLess {
    bool operator()(const Rational& a, const Rational& b) const { return cmp(a, b) < 0; }
};

}  // namespace gnum
