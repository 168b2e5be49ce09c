#pragma once

#include <optional>

#include "gnum/germ.hpp"
#include "gnum/scalar.hpp"
#include "gnum/test_point.hpp"

namespace gnum {

struct EvalOptions {
    mpfr_prec_t start_bits = 64;
    // Oscillator arguments needing more working precision than this raise PrecisionUnreachable.
    mpfr_prec_t max_bits = 1 << 14;
};

// Value of the representative at t. Exact unless an oscillator or an inexact modulus is involved,
// in which case the enclosure has width at most prec.
ScalarValue eval(const Germ& x, const TestPoint& t, const Rational& prec = Rational(1, 1UL << 60),
                 const EvalOptions& opts = {});

// The exponent used by the prime-scale germ at t; empty when (iota*eps)^-1 is not an integer >= 2.
std::optional<Integer> prime_scale_exponent(const TestPoint& t);

}  // namespace gnum
