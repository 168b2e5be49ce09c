#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "gnum/rational.hpp"

namespace gnum {

// Owning wrapper around mpfr_t.
class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits = 64) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(BigFloat o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_string(int digits = 17) const;

private:
    mpfr_t v_;
};

// Closed real interval [lo, hi] with outward-rounded endpoints.
class Interval {
public:
    explicit Interval(mpfr_prec_t bits = 64);
    static Interval point(const Rational& q, mpfr_prec_t bits);
    static Interval from_bounds(BigFloat lo, BigFloat hi);

    const BigFloat& lo() const { return lo_; }
    const BigFloat& hi() const { return hi_; }
    mpfr_prec_t precision() const { return lo_.precision(); }

    BigFloat width() const;
    BigFloat midpoint() const;
    bool contains_zero() const;
    bool strictly_positive() const { return mpfr_sgn(lo_.get()) > 0; }
    bool strictly_negative() const { return mpfr_sgn(hi_.get()) < 0; }
    // max(|lo|, |hi|), rounded up.
    BigFloat magnitude() const;
    // min |v| over the interval, rounded down (0 if it straddles zero).
    BigFloat mignitude() const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);

    Interval abs() const;
    Interval square() const;
    Interval sqrt() const;
    Interval sin() const;
    Interval cos() const;
    Interval log() const;

    // base^exponent for a positive rational base and a rational exponent.
    static Interval rational_power(const Rational& base, const Rational& exponent, mpfr_prec_t bits);

    std::string to_string(int digits = 17) const;

private:
    BigFloat lo_, hi_;
};

}  // namespace gnum
