#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gnum/interval.hpp"
#include "gnum/rational.hpp"

namespace gnum {

// Product of prime powers p^f with 0 < f < 1, sorted by prime. The empty key is 1.
struct RadicalKey {
    std::vector<std::pair<Integer, Rational>> factors;

    bool empty() const { return factors.empty(); }
    std::string to_string() const;
};

struct RadicalKeyLess {
    bool operator()(const RadicalKey& a, const RadicalKey& b) const;
};

// Finite Q-linear combination of canonical radicals. Distinct keys are linearly
// independent over Q, so a Surd is zero exactly when it has no terms.
class Surd {
public:
    Surd() = default;
    Surd(const Rational& q);  // NOLINT(google-explicit-constructor)
    Surd(long v) : Surd(Rational(v)) {}  // NOLINT(google-explicit-constructor)

    // base^exponent for base > 0.
    static Surd power(const Rational& base, const Rational& exponent);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    std::optional<Rational> rational_value() const;
    bool is_single_term() const { return terms_.size() == 1; }
    const std::map<RadicalKey, Rational, RadicalKeyLess>& terms() const { return terms_; }

    // Certified sign; refines the enclosure until it excludes zero.
    int sign() const;

    Surd operator-() const;
    friend Surd operator+(const Surd& a, const Surd& b);
    friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }
    friend Surd operator*(const Surd& a, const Surd& b);
    Surd& operator+=(const Surd& o) { return *this = *this + o; }
    Surd& operator*=(const Surd& o) { return *this = *this * o; }
    friend bool operator==(const Surd& a, const Surd& b);

    // Exact square root of a positive single-term surd.
    std::optional<Surd> sqrt() const;
    // Exact inverse of a nonzero single-term surd.
    std::optional<Surd> inverse() const;
    Surd abs() const { return sign() < 0 ? -*this : *this; }

    Interval enclose(mpfr_prec_t bits) const;
    std::string to_string() const;

private:
    void add_term(const RadicalKey& key, const Rational& coef);
    std::map<RadicalKey, Rational, RadicalKeyLess> terms_;
};

int compare_surd(const Surd& a, const Surd& b);

// Complex number with Surd real and imaginary parts.
class ExactScalar {
public:
    ExactScalar() = default;
    ExactScalar(Surd re, Surd im = Surd()) : re_(std::move(re)), im_(std::move(im)) {}  // NOLINT
    ExactScalar(const Rational& q) : re_(q) {}  // NOLINT
    ExactScalar(long v) : re_(Rational(v)) {}  // NOLINT

    static ExactScalar imaginary(const Rational& q) { return {Surd(), Surd(q)}; }

    const Surd& real() const { return re_; }
    const Surd& imag() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    bool is_one() const;

    ExactScalar operator-() const { return {-re_, -im_}; }
    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) { return a + (-b); }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    ExactScalar conj() const { return {re_, -im_}; }
    // |z|^2 as a real surd.
    Surd norm_squared() const { return re_ * re_ + im_ * im_; }
    // |z| when it is exactly representable.
    std::optional<Surd> modulus() const;
    std::optional<ExactScalar> inverse() const;
    // Enclosure of |z|.
    Interval modulus_enclosure(mpfr_prec_t bits) const;

    std::string to_string() const;

private:
    Surd re_, im_;
};

}  // namespace gnum
