#pragma once

#include <string>
#include <variant>

#include "gnum/interval.hpp"
#include "gnum/surd.hpp"

namespace gnum {

struct ComplexInterval {
    Interval re, im;

    static ComplexInterval from_exact(const ExactScalar& z, mpfr_prec_t bits) {
        return {z.real().enclose(bits), z.imag().enclose(bits)};
    }
    mpfr_prec_t precision() const { return re.precision(); }
    // Larger of the two component widths.
    BigFloat width() const;
    Interval modulus() const { return (re.square() + im.square()).sqrt(); }
};

// Result of evaluating a germ at a test point: exact, or a certified enclosure.
class ScalarValue {
public:
    ScalarValue(ExactScalar z) : v_(std::move(z)) {}  // NOLINT(google-explicit-constructor)
    ScalarValue(ComplexInterval z) : v_(std::move(z)) {}  // NOLINT(google-explicit-constructor)

    bool is_exact() const { return std::holds_alternative<ExactScalar>(v_); }
    const ExactScalar& exact() const { return std::get<ExactScalar>(v_); }
    ComplexInterval enclosure(mpfr_prec_t bits = 128) const;
    // Certifiably real: exact with zero imaginary part, or an enclosure whose imaginary part is the point 0.
    bool is_real() const;

    BigFloat width() const;
    double real_double() const;
    double imag_double() const;
    double modulus_double() const;
    // Certified: the value is zero / nonzero. Both false means undecided at this precision.
    bool certainly_zero() const;
    bool certainly_nonzero() const;

    std::string to_string() const;

private:
    std::variant<ExactScalar, ComplexInterval> v_;
};

}  // namespace gnum
