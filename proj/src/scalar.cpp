#include "gnum/scalar.hpp"

#include "gnum/test_point.hpp"

#include <stdexcept>

namespace gnum {

TestPoint::TestPoint(long q, Rational i, Rational e) : level(q), iota(std::move(i)), eps(std::move(e)) {
    iota.canonicalize();
    eps.canonicalize();
    if (level < 0) throw std::invalid_argument("level must be a natural number");
    if (iota <= 0 || iota > 1) throw std::invalid_argument("iota must lie in (0,1]");
    if (eps <= 0 || eps > 1) throw std::invalid_argument("eps must lie in (0,1]");
}

std::string TestPoint::to_string() const {
    return "(q=" + std::to_string(level) + ", iota=" + gnum::to_string(iota) + ", eps=" + gnum::to_string(eps) + ")";
}

BigFloat ComplexInterval::width() const {
    BigFloat a = re.width();
    BigFloat b = im.width();
    return mpfr_cmp(a.get(), b.get()) >= 0 ? a : b;
}

ComplexInterval ScalarValue::enclosure(mpfr_prec_t bits) const {
    if (is_exact()) return ComplexInterval::from_exact(exact(), bits);
    return std::get<ComplexInterval>(v_);
}

bool ScalarValue::is_real() const {
    if (is_exact()) return exact().is_real();
    const auto& z = std::get<ComplexInterval>(v_);
    return mpfr_zero_p(z.im.lo().get()) && mpfr_zero_p(z.im.hi().get());
}

BigFloat ScalarValue::width() const {
    if (is_exact()) return BigFloat(64);
    return std::get<ComplexInterval>(v_).width();
}

double ScalarValue::real_double() const {
    if (is_exact()) return exact().real().enclose(64).midpoint().to_double();
    return std::get<ComplexInterval>(v_).re.midpoint().to_double();
}

double ScalarValue::imag_double() const {
    if (is_exact()) return exact().imag().enclose(64).midpoint().to_double();
    return std::get<ComplexInterval>(v_).im.midpoint().to_double();
}

double ScalarValue::modulus_double() const {
    if (is_exact()) return exact().modulus_enclosure(64).midpoint().to_double();
    return std::get<ComplexInterval>(v_).modulus().midpoint().to_double();
}

bool ScalarValue::certainly_zero() const {
    if (is_exact()) return exact().is_zero();
    const auto& z = std::get<ComplexInterval>(v_);
    return mpfr_zero_p(z.re.lo().get()) && mpfr_zero_p(z.re.hi().get()) && mpfr_zero_p(z.im.lo().get()) &&
           mpfr_zero_p(z.im.hi().get());
}

bool ScalarValue::certainly_nonzero() const {
    if (is_exact()) return !exact().is_zero();
    const auto& z = std::get<ComplexInterval>(v_);
    return !z.re.contains_zero() || !z.im.contains_zero();
}

std::string ScalarValue::to_string() const {
    if (is_exact()) return exact().to_string();
    const auto& z = std::get<ComplexInterval>(v_);
    if (is_real()) return z.re.to_string();
    return z.re.to_string() + " + " + z.im.to_string() + "i";
}

}  // namespace gnum
