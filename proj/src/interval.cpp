#include "gnum/interval.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace gnum {

std::string BigFloat::to_string(int digits) const {
    if (mpfr_zero_p(v_)) return "0";
    std::vector<char> buf(static_cast<std::size_t>(digits) + 64);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, v_);
    return std::string(buf.data());
}

Interval::Interval(mpfr_prec_t bits) : lo_(bits), hi_(bits) {}

Interval Interval::point(const Rational& q, mpfr_prec_t bits) {
    Interval r(bits);
    mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
}

Interval Interval::from_bounds(BigFloat lo, BigFloat hi) {
    if (mpfr_cmp(lo.get(), hi.get()) > 0) throw std::logic_error("interval bounds out of order");
    Interval r(lo.precision());
    r.lo_ = std::move(lo);
    r.hi_ = std::move(hi);
    return r;
}

BigFloat Interval::width() const {
    BigFloat w(precision());
    mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
    return w;
}

BigFloat Interval::midpoint() const {
    BigFloat m(precision() + 1);
    mpfr_add(m.get(), hi_.get(), lo_.get(), MPFR_RNDN);
    mpfr_div_2ui(m.get(), m.get(), 1, MPFR_RNDN);
    return m;
}

bool Interval::contains_zero() const { return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0; }

BigFloat Interval::magnitude() const {
    BigFloat a(precision()), b(precision());
    mpfr_abs(a.get(), lo_.get(), MPFR_RNDU);
    mpfr_abs(b.get(), hi_.get(), MPFR_RNDU);
    return mpfr_cmp(a.get(), b.get()) >= 0 ? a : b;
}

BigFloat Interval::mignitude() const {
    BigFloat r(precision());
    if (contains_zero()) return r;
    if (strictly_positive()) mpfr_set(r.get(), lo_.get(), MPFR_RNDD);
    else mpfr_neg(r.get(), hi_.get(), MPFR_RNDD);
    return r;
}

Interval operator+(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a, const Interval& b) {
    Interval r(std::max(a.precision(), b.precision()));
    mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return r;
}

Interval operator-(const Interval& a) {
    Interval r(a.precision());
    mpfr_neg(r.lo_.get(), a.hi_.get(), MPFR_RNDD);
    mpfr_neg(r.hi_.get(), a.lo_.get(), MPFR_RNDU);
    return r;
}

Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t bits = std::max(a.precision(), b.precision());
    Interval r(bits);
    const BigFloat* xs[2] = {&a.lo_, &a.hi_};
    const BigFloat* ys[2] = {&b.lo_, &b.hi_};
    BigFloat t(bits);
    bool first = true;
    for (auto* x : xs) {
        for (auto* y : ys) {
            mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
            if (first || mpfr_cmp(t.get(), r.lo_.get()) < 0) mpfr_set(r.lo_.get(), t.get(), MPFR_RNDD);
            mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
            if (first || mpfr_cmp(t.get(), r.hi_.get()) > 0) mpfr_set(r.hi_.get(), t.get(), MPFR_RNDU);
            first = false;
        }
    }
    return r;
}

Interval Interval::abs() const {
    if (mpfr_sgn(lo_.get()) >= 0) return *this;
    if (mpfr_sgn(hi_.get()) <= 0) return -*this;
    Interval r(precision());
    r.hi_ = magnitude();
    return r;
}

Interval Interval::square() const {
    Interval m = abs();
    Interval r(precision());
    mpfr_sqr(r.lo_.get(), m.lo_.get(), MPFR_RNDD);
    mpfr_sqr(r.hi_.get(), m.hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::sqrt() const {
    Interval r(precision());
    if (mpfr_sgn(hi_.get()) < 0) throw std::domain_error("sqrt of a negative interval");
    if (mpfr_sgn(lo_.get()) > 0) mpfr_sqrt(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_sqrt(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

namespace {

// Enclosure of a 1-Lipschitz function f over [lo, hi] from one evaluation at the midpoint.
template <typename F>
Interval lipschitz_enclosure(const Interval& x, F f) {
    const mpfr_prec_t bits = x.precision();
    BigFloat lo(bits), hi(bits);
    BigFloat w = x.width();
    if (mpfr_cmp_ui(w.get(), 2) >= 0) {
        mpfr_set_si(lo.get(), -1, MPFR_RNDD);
        mpfr_set_si(hi.get(), 1, MPFR_RNDU);
        return Interval::from_bounds(std::move(lo), std::move(hi));
    }
    BigFloat mid = x.midpoint();
    BigFloat value(bits);
    f(value.get(), mid.get(), MPFR_RNDN);
    // the rounded midpoint lies in [lo, hi], so every point is within w of it
    BigFloat slack(bits);
    mpfr_set(slack.get(), w.get(), MPFR_RNDU);
    BigFloat ulp(bits);
    mpfr_set_ui_2exp(ulp.get(), 1, -static_cast<long>(bits) + 1, MPFR_RNDU);
    mpfr_add(slack.get(), slack.get(), ulp.get(), MPFR_RNDU);
    mpfr_sub(lo.get(), value.get(), slack.get(), MPFR_RNDD);
    mpfr_add(hi.get(), value.get(), slack.get(), MPFR_RNDU);
    if (mpfr_cmp_si(lo.get(), -1) < 0) mpfr_set_si(lo.get(), -1, MPFR_RNDD);
    if (mpfr_cmp_si(hi.get(), 1) > 0) mpfr_set_si(hi.get(), 1, MPFR_RNDU);
    return Interval::from_bounds(std::move(lo), std::move(hi));
}

}  // namespace

Interval Interval::sin() const {
    return lipschitz_enclosure(*this, [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) { mpfr_sin(out, in, rnd); });
}

Interval Interval::cos() const {
    return lipschitz_enclosure(*this, [](mpfr_ptr out, mpfr_srcptr in, mpfr_rnd_t rnd) { mpfr_cos(out, in, rnd); });
}

Interval Interval::log() const {
    if (mpfr_sgn(lo_.get()) <= 0) throw std::domain_error("log of a non-positive interval");
    Interval r(precision());
    mpfr_log(r.lo_.get(), lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), hi_.get(), MPFR_RNDU);
    return r;
}

Interval Interval::rational_power(const Rational& base, const Rational& exponent, mpfr_prec_t bits) {
    if (base <= 0) throw std::domain_error("rational_power needs a positive base");
    // base^(n/d) = (base^n)^(1/d); base^n is exact and the d-th root is monotone.
    const Integer& den = exponent.get_den();
    if (!den.fits_ulong_p() || !exponent.get_num().fits_slong_p())
        throw std::domain_error("exponent too large");
    Rational powered = pow(base, exponent.get_num().get_si());
    Interval r = point(powered, bits);
    const unsigned long d = den.get_ui();
    if (d != 1) {
        mpfr_rootn_ui(r.lo_.get(), r.lo_.get(), d, MPFR_RNDD);
        mpfr_rootn_ui(r.hi_.get(), r.hi_.get(), d, MPFR_RNDU);
    }
    return r;
}

std::string Interval::to_string(int digits) const {
    return "[" + lo_.to_string(digits) + ", " + hi_.to_string(digits) + "]";
}

}  // namespace gnum
