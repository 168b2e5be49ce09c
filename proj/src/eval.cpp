#include "gnum/eval.hpp"

#include "gnum/errors.hpp"

namespace gnum {

namespace {

ComplexInterval as_interval(const ScalarValue& v, mpfr_prec_t bits) { return v.enclosure(bits); }

ComplexInterval ci_mul(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

ComplexInterval real_interval(Interval re) {
    const mpfr_prec_t bits = re.precision();
    return {std::move(re), Interval::point(Rational(0), bits)};
}

ScalarValue eval_at(const Germ& x, const TestPoint& t, mpfr_prec_t bits) {
    switch (x.kind()) {
        case GermKind::Const: return x.value();
        case GermKind::Alpha: return ExactScalar(Surd::power(t.scale(), x.exponent()));
        case GermKind::Chi: return ExactScalar(x.set().member(t) ? 1 : 0);
        case GermKind::PrimeScale: {
            auto p = prime_scale_exponent(t);
            if (!p) return ExactScalar(0);
            if (*p <= 4096) return ExactScalar(pow(t.scale(), p->get_si()));
            // huge prime exponent: enclose instead of expanding the rational
            Interval u = Interval::point(t.scale(), bits);
            BigFloat lo(bits), hi(bits);
            mpfr_pow_z(lo.get(), u.lo().get(), p->get_mpz_t(), MPFR_RNDD);
            mpfr_pow_z(hi.get(), u.hi().get(), p->get_mpz_t(), MPFR_RNDU);
            return real_interval(Interval::from_bounds(std::move(lo), std::move(hi)));
        }
        case GermKind::Osc: {
            Interval arg = Surd::power(t.scale(), -x.exponent()).enclose(bits);
            return real_interval(x.osc_kind() == OscKind::Sin ? arg.sin() : arg.cos());
        }
        case GermKind::Add: {
            std::optional<ExactScalar> exact = ExactScalar(0);
            std::optional<ComplexInterval> approx;
            for (const auto& c : x.children()) {
                ScalarValue v = eval_at(c, t, bits);
                if (v.is_exact() && exact) {
                    *exact += v.exact();
                    continue;
                }
                if (!approx) approx = as_interval(ScalarValue(*exact), bits);
                exact.reset();
                auto ci = as_interval(v, bits);
                approx = ComplexInterval{approx->re + ci.re, approx->im + ci.im};
            }
            if (exact) return *exact;
            return *approx;
        }
        case GermKind::Mul: {
            std::optional<ExactScalar> exact = ExactScalar(1);
            std::optional<ComplexInterval> approx;
            for (const auto& c : x.children()) {
                ScalarValue v = eval_at(c, t, bits);
                if (v.is_exact() && exact) {
                    *exact *= v.exact();
                    continue;
                }
                if (!approx) approx = as_interval(ScalarValue(*exact), bits);
                exact.reset();
                approx = ci_mul(*approx, as_interval(v, bits));
            }
            if (exact) return *exact;
            return *approx;
        }
        case GermKind::Neg: {
            ScalarValue v = eval_at(x.children().front(), t, bits);
            if (v.is_exact()) return -v.exact();
            auto ci = as_interval(v, bits);
            return ComplexInterval{-ci.re, -ci.im};
        }
        case GermKind::Abs: {
            ScalarValue v = eval_at(x.children().front(), t, bits);
            if (v.is_exact()) {
                if (auto m = v.exact().modulus()) return ExactScalar(*m);
                return real_interval(v.exact().modulus_enclosure(bits));
            }
            auto ci = as_interval(v, bits);
            if (v.is_real()) return real_interval(ci.re.abs());
            return real_interval(ci.modulus());
        }
        case GermKind::Conj: {
            ScalarValue v = eval_at(x.children().front(), t, bits);
            if (v.is_exact()) return v.exact().conj();
            auto ci = as_interval(v, bits);
            return ComplexInterval{ci.re, -ci.im};
        }
        case GermKind::Re: {
            ScalarValue v = eval_at(x.children().front(), t, bits);
            if (v.is_exact()) return ExactScalar(v.exact().real());
            return real_interval(as_interval(v, bits).re);
        }
        case GermKind::Im: {
            ScalarValue v = eval_at(x.children().front(), t, bits);
            if (v.is_exact()) return ExactScalar(v.exact().imag());
            return real_interval(as_interval(v, bits).im);
        }
    }
    throw std::logic_error("unknown germ kind");
}

}  // namespace

std::optional<Integer> prime_scale_exponent(const TestPoint& t) {
    const Rational u = t.scale();
    if (u.get_num() != 1 || u.get_den() < 2) return std::nullopt;
    return smallest_prime_factor(u.get_den());
}

ScalarValue eval(const Germ& x, const TestPoint& t, const Rational& prec, const EvalOptions& opts) {
    if (prec <= 0) throw PreconditionError("eval precision must be positive");
    for (mpfr_prec_t bits = opts.start_bits; bits <= opts.max_bits; bits *= 2) {
        ScalarValue v = eval_at(x, t, bits);
        if (v.is_exact()) return v;
        BigFloat w = v.width();
        if (mpfr_cmp_q(w.get(), prec.get_mpq_t()) <= 0) return v;
    }
    throw PrecisionUnreachable("enclosure wider than " + to_string(prec) + " at " + std::to_string(opts.max_bits) +
                               " bits for " + t.to_string());
}

}  // namespace gnum
