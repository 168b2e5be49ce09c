#include "gnum/order.hpp"

#include <cmath>

#include "gnum/errors.hpp"
#include "gnum/eval.hpp"

namespace gnum {

ExactSign decompose(const NormalForm& x) {
    if (!x.is_real()) throw Error("complex-input", "decompose needs a real element; use abs for complex input");
    CellSet support{x.universe(), x.nonnegative_cells()};
    const CellSet negative = support.complement();
    const NormalForm a = support.chi();
    const NormalForm ac = negative.chi();
    return {x * a, x * ac, a - ac, support};
}

SignDecomposition decompose(const Germ& x) {
    try {
        ExactSign s = decompose(NormalForm::from_germ(x));
        return {s.pos.to_germ(), s.neg.to_germ(), s.theta.to_germ(), s.support, Mode::Exact};
    } catch (const NotNormalizable&) {
    }
    const Germ half = Germ::constant(ExactScalar(Rational(1, 2)));
    SignDecomposition out;
    out.pos = half * (x + Germ::abs(x));
    out.neg = half * (x - Germ::abs(x));
    out.mode = Mode::Sampled;
    return out;
}

QPositivity is_qpositive(const NormalForm& x) {
    if (!x.is_real()) throw Error("complex-input", "q-positivity needs a real element");
    QPositivity out;
    const Universe& u = *x.universe();
    for (Minterm m : u.near_zero()) {
        const Poly& p = x.poly_at(m);
        if (p.empty() || p.begin()->second.real().sign() > 0) continue;
        // leading term -c u^r: below -eps^b for every b > r, near 0 on this cell
        out.verdict = Tri::No;
        const Rational lead_plus(p.begin()->first + 1);
        const Rational b = lead_plus > 1 ? lead_plus : Rational(1);
        for (const auto& t : cell_points(u, m, 3, u.eventual_level())) {
            const double v = x.eval(t).real().enclose(64).midpoint().to_double();
            out.evidence.push_back({b, t, v});
        }
        return out;
    }
    out.verdict = Tri::Yes;
    return out;
}

QPositivity is_qpositive(const Germ& x, const SampleGrid& g) {
    try {
        return is_qpositive(NormalForm::from_germ(x));
    } catch (const NotNormalizable&) {
    }
    QPositivity out;
    out.mode = Mode::Sampled;
    // three consecutive windows of the grid; a violation must appear in each
    const long span = g.k_max - g.k_min + 1;
    const long w = std::max(1L, span / 3);
    for (const Rational& b : {Rational(1, 2), Rational(1), Rational(2)}) {
        for (long q : g.levels) {
            for (const auto& iota : g.iotas) {
                std::vector<SignEvidence> found;
                for (long win = 0; win < 3; ++win) {
                    const long lo = g.k_min + win * w;
                    const long hi = win == 2 ? g.k_max : lo + w - 1;
                    bool hit = false;
                    for (long k = lo; k <= hi && !hit; ++k) {
                        const Rational eps(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(k));
                        const TestPoint t(q, iota, eps);
                        const ScalarValue v = eval(x, t, g.precision);
                        if (!v.is_real()) throw Error("complex-input", "q-positivity needs a real element");
                        const Interval re = v.enclosure(128).re;
                        const Interval bound = Interval::rational_power(eps, b, 128);
                        if ((re + bound).strictly_negative()) {
                            found.push_back({b, t, v.real_double()});
                            hit = true;
                        }
                    }
                    if (!hit) break;
                }
                if (found.size() == 3) {
                    out.verdict = Tri::No;
                    out.evidence = found;
                    return out;
                }
            }
        }
    }
    return out;
}

std::string to_string(QuotientSign s) {
    switch (s) {
        case QuotientSign::NonNegative: return "non-negative";
        case QuotientSign::NonPositive: return "non-positive";
        case QuotientSign::Zero: return "zero";
        default: return "both-impossible";
    }
}

QuotientSignResult quotient_sign(const NormalForm& x, const Family& f) {
    if (!x.is_real()) throw Error("complex-input", "quotient sign needs a real element");
    if (!measurable(x, *f.algebra)) throw NotNormalizable("x is not a combination of the family's atoms");
    const ExactSign s = decompose(x);
    QuotientSignResult out{QuotientSign::BothImpossible, ideal_member(s.pos, f), ideal_member(s.neg, f)};
    if (out.pos_member.member && out.neg_member.member) out.sign = QuotientSign::Zero;
    else if (out.neg_member.member) out.sign = QuotientSign::NonNegative;
    else if (out.pos_member.member) out.sign = QuotientSign::NonPositive;
    return out;
}

bool convexity_check(const NormalForm& x, const NormalForm& y, const Family& f) {
    if (!ideal_member(x, f).member) throw PreconditionError("x is not in the ideal");
    if (is_qpositive(x.abs_class() - y.abs_class()).verdict != Tri::Yes)
        throw PreconditionError("|y| <= |x| does not hold");
    return ideal_member(y, f).member;
}

ComplexParts complex_parts(const Germ& z) { return {Germ::re(z), Germ::im(z)}; }

Germ abs_complex(const Germ& z) { return Germ::abs(z); }

}  // namespace gnum
