#include "gnum/valuation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gnum/errors.hpp"
#include "gnum/interval.hpp"

namespace gnum {

std::string to_string(Mode m) { return m == Mode::Exact ? "exact" : "sampled"; }

std::string to_string(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        default: return "inconclusive";
    }
}

double Valuation::as_double() const {
    if (infinite()) return std::numeric_limits<double>::infinity();
    return mode == Mode::Exact ? value->get_d() : estimate;
}

std::string Valuation::text() const {
    if (infinite()) return "+inf";
    if (mode == Mode::Exact) return to_string(*value);
    return std::to_string(estimate);
}

int compare_valuations(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a && !b) return 0;
    if (!a) return 1;
    if (!b) return -1;
    return cmp(*a, *b) < 0 ? -1 : (cmp(*a, *b) > 0 ? 1 : 0);
}

std::optional<Rational> min_valuation(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    return compare_valuations(a, b) <= 0 ? a : b;
}

std::optional<Rational> add_valuations(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a || !b) return std::nullopt;
    return Rational(*a + *b);
}

Valuation valuation(const NormalForm& x) { return Valuation::exact(x.valuation()); }

Valuation valuation(const Germ& x, const SampleGrid& g) {
    try {
        return valuation(NormalForm::from_germ(x));
    } catch (const NotNormalizable&) {
        const SampledValuation s = sampled_valuation(x, g);
        Valuation v;
        v.mode = Mode::Sampled;
        v.sampled_infinite = s.infinite;
        v.estimate = s.estimate;
        v.band = s.band;
        return v;
    }
}

namespace {

SharpDistance from_valuation(const Valuation& v) {
    SharpDistance d;
    d.v = v;
    if (v.infinite()) return d;
    if (v.mode == Mode::Exact) {
        d.value = d.lo = d.hi = std::exp(-v.value->get_d());
    } else {
        d.value = std::exp(-v.estimate);
        d.lo = std::exp(-(v.estimate + v.band));
        d.hi = std::exp(-(v.estimate - v.band));
    }
    return d;
}

}  // namespace

std::string SharpDistance::text() const {
    if (v.infinite()) return "0";
    if (v.mode == Mode::Exact) {
        if (*v.value == 0) return "1";
        return "exp(" + to_string(Rational(-*v.value)) + ")";
    }
    return std::to_string(value);
}

SharpDistance norm_of(const NormalForm& x) { return from_valuation(valuation(x)); }
SharpDistance norm(const Germ& x, const SampleGrid& g) { return from_valuation(valuation(x, g)); }
SharpDistance dist(const Germ& x, const Germ& y, const SampleGrid& g) { return norm(x - y, g); }

Tri a_set_contains(const Germ& x, const Rational& r, const SampleGrid& g) {
    const Valuation v = valuation(x, g);
    if (v.mode == Mode::Exact) return (!v.value || r < *v.value) ? Tri::Yes : Tri::No;
    if (v.sampled_infinite) return Tri::Yes;
    const double rd = r.get_d();
    if (v.estimate - v.band > rd + 0.05) return Tri::Yes;
    if (v.estimate + v.band < rd - 0.05) return Tri::No;
    return Tri::Inconclusive;
}

bool norm_below(const std::optional<Rational>& v, const Rational& radius, bool closed) {
    if (radius <= 0) throw PreconditionError("radius must be positive");
    if (!v) return true;
    // e^{-v} < R  <=>  -v < ln R; equality only when R = 1 and v = 0
    if (radius == 1) return closed ? *v >= 0 : *v > 0;
    for (mpfr_prec_t bits = 64; bits <= 4096; bits *= 2) {
        Interval diff = Interval::point(radius, bits).log() - Interval::point(Rational(-*v), bits);
        if (diff.strictly_positive()) return true;
        if (diff.strictly_negative()) return false;
    }
    throw PrecisionUnreachable("radius comparison did not separate");
}

Tri ball_contains(const Germ& center, const Rational& radius, const Germ& x, bool closed, const SampleGrid& g) {
    if (radius <= 0) throw PreconditionError("radius must be positive");
    const Valuation v = valuation(x - center, g);
    if (v.mode == Mode::Exact) return norm_below(v.value, radius, closed) ? Tri::Yes : Tri::No;
    const SharpDistance d = from_valuation(v);
    const double r = radius.get_d();
    if (d.hi < r) return Tri::Yes;
    if (d.lo > r) return Tri::No;
    return Tri::Inconclusive;
}

std::vector<TestPoint> cell_points(const Universe& u, Minterm m, std::size_t count, long level,
                                   const Rational& iota) {
    std::vector<Rational> cand;
    for (long k = 0; k <= 80; ++k) {
        const Rational p(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(k));
        cand.push_back(p);
        cand.push_back(p * Rational(3, 4));
        cand.push_back(p * Rational(5, 8));
    }
    for (const auto& leaf : u.leaves()) {
        if (leaf.kind() != SetKind::Geom) continue;
        Rational v = 1;
        for (int n = 0; n <= 80; ++n, v *= leaf.parameter()) {
            cand.push_back(v);
            if (v < Rational(1, Integer(1) << 200)) break;
        }
    }
    std::sort(cand.begin(), cand.end(), [](const Rational& a, const Rational& b) { return b < a; });
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<TestPoint> out;
    for (auto it = cand.rbegin(); it != cand.rend() && out.size() < count; ++it) {
        TestPoint t(level, iota, *it);
        if (u.minterm_of(t) == m) out.push_back(t);
    }
    return out;
}

NullVerdict is_null(const Germ& x, const SampleGrid& g) {
    NullVerdict out;
    std::optional<NormalForm> nf;
    try {
        nf = NormalForm::from_germ(x);
    } catch (const NotNormalizable&) {
        out.mode = Mode::Sampled;
        out.null = sampled_valuation(x, g).infinite;
        return out;
    }
    const auto v = nf->valuation();
    out.null = !v;
    if (out.null) return out;
    out.a = *v + 1;
    const Universe& u = *nf->universe();
    for (Minterm m : u.near_zero()) {
        const Poly& p = nf->poly_at(m);
        if (p.empty() || p.begin()->first != *v) continue;
        for (const auto& t : cell_points(u, m, 40, u.eventual_level())) {
            const ExactScalar val = nf->eval(t);
            const Surd bound = Surd::power(t.scale(), *out.a);
            if (compare_surd((val.norm_squared()), bound * bound) >= 0) out.points.push_back(t);
            if (out.points.size() >= 5) break;
        }
        if (!out.points.empty()) break;
    }
    return out;
}

GeometricInverse geometric_inverse(const NormalForm& x, unsigned n_terms) {
    const auto v = x.valuation();
    if (v && *v <= 0) throw PreconditionError("geometric inverse needs norm(x) < 1, got V(x) = " + to_string(*v));
    GeometricInverse out;
    NormalForm term = NormalForm::constant(ExactScalar(Rational(1)));
    NormalForm sum;
    for (unsigned n = 0; n < n_terms; ++n) {
        sum = sum + term;
        term = term * x;
    }
    out.partial_sum = sum;
    const NormalForm one = NormalForm::constant(ExactScalar(Rational(1)));
    out.residual = ((one - x) * sum - one).valuation();
    out.bound = v ? std::optional<Rational>(Rational(*v * n_terms)) : std::nullopt;
    return out;
}

GeometricInverse geometric_inverse(const Germ& x, unsigned n_terms) {
    try {
        return geometric_inverse(NormalForm::from_germ(x), n_terms);
    } catch (const NotNormalizable& e) {
        throw PreconditionError(std::string("geometric inverse needs an exact norm: ") + e.what());
    }
}

}  // namespace gnum
