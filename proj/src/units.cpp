#include "gnum/units.hpp"

#include <algorithm>
#include <cmath>

#include "gnum/errors.hpp"
#include "gnum/eval.hpp"

namespace gnum {

CellSet CellSet::complement() const {
    CellSet out{universe, {}};
    for (Minterm m : universe->satisfiable())
        if (!cells.count(m)) out.cells.insert(m);
    return out;
}

bool CellSet::subset_of(const CellSet& other) const {
    if (universe->signature() != other.universe->signature())
        throw std::logic_error("cell sets over different universes");
    return std::includes(other.cells.begin(), other.cells.end(), cells.begin(), cells.end());
}

bool below_power_near_zero(const Poly& p, const Rational& a) {
    if (p.empty()) return true;
    Poly conj;
    for (const auto& [e, c] : p) conj.emplace(e, c.conj());
    Poly q = poly_mul(p, conj);
    q = poly_add(q, Poly{{Rational(2 * a), ExactScalar(Rational(-1))}});
    if (q.empty()) return false;
    return q.begin()->second.real().sign() < 0;
}

CellSet zero_set(const NormalForm& x) { return {x.universe(), x.zero_cells()}; }

CellSet n_a_set(const NormalForm& x, const Rational& a) {
    CellSet out{x.universe(), {}};
    for (Minterm m : x.universe()->satisfiable())
        if (below_power_near_zero(x.poly_at(m), a)) out.cells.insert(m);
    return out;
}

namespace {

Rational dyadic_below(double v) {
    // largest 2^-j not above v, as a safe rational lower bound
    if (!(v > 0)) return Rational(0);
    long j = 0;
    while (std::ldexp(1.0, static_cast<int>(-j)) > v) ++j;
    return Rational(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(j));
}

double coef_modulus(const ExactScalar& c, bool upper) {
    Interval m = c.modulus_enclosure(128);
    return upper ? mpfr_get_d(m.hi().get(), MPFR_RNDU) : mpfr_get_d(m.lo().get(), MPFR_RNDD);
}

bool is_null_or_throw(const NormalForm& x) {
    if (x.is_null()) throw PreconditionError("null-input: x is null");
    return false;
}

}  // namespace

UnitVerdict is_unit(const NormalForm& x) {
    is_null_or_throw(x);
    UnitVerdict out;
    const Universe& u = *x.universe();
    CellSet zeros{x.universe(), {}};
    for (Minterm m : u.near_zero())
        if (x.poly_at(m).empty()) zeros.cells.insert(m);
    if (!zeros.cells.empty()) {
        // every zero cell of the representative, so x * chi(S) vanishes identically
        out.obstruction = zero_set(x);
        return out;
    }
    out.unit = true;
    Rational r_max;
    bool first = true;
    for (Minterm m : u.near_zero()) {
        const Rational& r0 = x.poly_at(m).begin()->first;
        if (first || r0 > r_max) r_max = r0;
        first = false;
    }
    UnitWitness w{r_max + 1, u.eventual_level(), Rational(1)};
    double eta = 1;
    for (Minterm m : u.near_zero()) {
        const Poly& p = x.poly_at(m);
        const double c0 = coef_modulus(p.begin()->second, false);
        double rest = 0;
        double gap = 0;
        for (auto it = std::next(p.begin()); it != p.end(); ++it) {
            rest += coef_modulus(it->second, true);
            const double g = Rational(it->first - p.begin()->first).get_d();
            if (gap == 0 || g < gap) gap = g;
        }
        double cell = std::min(1.0, c0 / 2);
        if (rest > 0) cell = std::min(cell, std::pow(c0 / (2 * rest), 1 / gap));
        eta = std::min(eta, cell);
    }
    w.eta = std::min(dyadic_below(eta * 0.999), u.eta_star());
    out.witness = w;
    return out;
}

UnitVerdict is_unit(const Germ& x, const SampleGrid& g) {
    try {
        return is_unit(NormalForm::from_germ(x));
    } catch (const NotNormalizable&) {
    }
    const SampledValuation sv = sampled_valuation(x, g);
    if (sv.infinite) throw PreconditionError("null-input: every sample is zero");
    UnitVerdict out;
    out.mode = Mode::Sampled;
    const Rational r(static_cast<long>(std::ceil(sv.estimate + sv.band)) + 1);
    out.unit = true;
    for (long q : g.levels) {
        for (const auto& iota : g.iotas) {
            for (long k = (g.k_min + g.k_max + 1) / 2; k <= g.k_max; ++k) {
                const TestPoint t(q, iota, Rational(Integer(1), Integer(1) << static_cast<mp_bitcnt_t>(k)));
                const ScalarValue v = eval(x, t, g.precision);
                if (v.certainly_zero() || v.modulus_double() < std::pow(t.scale().get_d(), r.get_d()))
                    out.unit = false;
            }
        }
    }
    if (out.unit) out.witness = UnitWitness{r, 0, Rational(Integer(1), Integer(1) << (g.k_min + g.k_max + 1) / 2)};
    return out;
}

namespace {

void require_non_unit(const NormalForm& x) {
    is_null_or_throw(x);
    if (is_unit(x).unit) throw PreconditionError("x is a unit");
}

// Smallest a > after (and >= 1) with restrict ∩ N_a(x) in S_f.
std::optional<std::pair<long, CellSet>> next_level(const NormalForm& x, const CellSet& restrict, long after) {
    for (long a = std::max(1L, after + 1); a <= kMaxA; ++a) {
        CellSet s = n_a_set(x, Rational(a));
        CellSet cut{x.universe(), {}};
        std::set_intersection(s.cells.begin(), s.cells.end(), restrict.cells.begin(), restrict.cells.end(),
                              std::inserter(cut.cells, cut.cells.end()));
        if (cut.in_sf()) return std::make_pair(a, cut);
    }
    return std::nullopt;
}

}  // namespace

ApproxCase approx_decompose(const NormalForm& x, long max_n) {
    if (max_n < 1) throw PreconditionError("max_n must be at least 1");
    require_non_unit(x);
    ApproxCase out;
    CellSet all{x.universe(), x.universe()->satisfiable()};
    auto first = next_level(x, all, 0);
    if (!first) throw NotFound("no a <= 64 with N_a(x) in S_f");
    out.steps.push_back({first->first, first->second});
    while (true) {
        const ApproxStep& cur = out.steps.back();
        if (x.restricted(cur.set.cells).is_null()) {
            out.case_a = true;
            return out;
        }
        if (static_cast<long>(out.steps.size()) >= max_n) return out;
        auto next = next_level(x, cur.set, cur.a);
        if (!next) throw NotFound("chain step found no a <= 64");
        out.steps.push_back({next->first, next->second});
    }
}

UnitApprox unit_approx_seq(const NormalForm& x, long n) {
    if (n < 1) throw PreconditionError("n must be at least 1");
    UnitApprox out;
    if (x.is_null()) {
        out.kind = "zero";
        out.value = NormalForm::alpha(Rational(n));
    } else if (is_unit(x).unit) {
        out.kind = "unit";
        out.value = x;
    } else {
        ApproxCase c = approx_decompose(x, n);
        const ApproxStep& s = c.last();
        const long scale = c.case_a ? n : s.a;
        const NormalForm chi = s.set.chi();
        const NormalForm one = NormalForm::constant(ExactScalar(Rational(1)));
        out.value = x * (one - chi) + NormalForm::alpha(Rational(scale)) * chi;
        out.kind = c.case_a ? "case-a" : "case-b";
        out.step = s;
        out.bound = c.case_a ? std::optional<Rational>(Rational(n))
                             : min_valuation(Rational(s.a), x.restricted(s.set.cells).valuation());
    }
    out.dist = (out.value - x).valuation();
    if (out.kind == "zero") out.bound = Rational(n);
    if (out.kind == "unit") out.bound = std::nullopt;
    return out;
}

Unitized unitize(const NormalForm& x) {
    require_non_unit(x);
    CellSet all{x.universe(), x.universe()->satisfiable()};
    auto found = next_level(x, all, 0);
    if (!found) throw NotFound("no a <= 64 with N_a(x) in S_f");
    const NormalForm e = found->second.chi();
    const NormalForm one = NormalForm::constant(ExactScalar(Rational(1)));
    return {found->first, x * (one - e) + e, e, found->second};
}

RecoveredIdempotent idempotent_to_chi(const NormalForm& e) {
    const NormalForm one = NormalForm::constant(ExactScalar(Rational(1)));
    if (!(e * e - e).is_null()) throw Error("not-idempotent", "e^2 - e is not null");
    if (e.is_null()) throw Error("not-idempotent", "e is null");
    if ((e - one).is_null()) throw Error("not-idempotent", "e - 1 is null");
    RecoveredIdempotent out;
    out.set = n_a_set(e, Rational(out.a)).complement();
    if (!(e - out.set.chi()).is_null()) throw std::logic_error("recovered set does not match the idempotent");
    return out;
}

Germ prime_scale_witness() { return Germ::prime_scale(); }

namespace {

PrimeScaleSample sample_at(const Germ& w, const Rational& eps) {
    const TestPoint t(0, Rational(1), eps);
    return {t, prime_scale_exponent(t), eval(w, t)};
}

}  // namespace

std::vector<PrimeScaleSample> prime_scale_diagnostic(const Integer& p, int n_points) {
    const Germ w = prime_scale_witness();
    std::vector<PrimeScaleSample> out;
    for (int n = 1; n <= n_points; ++n) out.push_back(sample_at(w, pow(Rational(1) / Rational(p), n)));
    return out;
}

std::vector<PrimeScaleSample> prime_scale_mixed_diagnostic(int n_points) {
    const Germ w = prime_scale_witness();
    std::vector<PrimeScaleSample> out;
    Integer p = 2;
    for (int n = 0; n < n_points; ++n) {
        out.push_back(sample_at(w, Rational(Integer(1), p)));
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    return out;
}

}  // namespace gnum
