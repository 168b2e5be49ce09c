#include "gnum/suites.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "gnum/corpus.hpp"
#include "gnum/errors.hpp"
#include "gnum/eval.hpp"
#include "gnum/families.hpp"
#include "gnum/order.hpp"
#include "gnum/oracle.hpp"
#include "gnum/parser.hpp"
#include "gnum/units.hpp"
#include "gnum/valuation.hpp"

namespace gnum {

void PropertyCheck::record(bool ok, const std::function<Json()>& detail) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) counterexample = detail();
}

PropertyCheck& SuiteReport::property(const std::string& n) {
    for (auto& p : properties)
        if (p.name == n) return p;
    properties.push_back({n, 0, 0, nullptr});
    return properties.back();
}

bool SuiteReport::pass() const {
    return !properties.empty() &&
           std::all_of(properties.begin(), properties.end(), [](const PropertyCheck& p) { return p.pass(); });
}

Json SuiteReport::to_json() const {
    Json out;
    out["schema"] = kSchema;
    out["suite"] = name;
    out["statement"] = statement;
    out["pass"] = pass();
    out["properties"] = Json::array();
    for (const auto& p : properties) {
        Json j{{"name", p.name}, {"checked", p.checked}, {"failed", p.failed}, {"pass", p.pass()}};
        if (p.failed) j["counterexample"] = p.counterexample;
        out["properties"].push_back(j);
    }
    if (!tables.empty()) out["tables"] = tables;
    return out;
}

namespace {

const NormalForm& one() {
    static const NormalForm v = NormalForm::constant(ExactScalar(Rational(1)));
    return v;
}

NormalForm nf(const std::string& expr) { return normalize(parse_germ(expr)); }

Json show(const NormalForm& x) { return format(x.to_germ()); }

bool ge(const std::optional<Rational>& a, const std::optional<Rational>& b) { return compare_valuations(a, b) >= 0; }
bool eq(const std::optional<Rational>& a, const std::optional<Rational>& b) { return compare_valuations(a, b) == 0; }

std::vector<NormalForm> corpus(std::uint64_t seed, std::size_t n, const std::vector<SetDescriptor>& atoms,
                               CorpusOptions o = {}) {
    std::mt19937_64 rng(seed);
    std::vector<NormalForm> out;
    while (out.size() < n) out.push_back(random_normal_form(rng, atoms, o));
    return out;
}

// Null elements of varied shape over the same atoms.
std::vector<NormalForm> null_corpus() {
    return {NormalForm(), nf("alpha(1)*chi(~T4)"), nf("3*alpha(-2)*chi(G2 & G3)"),
            nf("chi(D4_0 & ~T16) - alpha(2)*chi(~T4)"), nf("chi(levels(0, 3))")};
}

// ---------------------------------------------------------------- valuation and metric

SuiteReport prop_valor() {
    SuiteReport r;
    const auto xs = corpus(11, 200, dyadic_atoms(4));
    const auto nulls = null_corpus();
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(xs.size()) - 1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const NormalForm& x = xs[i];
        const NormalForm& y = xs[static_cast<std::size_t>(pick(rng))];
        const auto vx = x.valuation(), vy = y.valuation();
        for (const Rational& rr : {Rational(2), Rational(-3, 2), Rational(1, 3)}) {
            r.property("V(alpha_r x) = r + V(x)").record(eq(x.times_alpha(rr).valuation(), add_valuations(rr, vx)),
                                                         [&] { return Json{{"x", show(x)}, {"r", to_string(rr)}}; });
        }
        r.property("V(xy) >= V(x) + V(y)").record(ge((x * y).valuation(), add_valuations(vx, vy)),
                                                  [&] { return Json{{"x", show(x)}, {"y", show(y)}}; });
        r.property("V(x+y) >= min(V(x), V(y))").record(ge((x + y).valuation(), min_valuation(vx, vy)),
                                                       [&] { return Json{{"x", show(x)}, {"y", show(y)}}; });
        const NormalForm& n = nulls[i % nulls.size()];
        r.property("V(x+n) = V(x) for null n").record(eq((x + n).valuation(), vx),
                                                      [&] { return Json{{"x", show(x)}, {"n", show(n)}}; });
        r.property("V(-x) = V(x)").record(eq((-x).valuation(), vx), [&] { return Json{{"x", show(x)}}; });
        r.property("V(x) = +inf iff x null").record(x.is_null() == !vx.has_value(),
                                                    [&] { return Json{{"x", show(x)}}; });
    }
    r.property("V(alpha(3/2)) = 3/2").record(eq(nf("alpha(3/2)").valuation(), Rational(3, 2)), [] { return Json{}; });
    r.property("V(chi(A)) = 0 for A Proper").record(eq(nf("chi(G2)").valuation(), Rational(0)), [] { return Json{}; });
    r.property("V(alpha(1) + alpha(2)*chi(A)) = 1")
        .record(eq(nf("alpha(1) + alpha(2)*chi(G2)").valuation(), Rational(1)), [] { return Json{}; });
    return r;
}

SuiteReport cor_norma() {
    SuiteReport r;
    const auto xs = corpus(21, 200, dyadic_atoms(4));
    std::mt19937_64 rng(22);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(xs.size()) - 1);
    for (const auto& x : xs) {
        const NormalForm& y = xs[static_cast<std::size_t>(pick(rng))];
        const auto vx = x.valuation(), vy = y.valuation();
        auto pair = [&] { return Json{{"x", show(x)}, {"y", show(y)}}; };
        // norms compare in reverse order of valuations
        r.property("||x+y|| <= max(||x||, ||y||)").record(ge((x + y).valuation(), min_valuation(vx, vy)), pair);
        r.property("||xy|| <= ||x|| ||y||").record(ge((x * y).valuation(), add_valuations(vx, vy)), pair);
        for (const Rational& a : {Rational(7), Rational(-1, 3), Rational(5, 2)})
            r.property("||a x|| = ||x||").record(eq(x.scaled(ExactScalar(a)).valuation(), vx), pair);
        r.property("||alpha_2 x|| = e^-2 ||x||").record(eq(x.times_alpha(2).valuation(), add_valuations(2, vx)), pair);
        if (vx) {
            r.property("||alpha_{-V(x)} x|| = 1")
                .record(eq(x.times_alpha(-*vx).valuation(), Rational(0)), [&] { return Json{{"x", show(x)}}; });
        }
    }
    for (const char* c : {"7", "-1/3", "2+5i", "2^(1/2)"})
        r.property("||a|| = 1 for a != 0").record(eq(nf(c).valuation(), Rational(0)), [&] { return Json{{"a", c}}; });
    r.property("||0|| = 0").record(!NormalForm().valuation().has_value(), [] { return Json{}; });
    return r;
}

SuiteReport lemma_novo() {
    SuiteReport r;
    CorpusOptions o;
    o.half_exponents = false;
    auto xs = corpus(31, 60, dyadic_atoms(4), o);
    o.half_exponents = true;
    for (auto& x : corpus(32, 40, dyadic_atoms(4), o)) xs.push_back(x);
    double worst = 0;
    for (const auto& x : xs) {
        const Germ g = x.to_germ();
        const auto report = cross_check(g);
        for (const auto& e : report.entries) {
            r.property("sampled agrees with exact: " + e.check).record(e.pass, [&] {
                return Json{{"x", show(x)}, {"exact", e.exact}, {"sampled", e.sampled}, {"detail", e.detail}};
            });
        }
        const auto v = x.valuation();
        if (v) {
            const auto s = sampled_valuation(g);
            worst = std::max(worst, std::abs(s.estimate - v->get_d()));
        }
    }
    r.tables["worst_difference"] = worst;
    const Germ probe = parse_germ("alpha(1) + alpha(2)*chi(D4_1)");
    CrossCheckOptions inject;
    inject.injected_valuation = std::optional<Rational>(Rational(3));
    r.property("corrupted exact valuation is flagged").record(!cross_check(probe, SampleGrid::default_grid(), inject).pass(),
                                                              [] { return Json{}; });
    r.property("zero is null in both modes").record(cross_check(Germ()).pass(), [] { return Json{}; });
    const auto osc = sampled_valuation(parse_germ("alpha(1)*sin(alpha(-1))"));
    r.tables["oscillating"] = {{"estimate", osc.estimate}, {"band", osc.band}};
    r.property("oscillating factor keeps slope near 1").record(std::abs(osc.estimate - 1) <= std::max(0.05, osc.band),
                                                               [&] { return Json{{"estimate", osc.estimate}}; });
    return r;
}

SuiteReport lemma_boll() {
    SuiteReport r;
    const Germ zero;
    for (const auto& x : corpus(41, 100, dyadic_atoms(4))) {
        const Germ g = x.to_germ();
        const auto v = x.valuation();
        const bool open = ball_contains(zero, 1, g) == Tri::Yes;
        const bool closed = ball_contains(zero, 1, g, true) == Tri::Yes;
        r.property("x in B_1(0) iff V(x) > 0").record(open == (!v || *v > 0), [&] { return Json{{"x", show(x)}}; });
        r.property("x in closed B_1(0) iff V(x) >= 0")
            .record(closed == (!v || *v >= 0), [&] { return Json{{"x", show(x)}}; });
    }
    r.property("alpha(1) in B_1(0)").record(ball_contains(zero, 1, parse_germ("alpha(1)")) == Tri::Yes, [] { return Json{}; });
    r.property("1 not in B_1(0)").record(ball_contains(zero, 1, parse_germ("1")) == Tri::No, [] { return Json{}; });
    r.property("1 in closed B_1(0)").record(ball_contains(zero, 1, parse_germ("1"), true) == Tri::Yes,
                                            [] { return Json{}; });
    return r;
}

SuiteReport prop_inv() {
    SuiteReport r;
    CorpusOptions o;
    o.exp_lo = 0;
    o.exp_hi = 4;
    o.zero_atom = 0.3;
    std::mt19937_64 rng(51);
    std::size_t done = 0;
    while (done < 50) {
        NormalForm x = random_normal_form(rng, dyadic_atoms(4), o).times_alpha(Rational(1, 2));
        const auto v = x.valuation();
        if (v && *v <= 0) continue;
        ++done;
        for (unsigned n : {1u, 4u, 8u}) {
            const auto gi = geometric_inverse(x, n);
            r.property("||(1-x) y_N - 1|| <= e^{-N V(x)}").record(ge(gi.residual, gi.bound), [&] {
                return Json{{"x", show(x)}, {"N", n}, {"residual", valuation_json(gi.residual)}};
            });
            r.property("(1-x) y_N - 1 = -x^N").record(pointwise_equal((one() - x) * gi.partial_sum - one(), -x.power(n)),
                                                      [&] { return Json{{"x", show(x)}, {"N", n}}; });
        }
    }
    const auto a1 = geometric_inverse(nf("alpha(1)"), 8);
    r.property("x = alpha(1), N = 8: residual exactly e^-8").record(eq(a1.residual, Rational(8)), [] { return Json{}; });
    const auto z = geometric_inverse(NormalForm(), 5);
    r.property("x = 0: y = 1, residual 0").record(pointwise_equal(z.partial_sum, one()) && !z.residual,
                                                  [] { return Json{}; });
    bool threw = false;
    try {
        geometric_inverse(nf("chi(G2)"), 3);
    } catch (const PreconditionError&) {
        threw = true;
    }
    r.property("norm 1 rejected").record(threw, [] { return Json{}; });
    return r;
}

// ---------------------------------------------------------------- index sets and idempotents

std::vector<SetDescriptor> descriptor_zoo() {
    std::vector<SetDescriptor> zoo;
    for (const char* s : {"G2", "G3", "G5", "D2_0", "D3_2", "D8_5", "T4", "~T4", "full", "empty", "G2 & G3",
                          "G2 | G3", "G2 & D2_0", "geom(1/4) & D2_1", "D2_0 & levels(0, 5)", "levels(3)",
                          "D2_1 & levels(2)", "G2 | T4", "~G2 & T16", "D4_1 | ~D4_1", "geom(1/8) & ~G2",
                          "G3 & ~T4", "(D2_0 | G5) & ~D4_0"})
        zoo.push_back(parse_set(s));
    return zoo;
}

SuiteReport prop_caos() {
    SuiteReport r;
    for (const auto& a : descriptor_zoo()) {
        const auto ca = tail_class(a), cc = tail_class(~a);
        auto d = [&] { return Json{{"A", a.to_string()}}; };
        r.property("A in S_f iff A^c in S_f").record(in_sf(a) == in_sf(~a), d);
        r.property("tail class of complement is swapped").record(cc == swap(ca), d);
        if (in_sf(a)) {
            auto u = Universe::of({a});
            const MintermSet in = minterms_of(a, *u);
            for (long q : {u->eventual_level(), u->eventual_level() + 1, u->eventual_level() + 7}) {
                bool hit_in = false, hit_out = false;
                for (Minterm m : u->near_zero_at(q)) {
                    if (cell_points(*u, m, 1, q).empty()) continue;
                    (in.count(m) ? hit_in : hit_out) = true;
                }
                r.property("points of A and A^c near 0 at every level").record(hit_in && hit_out, d);
            }
        }
        std::mt19937_64 rng(61);
        std::uniform_int_distribution<long> num(1, 4095);
        const SetDescriptor b = parse_set("D2_0 | G3");
        for (int i = 0; i < 50; ++i) {
            const TestPoint t(i % 7, Rational(1), Rational(num(rng), 4096));
            r.property("De Morgan under membership")
                .record((~(a | b)).member(t) == ((~a) & (~b)).member(t) &&
                            (~(a & b)).member(t) == ((~a) | (~b)).member(t) && (~~a).member(t) == a.member(t),
                        [&] { return Json{{"A", a.to_string()}, {"t", to_json(t)}}; });
        }
    }
    return r;
}

SuiteReport prop_cara() {
    SuiteReport r;
    const auto atoms = dyadic_atoms(8);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
        const NormalForm xa = NormalForm::chi(atoms[i]);
        auto d = [&] { return Json{{"A", atoms[i].to_string()}}; };
        r.property("||X_A|| = 1").record(eq(xa.valuation(), Rational(0)), d);
        r.property("X_A^2 = X_A").record(pointwise_equal(xa * xa, xa), d);
        r.property("X_A X_{A^c} = 0").record((xa * NormalForm::chi(~atoms[i])).is_zero(), d);
        r.property("X_A + X_{A^c} = 1").record(pointwise_equal(xa + NormalForm::chi(~atoms[i]), one()), d);
        for (std::size_t j = 0; j < atoms.size(); ++j) {
            if (i == j) continue;
            r.property("||X_A - X_B|| = 1")
                .record(eq((xa - NormalForm::chi(atoms[j])).valuation(), Rational(0)),
                        [&] { return Json{{"A", atoms[i].to_string()}, {"B", atoms[j].to_string()}}; });
        }
    }
    r.property("||X_G2 - X_G3|| = 1").record(eq(nf("chi(G2) - chi(G3)").valuation(), Rational(0)), [] { return Json{}; });
    return r;
}

SuiteReport prop_direta() {
    SuiteReport r;
    const auto xs = corpus(71, 100, dyadic_atoms(4));
    for (const char* a : {"G2", "D2_0", "D4_3", "G3 | D4_1"}) {
        const NormalForm xa = nf(std::string("chi(") + a + ")");
        const NormalForm xc = one() - xa;
        r.property("X_A + X_{A^c} = 1").record(pointwise_equal(xa + nf(std::string("chi(~(") + a + "))"), one()),
                                               [&] { return Json{{"A", a}}; });
        for (const auto& x : xs) {
            const bool in_both = (x * xa).is_null() && (x * xc).is_null();
            r.property("Ann(X_A) and Ann(X_{A^c}) meet in 0").record(!in_both || x.is_null(),
                                                                    [&] { return Json{{"x", show(x)}, {"A", a}}; });
            r.property("x = x X_A + x X_{A^c}").record(pointwise_equal(x * xa + x * xc, x),
                                                       [&] { return Json{{"x", show(x)}, {"A", a}}; });
        }
    }
    return r;
}

SuiteReport thm_idemp() {
    SuiteReport r;
    for (const auto& f : idempotent_fixtures()) {
        const NormalForm e = nf(f.expr);
        auto d = [&] { return Json{{"fixture", f.name}, {"e", f.expr}}; };
        const auto rec = idempotent_to_chi(e);
        r.property("e - X_S null").record((e - rec.set.chi()).is_null(), d);
        r.property("S in S_f").record(rec.set.in_sf(), d);
        r.tables[f.name] = rec.set.descriptor().to_string();
    }
    for (const char* bad : {"2*chi(G2)", "alpha(1)", "1", "0"}) {
        bool threw = false;
        try {
            idempotent_to_chi(nf(bad));
        } catch (const Error& e) {
            threw = e.code() == "not-idempotent";
        }
        r.property("non-idempotents rejected").record(threw, [&] { return Json{{"e", bad}}; });
    }
    return r;
}

// ---------------------------------------------------------------- units

std::vector<NormalForm> random_units(std::uint64_t seed, std::size_t n) {
    // one term per atom, so no atom cancels to zero
    CorpusOptions o;
    o.zero_atom = 0;
    o.max_terms = 1;
    return corpus(seed, n, dyadic_atoms(4), o);
}

std::vector<NormalForm> random_non_units(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    CorpusOptions o;
    o.zero_atom = 0.4;
    std::vector<NormalForm> out;
    while (out.size() < n) {
        NormalForm x = random_normal_form(rng, dyadic_atoms(4), o);
        if (!x.is_null() && !is_unit(x).unit) out.push_back(x);
    }
    return out;
}

SuiteReport thm_mosca() {
    SuiteReport r;
    for (const auto& x : random_units(81, 60)) {
        const auto v = is_unit(x);
        auto d = [&] { return Json{{"x", show(x)}}; };
        r.property("all-nonzero cells give a unit").record(v.unit && v.witness.has_value(), d);
        if (!v.witness) continue;
        const Universe& u = *x.universe();
        bool ok = true;
        for (Minterm m : u.near_zero()) {
            for (const auto& t : cell_points(u, m, 6, v.witness->from_level + 2, Rational(1, 3))) {
                if (!(t.eps < v.witness->eta)) continue;
                const Surd bound = Surd::power(t.scale(), v.witness->r);
                ok = ok && compare_surd(x.eval(t).norm_squared(), bound * bound) >= 0;
            }
        }
        r.property("|x| >= alpha_r below eta").record(ok, d);
    }
    for (const auto& x : random_non_units(82, 40)) {
        const auto v = is_unit(x);
        r.property("zero cell gives an obstruction").record(!v.unit && v.obstruction && v.obstruction->in_sf() &&
                                                                (x * v.obstruction->chi()).is_null(),
                                                            [&] { return Json{{"x", show(x)}}; });
    }
    r.property("alpha(r) unit with inverse alpha(-r)")
        .record(is_unit(nf("alpha(5/2)")).unit && pointwise_equal(nf("alpha(5/2)*alpha(-5/2)"), one()),
                [] { return Json{}; });
    r.property("alpha(1) X_A + alpha(2) X_{A^c} is a unit")
        .record(is_unit(nf("alpha(1)*chi(G2) + alpha(2)*chi(~G2)")).unit, [] { return Json{}; });
    return r;
}

// Exact verification of every clause of the decomposition.
bool check_approx(const NormalForm& x, const ApproxCase& c, Json& why) {
    long prev_a = 0;
    const CellSet* prev = nullptr;
    for (const auto& s : c.steps) {
        if (s.a <= prev_a) return why = "a_n not strictly increasing", false;
        if (prev && !s.set.subset_of(*prev)) return why = "S_n not nested", false;
        if (!s.set.in_sf()) return why = "S_n not in S_f", false;
        for (Minterm m : x.universe()->near_zero())
            if (s.set.cells.count(m) && !below_power_near_zero(x.poly_at(m), Rational(s.a)))
                return why = "|x X_S| < alpha_a fails", false;
        if (!ge(x.restricted(s.set.cells).valuation(), Rational(s.a))) return why = "norm bound fails", false;
        prev_a = s.a;
        prev = &s.set;
    }
    if (c.case_a) {
        const auto& s = c.last();
        if (!x.restricted(s.set.cells).is_null()) return why = "x X_S not null", false;
        for (Minterm m : x.universe()->near_zero())
            if (!s.set.cells.count(m) && below_power_near_zero(x.poly_at(m), Rational(s.a)))
                return why = "|x| >= alpha_a off S fails", false;
    }
    return true;
}

SuiteReport thm_aproxim() {
    SuiteReport r;
    for (const auto& f : non_unit_fixtures()) {
        const NormalForm x = nf(f.expr);
        const auto c = approx_decompose(x, 8);
        Json why;
        r.property("all clauses hold").record(check_approx(x, c, why), [&] {
            return Json{{"fixture", f.name}, {"reason", why}};
        });
        Json steps = Json::array();
        for (const auto& s : c.steps) steps.push_back({{"a", s.a}, {"S", s.set.descriptor().to_string()}});
        r.tables[f.name] = {{"case", c.case_a ? "A" : "B"}, {"steps", steps}};
    }
    const auto a = approx_decompose(nf("chi(G2)"), 8);
    r.property("chi(A): case A with S = A^c, a = 1")
        .record(a.case_a && a.last().a == 1 && equivalent(a.last().set.descriptor(), parse_set("~G2")),
                [] { return Json{}; });
    bool threw = false;
    try {
        approx_decompose(nf("alpha(2)"), 4);
    } catch (const PreconditionError&) {
        threw = true;
    }
    r.property("units rejected").record(threw, [] { return Json{}; });
    return r;
}

SuiteReport thm_impor_density() {
    SuiteReport r;
    for (const auto& f : non_unit_fixtures()) {
        const NormalForm x = nf(f.expr);
        Json table = Json::array();
        for (long n = 1; n <= 8; ++n) {
            const auto s = unit_approx_seq(x, n);
            auto d = [&] { return Json{{"fixture", f.name}, {"n", n}}; };
            r.property("x_n is a unit").record(is_unit(s.value).unit, d);
            r.property("dist(x_n, x) <= max(e^-a_n, ||x X_{S_n}||)").record(ge(s.dist, s.bound), d);
            if (s.kind == "case-a") r.property("case A: dist = e^-n").record(eq(s.dist, Rational(n)), d);
            if (n == 8) r.property("dist falls below e^-6").record(s.dist && *s.dist > 6, d);
            table.push_back({{"n", n}, {"kind", s.kind}, {"dist", "exp(-" + valuation_json(s.dist).get<std::string>() + ")"}});
        }
        r.tables[f.name] = table;
    }
    const auto z = unit_approx_seq(NormalForm(), 3);
    r.property("x = 0: x_n = alpha_n").record(pointwise_equal(z.value, NormalForm::alpha(3)) && eq(z.dist, Rational(3)),
                                              [] { return Json{}; });
    const auto u = unit_approx_seq(nf("alpha(1) + chi(G2)"), 3);
    r.property("unit x: x_n = x").record(!u.dist.has_value(), [] { return Json{}; });
    return r;
}

SuiteReport lemma_rep() {
    SuiteReport r;
    for (const auto& f : non_unit_fixtures()) {
        const NormalForm x = nf(f.expr);
        const auto un = unitize(x);
        auto d = [&] { return Json{{"fixture", f.name}, {"a", un.a}}; };
        r.property("y is a unit").record(is_unit(un.unit).unit, d);
        r.property("e idempotent, e not in {0,1}")
            .record(pointwise_equal(un.idempotent * un.idempotent, un.idempotent) && !un.idempotent.is_null() &&
                        !(one() - un.idempotent).is_null(),
                    d);
        r.property("|x X_S| < alpha_a on S = N_a(x)")
            .record(ge(x.restricted(un.set.cells).valuation(), Rational(un.a)), d);
        r.property("x (1 - e) != 0").record(!(x * (one() - un.idempotent)).is_null(), d);
        r.tables[f.name] = un.a;
    }
    const auto c = unitize(nf("chi(G2)"));
    r.property("chi(A): a = 1, y = 1").record(c.a == 1 && pointwise_equal(c.unit, one()), [] { return Json{}; });
    return r;
}

SuiteReport thm_zero_divisor() {
    SuiteReport r;
    for (const auto& x : random_non_units(91, 100)) {
        const auto v = is_unit(x);
        auto d = [&] { return Json{{"x", show(x)}}; };
        if (!v.obstruction) {
            r.property("idempotent annihilator exists").record(false, d);
            continue;
        }
        const NormalForm e = v.obstruction->chi();
        r.property("idempotent annihilator exists")
            .record((x * e).is_null() && !e.is_null() && !(one() - e).is_null() && pointwise_equal(e * e, e), d);
    }
    CorpusOptions o;
    o.zero_atom = 0.3;
    std::mt19937_64 rng(92);
    for (int i = 0; i < 100; ++i) {
        const NormalForm x = random_normal_form(rng, dyadic_atoms(4), o);
        if (x.is_null()) continue;
        r.property("x^2 not null for x not null (no nilpotents)").record(!(x * x).is_null(),
                                                                         [&] { return Json{{"x", show(x)}}; });
    }
    return r;
}

SuiteReport lemma_vert() {
    SuiteReport r;
    constexpr long kAMax = 16;
    std::vector<NormalForm> xs = random_non_units(101, 30);
    for (auto& x : random_units(102, 30)) xs.push_back(x);
    for (auto& x : null_corpus()) xs.push_back(x);
    for (const auto& x : xs) {
        bool all_full = true, some_null = false;
        for (long a = 1; a <= kAMax; ++a) {
            const auto c = n_a_set(x, Rational(a)).tail();
            all_full = all_full && c == TailClass::FullTail;
            some_null = some_null || c == TailClass::NullTail;
        }
        auto d = [&] { return Json{{"x", show(x)}}; };
        r.property("X_{N_a(x)} = 1 for all a <= 16 iff x null").record(all_full == x.is_null(), d);
        const bool unit = !x.is_null() && is_unit(x).unit;
        r.property("X_{N_a(x)} = 0 for some a <= 16 iff x unit").record(some_null == unit, d);
    }
    // the literal 'for all a' form of the unit criterion fails for positive-valuation units
    const NormalForm a3 = nf("alpha(3)");
    r.tables["alpha(3)"] = {{"unit", is_unit(a3).unit}, {"N_1", to_string(n_a_set(a3, 1).tail())},
                            {"N_4", to_string(n_a_set(a3, 4).tail())}};
    r.property("N_a examples").record(n_a_set(nf("alpha(2)"), 3).tail() == TailClass::NullTail &&
                                          n_a_set(nf("1"), 5).tail() == TailClass::NullTail,
                                      [] { return Json{}; });
    const auto na = n_a_set(nf("alpha(5)*chi(G2)"), 3);
    r.property("N_3(alpha(5) X_A) contains A near 0")
        .record(equal_near_zero(na.descriptor() & parse_set("G2"), parse_set("G2")), [] { return Json{}; });
    return r;
}

// ---------------------------------------------------------------- ideals and order

std::shared_ptr<const AtomAlgebra> algebra6() {
    return std::make_shared<const AtomAlgebra>(dyadic_atoms(6));
}

// Random element of g_f(F): supported away from the excluded atom, plus a null part anywhere.
NormalForm random_member(std::mt19937_64& rng, const Family& f) {
    std::vector<SetDescriptor> keep;
    for (std::size_t i = 0; i < f.algebra->size(); ++i)
        if (i != f.excluded) keep.push_back(f.algebra->atoms()[i]);
    CorpusOptions o;
    o.zero_atom = 0.4;
    NormalForm x = random_normal_form(rng, keep, o);
    std::uniform_int_distribution<int> coin(0, 2);
    if (coin(rng) == 0) x = x + NormalForm::chi(f.algebra->atoms()[f.excluded] & ~SetDescriptor::tail(Rational(1, 8)));
    return x;
}

SuiteReport thm_ole_1() {
    SuiteReport r;
    const auto alg = algebra6();
    const auto fams = enumerate_families(alg);
    r.tables["families"] = fams.size();
    r.property("6 families over 6 Proper atoms").record(fams.size() == 6, [] { return Json{}; });
    std::mt19937_64 rng(111);
    for (const auto& f : fams) {
        r.property("family validates").record(f.validate(), [&] { return Json{{"excluded", f.excluded}}; });
        r.property("1 not in g_f(F)").record(!ideal_member(one(), f).member,
                                             [&] { return Json{{"excluded", f.excluded}}; });
        for (int i = 0; i < 100; ++i) {
            const NormalForm x = random_member(rng, f);
            auto d = [&] { return Json{{"x", show(x)}, {"excluded", f.excluded}}; };
            r.property("member recognized").record(ideal_member(x, f).member, d);
            r.property("dist(1, x) >= 1").record(compare_valuations((one() - x).valuation(), Rational(0)) <= 0, d);
            const NormalForm y = random_member(rng, f);
            r.property("closed under sums").record(ideal_member(x + y, f).member, d);
            const NormalForm z = random_normal_form(rng, dyadic_atoms(6));
            r.property("absorbs products").record(ideal_member(x * z, f).member, d);
        }
    }
    const Family& f0 = fams[1];
    const SetDescriptor a = f0.algebra->atoms()[2], b = f0.algebra->atoms()[3];
    r.property("chi(A) in g_f(F) for A in F").record(ideal_member(NormalForm::chi(a), f0).member, [] { return Json{}; });
    r.property("alpha(2) chi(A | B) in g_f(F)")
        .record(ideal_member(NormalForm::alpha(2) * NormalForm::chi(a | b), f0).member, [] { return Json{}; });
    return r;
}

SuiteReport lemma_fator() {
    SuiteReport r;
    struct Case {
        Rational iota, eps, expected;
    };
    const std::vector<Case> cases = {
        {Rational(1), Rational(1, 8), Rational(1, 64)},          {Rational(1), Rational(1, 9), Rational(1, 729)},
        {Rational(1, 2), Rational(1, 3), Rational(1, 36)},       {Rational(1), Rational(2, 3), Rational(0)},
        {Rational(1), Rational(1), Rational(0)},                 {Rational(1), Rational(1, 35), Rational(1, 52521875)},
        {Rational(1, 3), Rational(1, 5), Rational(1, 3375)},     {Rational(1, 2), Rational(1, 2), Rational(1, 16)},
        {Rational(1), Rational(3, 10), Rational(0)},             {Rational(1), Rational(1, 25), Rational(1, 9765625)},
    };
    const Germ w = prime_scale_witness();
    for (const auto& c : cases) {
        const TestPoint t(0, c.iota, c.eps);
        const ScalarValue v = eval(w, t);
        r.property("witness value at hand-checked points")
            .record(v.is_exact() && v.exact() == ExactScalar(c.expected), [&] {
                return Json{{"t", to_json(t)}, {"value", v.to_string()}, {"expected", to_string(c.expected)}};
            });
    }
    for (const Integer& p : {Integer(2), Integer(3), Integer(7)}) {
        for (const auto& s : prime_scale_diagnostic(p, 6))
            r.property("exponent constant along p^-n").record(s.exponent && *s.exponent == p, [&] {
                return Json{{"t", to_json(s.point)}};
            });
    }
    Json mixed = Json::array();
    Integer last = 0;
    bool increasing = true;
    for (const auto& s : prime_scale_mixed_diagnostic(10)) {
        mixed.push_back({{"eps", to_string(s.point.eps)}, {"exponent", s.exponent ? s.exponent->get_str() : "none"}});
        increasing = increasing && s.exponent && *s.exponent > last;
        if (s.exponent) last = *s.exponent;
    }
    r.tables["mixed_primes"] = mixed;
    r.property("exponent diverges along 1/p_n").record(increasing, [] { return Json{}; });
    return r;
}

SuiteReport prop_facil() {
    SuiteReport r;
    CorpusOptions o;
    const auto xs = corpus(121, 200, dyadic_atoms(4), o);
    std::mt19937_64 rng(122);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(xs.size()) - 1);
    for (const auto& x : xs) {
        const auto s = decompose(x);
        const NormalForm ax = x.abs_class();
        auto d = [&] { return Json{{"x", show(x)}}; };
        r.property("x = x+ + x-").record(pointwise_equal(s.pos + s.neg, x), d);
        r.property("|x| = x+ - x-").record(pointwise_equal(s.pos - s.neg, ax), d);
        r.property("x+ = x X_A, x- = x X_{A^c}")
            .record(pointwise_equal(s.pos, x * s.support.chi()) && pointwise_equal(s.neg, x * s.support.complement().chi()),
                    d);
        r.property("x+ = x (1 + theta)/2")
            .record(pointwise_equal(s.pos, (x * (one() + s.theta)).scaled(ExactScalar(Rational(1, 2)))), d);
        const bool qpos = is_qpositive(x).verdict == Tri::Yes;
        r.property("x = x+ iff x = |x| iff x q-positive")
            .record(equal_mod_null(x, s.pos) == equal_mod_null(x, ax) && equal_mod_null(x, ax) == qpos, d);
        r.property("|-x| = |x|").record(pointwise_equal((-x).abs_class(), ax), d);
        r.property("|x| - x q-positive").record(is_qpositive(ax - x).verdict == Tri::Yes, d);
        r.property("(-x)+ = -(x-)").record(pointwise_equal(decompose(-x).pos, -s.neg), d);
        const NormalForm& y = xs[static_cast<std::size_t>(pick(rng))];
        const auto sy = decompose(y);
        const auto sxy = decompose(x * y);
        r.property("(ab)- = a+ b- + a- b+").record(pointwise_equal(sxy.neg, s.pos * sy.neg + s.neg * sy.pos), [&] {
            return Json{{"a", show(x)}, {"b", show(y)}};
        });
        // pointwise triangle inequalities on the representatives
        const Germ gx = x.to_germ(), gy = y.to_germ();
        const Universe& u = *(x + y).universe();
        bool tri = true;
        for (Minterm m : u.near_zero()) {
            for (const auto& t : cell_points(u, m, 2, u.eventual_level())) {
                const Surd vx = eval(gx, t).exact().real(), vy = eval(gy, t).exact().real();
                tri = tri && compare_surd((vx + vy).abs(), vx.abs() + vy.abs()) <= 0 &&
                      compare_surd((vx.abs() - vy.abs()).abs(), (vx - vy).abs()) <= 0;
            }
        }
        r.property("|x+y| <= |x|+|y| and ||x|-|y|| <= |x-y| pointwise").record(tri, [&] {
            return Json{{"x", show(x)}, {"y", show(y)}};
        });
    }
    r.property("decompose(alpha(1)) = (x, 0, 1)").record([&] {
        const auto s = decompose(nf("alpha(1)"));
        return pointwise_equal(s.pos, nf("alpha(1)")) && s.neg.is_zero() && pointwise_equal(s.theta, one());
    }(), [] { return Json{}; });
    return r;
}

SuiteReport prop_convex() {
    SuiteReport r;
    const auto fams = enumerate_families(algebra6());
    std::mt19937_64 rng(131);
    for (const auto& f : fams) {
        for (int i = 0; i < 20; ++i) {
            const NormalForm x = random_member(rng, f);
            const NormalForm b = NormalForm::chi(dyadic_atoms(6)[static_cast<std::size_t>(i % 6)]);
            for (const NormalForm& y : {x.scaled(ExactScalar(Rational(1, 2))), x.times_alpha(1), x * b, -x, x}) {
                r.property("|y| <= |x|, x in J implies y in J").record(convexity_check(x, y, f), [&] {
                    return Json{{"x", show(x)}, {"y", show(y)}, {"excluded", f.excluded}};
                });
            }
        }
    }
    return r;
}

std::vector<NormalForm> real_over_algebra(std::uint64_t seed, std::size_t n, const std::vector<SetDescriptor>& atoms) {
    return corpus(seed, n, atoms);
}

SuiteReport thm_motor() {
    SuiteReport r;
    const auto alg = algebra6();
    const auto xs = real_over_algebra(141, 100, alg->atoms());
    std::map<std::string, long> counts;
    for (const auto& f : enumerate_families(alg)) {
        for (const auto& x : xs) {
            const auto q = quotient_sign(x, f);
            ++counts[to_string(q.sign)];
            auto d = [&] { return Json{{"x", show(x)}, {"excluded", f.excluded}}; };
            r.property("quotient sign is definite").record(q.sign != QuotientSign::BothImpossible, d);
            r.property("x+ or x- in the ideal").record(q.pos_member.member || q.neg_member.member, d);
        }
    }
    r.tables["signs"] = counts;
    const auto fams = enumerate_families(alg);
    const NormalForm a = NormalForm::chi(alg->atoms()[1]), ac = one() - a;
    r.property("X_A - X_{A^c} with A in F is non-positive")
        .record(quotient_sign(a - ac, fams[0]).sign == QuotientSign::NonPositive, [] { return Json{}; });
    r.property("1 is non-negative").record(quotient_sign(one(), fams[0]).sign == QuotientSign::NonNegative,
                                           [] { return Json{}; });
    r.property("X_A with A in F is zero").record(quotient_sign(a, fams[0]).sign == QuotientSign::Zero,
                                                 [] { return Json{}; });
    return r;
}

SuiteReport lemma_val() {
    SuiteReport r;
    const auto alg = algebra6();
    std::mt19937_64 rng(151);
    for (const auto& f : enumerate_families(alg)) {
        for (int i = 0; i < 40; ++i) {
            const NormalForm x = random_normal_form(rng, alg->atoms());
            const NormalForm y = x - random_member(rng, f);
            const bool xneg = ideal_member(decompose(x).neg, f).member;
            if (!xneg) continue;
            r.property("x - y in J and x- in J imply y- in J")
                .record(ideal_member(decompose(y).neg, f).member,
                        [&] { return Json{{"x", show(x)}, {"y", show(y)}, {"excluded", f.excluded}}; });
        }
    }
    return r;
}

SuiteReport thm_gf_prime() {
    SuiteReport r;
    const auto alg = algebra6();
    std::mt19937_64 rng(161);
    CorpusOptions o;
    o.zero_atom = 0.5;
    for (const auto& f : enumerate_families(alg)) {
        for (int i = 0; i < 60; ++i) {
            const NormalForm a = random_normal_form(rng, alg->atoms(), o);
            const NormalForm b = random_normal_form(rng, alg->atoms(), o);
            auto d = [&] { return Json{{"a", show(a)}, {"b", show(b)}, {"excluded", f.excluded}}; };
            const bool ab = ideal_member(a * b, f).member;
            r.property("ab in g_f(F) implies a or b in g_f(F)")
                .record(!ab || ideal_member(a, f).member || ideal_member(b, f).member, d);
            const auto sa = decompose(a), sb = decompose(b);
            r.property("(ab)- = a+ b- + a- b+")
                .record(pointwise_equal(decompose(a * b).neg, sa.pos * sb.neg + sa.neg * sb.pos), d);
        }
    }
    return r;
}

SuiteReport remark_osc() {
    SuiteReport r;
    const Germ x = parse_germ("alpha(1)*sin(alpha(-1))");
    const auto pos = is_qpositive(x), neg = is_qpositive(-x);
    r.property("alpha(1) sin(alpha(-1)) is not q-positive").record(pos.verdict == Tri::No, [] { return Json{}; });
    r.property("alpha(1) sin(alpha(-1)) is not q-negative").record(neg.verdict == Tri::No, [] { return Json{}; });
    auto ev = [](const QPositivity& q) {
        Json a = Json::array();
        for (const auto& e : q.evidence)
            a.push_back({{"b", to_string(e.b)}, {"t", to_json(e.point)}, {"value", e.value}});
        return a;
    };
    r.tables["q-positive evidence"] = ev(pos);
    r.tables["q-negative evidence"] = ev(neg);
    r.property("alpha(2) is q-positive").record(is_qpositive(parse_germ("alpha(2)")).verdict == Tri::Yes,
                                                [] { return Json{}; });
    r.property("-chi(A) is q-negative, not q-positive")
        .record(is_qpositive(parse_germ("-chi(G2)")).verdict == Tri::No &&
                    is_qpositive(parse_germ("chi(G2)")).verdict == Tri::Yes,
                [] { return Json{}; });
    return r;
}

// Unit with one monomial per atom together with its exact inverse.
struct UnitPair {
    NormalForm x, inverse;
};

std::vector<UnitPair> monomial_units(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-4, 4), den(1, 2), coef(1, 4), sgn(0, 1);
    std::vector<UnitPair> out;
    const auto atoms = dyadic_atoms(4);
    while (out.size() < n) {
        UnitPair u;
        for (const auto& a : atoms) {
            const Rational r(num(rng), den(rng));
            const ExactScalar c(Rational(sgn(rng) ? coef(rng) : -coef(rng), 2));
            u.x = u.x + NormalForm::alpha(r).scaled(c) * NormalForm::chi(a);
            u.inverse = u.inverse + NormalForm::alpha(-r).scaled(*c.inverse()) * NormalForm::chi(a);
        }
        out.push_back(u);
    }
    return out;
}

SuiteReport cor_aberto() {
    SuiteReport r;
    const auto perturb = corpus(171, 50, dyadic_atoms(4));
    std::size_t i = 0;
    for (const auto& u : monomial_units(172, 50)) {
        // radius ||a^-1||^-1 = e^{V(a^-1)}; shift p so that V(p) > -V(a^-1)
        const auto vinv = *u.inverse.valuation();
        NormalForm p = perturb[i++];
        if (const auto vp = p.valuation()) p = p.times_alpha(-vinv - *vp + Rational(1, 2));
        const NormalForm z = u.x + p;
        auto d = [&] { return Json{{"a", show(u.x)}, {"z", show(z)}}; };
        r.property("a a^-1 = 1").record(pointwise_equal(u.x * u.inverse, one()), d);
        r.property("z in B_r(a) with r = ||a^-1||^-1").record(compare_valuations(p.valuation(), -vinv) > 0, d);
        r.property("z is a unit").record(is_unit(z).unit, d);
    }
    return r;
}

SuiteReport lemma_feixo() {
    SuiteReport r;
    for (long n = 1; n <= 10; ++n) {
        const NormalForm a = NormalForm::alpha(n);
        r.property("alpha_n is a unit with dist(alpha_n, 0) = e^-n")
            .record(is_unit(a).unit && eq(a.valuation(), Rational(n)), [&] { return Json{{"n", n}}; });
    }
    for (const auto& x : corpus(181, 100, dyadic_atoms(4))) {
        const auto v = x.valuation();
        if (!v) continue;
        r.property("||alpha_{-V(x)} x|| = 1").record(eq(x.times_alpha(-*v).valuation(), Rational(0)),
                                                     [&] { return Json{{"x", show(x)}}; });
    }
    for (const auto& u : monomial_units(182, 100)) {
        r.property("V(x) + V(x^-1) <= 0")
            .record(compare_valuations(add_valuations(u.x.valuation(), u.inverse.valuation()), Rational(0)) <= 0,
                    [&] { return Json{{"x", show(u.x)}}; });
    }
    return r;
}

SuiteReport lemma_fato() {
    SuiteReport r;
    for (const auto& x : corpus(191, 100, dyadic_atoms(4))) {
        const auto v = x.valuation();
        if (!v) continue;
        for (const Rational& s : {Rational(-3), Rational(1, 2), Rational(4)}) {
            // ||x|| = R1 = e^{-V}, target R2 = e^{-V-s}, so ln R1 - ln R2 = s
            r.property("alpha_s S_{R1} = S_{R2} with s = ln R1 - ln R2")
                .record(eq(x.times_alpha(s).valuation(), *v + s) && eq(x.times_alpha(s).times_alpha(-s).valuation(), *v),
                        [&] { return Json{{"x", show(x)}, {"s", to_string(s)}}; });
        }
    }
    return r;
}

SuiteReport lemma_antes() {
    SuiteReport r;
    for (const auto& a : descriptor_zoo()) {
        const NormalForm xa = NormalForm::chi(a);
        const bool eventually_out = tail_class(a) == TailClass::NullTail;
        r.property("X_A null iff eps-sets of A avoid some (0, tau)").record(xa.is_null() == eventually_out, [&] {
            return Json{{"A", a.to_string()}, {"tail", to_string(tail_class(a))}};
        });
        if (!eventually_out) continue;
        // pointwise check: no point of A below 2^-40 from the eventual level on
        auto u = Universe::of({a});
        bool avoided = true;
        for (long q = u->eventual_level(); q < u->eventual_level() + 4; ++q)
            for (Minterm m : minterms_of(a, *u))
                for (const auto& t : cell_points(*u, m, 3, q))
                    avoided = avoided && !(t.eps < Rational(1, 1L << 40));
        r.property("null X_A has no small-eps points").record(avoided, [&] { return Json{{"A", a.to_string()}}; });
    }
    return r;
}

SuiteReport prop_creio() {
    SuiteReport r;
    std::vector<NormalForm> xs = random_non_units(201, 60);
    for (const auto& f : non_unit_fixtures()) xs.push_back(nf(f.expr));
    for (const auto& x : xs) {
        bool found = false;
        for (long a = 1; a <= kMaxA && !found; ++a) {
            const CellSet s = n_a_set(x, Rational(a));
            found = s.in_sf() && ge(x.restricted(s.cells).valuation(), Rational(a));
        }
        r.property("some N_a(x) in S_f with |x X_S| < alpha_a").record(found, [&] { return Json{{"x", show(x)}}; });
    }
    return r;
}

SuiteReport thm_rad() {
    SuiteReport r;
    const auto alg = algebra6();
    const auto fams = enumerate_families(alg);
    CorpusOptions o;
    o.zero_atom = 0.5;
    const auto xs = corpus(211, 150, alg->atoms(), o);
    for (const auto& x : xs) {
        if (x.is_null()) continue;
        const bool unit = is_unit(x).unit;
        bool outside = false;
        for (const auto& f : fams) outside = outside || !ideal_member(x, f).member;
        r.property("non-zero x lies outside some g_f(F)").record(outside, [&] { return Json{{"x", show(x)}}; });
        if (unit) continue;
        const auto un = unitize(x);
        r.property("y = x(1 - X_N) + X_N is a unit, X_N not in {0, 1}")
            .record(is_unit(un.unit).unit && !un.idempotent.is_null() && !(one() - un.idempotent).is_null(),
                    [&] { return Json{{"x", show(x)}}; });
    }
    return r;
}

SuiteReport lemma_idpro() {
    SuiteReport r;
    const auto fams = enumerate_families(algebra6());
    std::mt19937_64 rng(221);
    for (const auto& f : fams) {
        r.property("1 not in g_f(F)").record(!ideal_member(one(), f).member, [&] { return Json{{"excluded", f.excluded}}; });
        for (int i = 0; i < 50; ++i) {
            const NormalForm x = random_member(rng, f);
            auto d = [&] { return Json{{"x", show(x)}, {"excluded", f.excluded}}; };
            r.property("1 - x not in g_f(F) for x in g_f(F)").record(!ideal_member(one() - x, f).member, d);
            r.property("members are non-units").record(x.is_null() || !is_unit(x).unit, d);
        }
    }
    return r;
}

SuiteReport lemma_base() {
    SuiteReport r;
    for (const auto& x : corpus(231, 200, dyadic_atoms(4))) {
        if (is_qpositive(x).verdict != Tri::Yes) continue;
        const NormalForm rep = x.abs_class();
        const Universe& u = *rep.universe();
        bool nonneg = true;
        for (Minterm m : u.near_zero())
            for (const auto& t : cell_points(u, m, 3, u.eventual_level()))
                nonneg = nonneg && rep.eval(t).real().sign() >= 0;
        auto d = [&] { return Json{{"x", show(x)}}; };
        r.property("q-positive x has a representative >= 0").record(equal_mod_null(rep, x) && nonneg, d);
    }
    return r;
}

using SuiteFn = SuiteReport (*)();

struct Entry {
    SuiteInfo info;
    SuiteFn fn;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {{"prop-valor", "V(alpha_r x) = r + V(x), V(xy) >= V(x) + V(y), V(x+y) >= min, V constant on classes"}, prop_valor},
        {{"cor-norma", "the sharp norm is an ultrametric absolute value bound: ||x+y|| <= max, ||xy|| <= ||x|| ||y||, ||a x|| = ||x||"}, cor_norma},
        {{"lemma-novo", "r is below V(x) iff eps^-r x -> 0; sampled slopes agree with exact valuations"}, lemma_novo},
        {{"lemma-boll", "x in B_1(0) iff V(x) > 0; 1 lies outside the open unit ball"}, lemma_boll},
        {{"cor-aberto", "the group of units is open: B_r(a) consists of units for r = ||a^-1||^-1"}, cor_aberto},
        {{"lemma-feixo", "0 is a limit of units, ||alpha_{-V(x)} x|| = 1, V(x) + V(x^-1) <= 0"}, lemma_feixo},
        {{"lemma-fato", "alpha_r maps the sphere of radius R1 onto radius R2 for r = ln R1 - ln R2"}, lemma_fato},
        {{"prop-inv", "1 - x is a unit when ||x|| < 1, with geometric partial sums converging at rate e^{-N V(x)}"}, prop_inv},
        {{"prop-caos", "A in S_f iff A^c in S_f, and both meet every level near 0"}, prop_caos},
        {{"prop-cara", "X_A is an idempotent of norm 1, ||X_A - X_B|| = 1, X_A X_{A^c} = 0"}, prop_cara},
        {{"prop-direta", "the ring splits as Ann(X_A) + Ann(X_{A^c}) with trivial intersection"}, prop_direta},
        {{"lemma-antes", "X_A is null iff the eps-sets of A avoid an interval (0, tau)"}, lemma_antes},
        {{"prop-creio", "a non-zero non-unit has N_a(x) in S_f with |x X_S| < alpha_a for some a"}, prop_creio},
        {{"thm-mosca", "x is a unit iff |x| >= alpha_r near 0 for some r"}, thm_mosca},
        {{"thm-zero-divisor", "a non-zero non-unit is annihilated by a non-trivial idempotent"}, thm_zero_divisor},
        {{"lemma-vert", "X_{N_a(x)} = 1 for all a iff x is null; X_{N_a(x)} = 0 for some a iff x is a unit (finite a)"}, lemma_vert},
        {{"thm-aproxim", "a non-unit either vanishes on some S in S_f and is bounded below off S, or admits a nested chain S_n with ||x X_{S_n}|| -> 0"}, thm_aproxim},
        {{"thm-impor-density", "units are dense: x_n = x(1 - X_{S_n}) + alpha_{a_n} X_{S_n} converges to x"}, thm_impor_density},
        {{"lemma-rep", "y = x(1 - X_{N_a}) + X_{N_a} is a unit for some a, with X_{N_a} not in {0, 1}"}, lemma_rep},
        {{"thm-rad", "every non-zero x avoids some maximal ideal, so the Jacobson radical is 0"}, thm_rad},
        {{"thm-idemp", "every idempotent other than 0 and 1 is X_S for some S in S_f"}, thm_idemp},
        {{"lemma-idpro", "g_f(F) is a proper ideal"}, lemma_idpro},
        {{"thm-ole-1", "members x of g_f(F) satisfy dist(1, x) >= 1 and 1 is never a member"}, thm_ole_1},
        {{"lemma-fator", "the prime-scale germ alpha_{gamma} with gamma the smallest prime of 1/i(phi)"}, lemma_fator},
        {{"lemma-base", "x is q-positive iff it has a representative that is >= 0"}, lemma_base},
        {{"prop-facil", "x = x+ + x-, |x| = x+ - x-, x+ = x X_A, |-x| = |x|, triangle inequalities"}, prop_facil},
        {{"prop-convex", "ideals g_f(F) are convex: x in J and |y| <= |x| imply y in J"}, prop_convex},
        {{"thm-motor", "the quotient by g_f(F) is totally ordered"}, thm_motor},
        {{"lemma-val", "x - y in J and x- in J imply y- in J"}, lemma_val},
        {{"thm-gf-prime", "g_f(F) is a prime ideal, via (ab)- = a+ b- + a- b+"}, thm_gf_prime},
        {{"remark-osc", "alpha_1 sin(alpha_{-1}) is neither q-positive nor q-negative"}, remark_osc},
    };
    return entries;
}

}  // namespace

const std::vector<SuiteInfo>& suite_list() {
    static const std::vector<SuiteInfo> list = [] {
        std::vector<SuiteInfo> out;
        for (const auto& e : registry()) out.push_back(e.info);
        return out;
    }();
    return list;
}

SuiteReport theorem_suite(const std::string& name) {
    for (const auto& e : registry()) {
        if (e.info.name != name) continue;
        SuiteReport r = e.fn();
        r.name = e.info.name;
        r.statement = e.info.statement;
        return r;
    }
    throw Error("unknown-suite", "unknown suite '" + name + "'");
}

}  // namespace gnum
