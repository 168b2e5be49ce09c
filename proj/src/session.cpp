#include "gnum/session.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "gnum/errors.hpp"
#include "gnum/eval.hpp"
#include "gnum/order.hpp"
#include "gnum/suites.hpp"
#include "gnum/units.hpp"
#include "gnum/valuation.hpp"

namespace gnum {

namespace {

Rational power_of_two(const std::string& exponent) {
    const Rational e = parse_rational(exponent);
    if (!is_integer(e)) throw std::invalid_argument("non-integer exponent");
    return pow(Rational(2), e.get_num().get_si());
}

Json with_schema(Json body) {
    Json out;
    out["schema"] = kSchema;
    out.update(body);
    return out;
}

// Copies the fields of extra into out, skipping one key.
void merge(Json& out, const Json& extra, const std::string& skip = "") {
    for (const auto& [k, v] : extra.items())
        if (k != skip) out[k] = v;
}

Json witness_json(const UnitWitness& w) {
    return {{"r", to_string(w.r)}, {"from_level", w.from_level}, {"eta", to_string(w.eta)}};
}

Json membership_json(const IdealMembership& m, const Family& f) {
    Json out{{"member", m.member}};
    out["witness"] = m.member ? Json(f.algebra->element(m.witness).to_string()) : Json(nullptr);
    out["support"] = f.algebra->element(m.support).to_string();
    return out;
}

Json family_json(const Family& f) {
    return {{"excluded", f.excluded},
            {"excluded_atom", f.algebra->atoms()[f.excluded].to_string()},
            {"description", "elements of S_f not containing atom " + std::to_string(f.excluded)}};
}

Json evidence_json(const QPositivity& q) {
    Json a = Json::array();
    for (const auto& e : q.evidence) a.push_back({{"b", to_string(e.b)}, {"point", to_json(e.point)}, {"value", e.value}});
    return a;
}

}  // namespace

Rational parse_precision(const std::string& text) {
    try {
        Rational p;
        if (text.rfind("2^", 0) == 0) {
            p = power_of_two(text.substr(2));
        } else if (const auto k = text.find("/2^"); k != std::string::npos) {
            p = parse_rational(text.substr(0, k)) / power_of_two(text.substr(k + 3));
        } else {
            p = parse_rational(text);
        }
        if (p <= 0) throw std::invalid_argument("non-positive");
        return p;
    } catch (const std::invalid_argument&) {
        throw Error("usage", "invalid precision '" + text + "'");
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("invalid-file", "cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int exit_code_for(const std::string& code) {
    static const std::set<std::string> usage = {"usage",        "syntax-error",     "unknown-name", "unknown-suite",
                                                "invalid-file", "registry-invalid", "grid-invalid"};
    return usage.count(code) ? 2 : 1;
}

Json error_json(const std::string& code, const std::string& message) {
    Json out;
    out["schema"] = kSchema;
    out["error"] = {{"code", code}, {"message", message}};
    return out;
}

Session::Session() {
    if (const char* env = std::getenv("GNUM_PRECISION"); env && *env) precision = parse_precision(env);
}

Json Session::eval(const std::string& expr, const TestPoint& t, std::optional<Rational> prec) const {
    const Germ g = parse(expr);
    const ScalarValue v = gnum::eval(g, t, prec.value_or(precision));
    Json out = with_schema({{"expr", format(g)}, {"point", to_json(t)}});
    merge(out, to_json(v));
    if (auto e = prime_scale_exponent(t); e && format(g).find("primescale") != std::string::npos)
        out["prime_exponent"] = e->get_str();
    return out;
}

Json Session::val(const std::string& expr) const { return with_schema(to_json(valuation(parse(expr), grid))); }

Json Session::norm(const std::string& expr) const {
    const SharpDistance d = gnum::norm(parse(expr), grid);
    Json out = with_schema({{"norm", d.value}});
    merge(out, to_json(d), "value");
    return out;
}

Json Session::dist(const std::string& a, const std::string& b) const {
    const SharpDistance d = gnum::dist(parse(a), parse(b), grid);
    Json out = with_schema({{"dist", d.value}});
    merge(out, to_json(d), "value");
    return out;
}

Json Session::is_unit(const std::string& expr) const {
    const UnitVerdict v = gnum::is_unit(parse(expr), grid);
    Json out = with_schema({{"unit", v.unit}, {"mode", to_string(v.mode)}});
    if (v.witness) out["witness"] = witness_json(*v.witness);
    if (v.obstruction) {
        out["obstruction"] = to_json(*v.obstruction);
        out["annihilating_idempotent"] = format(v.obstruction->chi().to_germ());
    }
    return out;
}

Json Session::is_null(const std::string& expr) const {
    const NullVerdict v = gnum::is_null(parse(expr), grid);
    Json out = with_schema({{"null", v.null}, {"mode", to_string(v.mode)}});
    if (v.a) {
        out["a"] = to_string(*v.a);
        Json pts = Json::array();
        for (const auto& t : v.points) pts.push_back(to_json(t));
        out["points"] = pts;
    }
    return out;
}

Json Session::approx(const std::string& expr, long max_n) const {
    if (max_n < 1) throw Error("usage", "--max-n must be >= 1");
    const NormalForm x = normalize(parse(expr));
    const ApproxCase c = approx_decompose(x, max_n);
    Json steps = Json::array();
    for (const auto& s : c.steps) {
        Json j = to_json(s.set);
        j["a"] = s.a;
        j["norm_on_set"] = to_json(norm_of(x.restricted(s.set.cells)));
        steps.push_back(j);
    }
    Json seq = Json::array();
    for (long n = 1; n <= max_n; ++n) {
        const UnitApprox u = unit_approx_seq(x, n);
        seq.push_back({{"n", n},
                       {"kind", u.kind},
                       {"x_n", format(u.value.to_germ())},
                       {"dist", u.dist ? "exp(-" + to_string(*u.dist) + ")" : "0"},
                       {"dist_valuation", valuation_json(u.dist)},
                       {"bound_valuation", valuation_json(u.bound)}});
    }
    return with_schema({{"case", c.case_a ? "A" : "B"}, {"steps", steps}, {"units", seq}});
}

Json Session::unitize(const std::string& expr) const {
    const Unitized u = gnum::unitize(normalize(parse(expr)));
    return with_schema({{"a", u.a},
                        {"set", to_json(u.set)},
                        {"unit", to_json(u.unit)},
                        {"idempotent", format(u.idempotent.to_germ())}});
}

Json Session::idempotent(const std::string& expr) const {
    const RecoveredIdempotent r = idempotent_to_chi(normalize(parse(expr)));
    Json out = with_schema({{"a", r.a}});
    merge(out, to_json(r.set));
    return out;
}

Json Session::ideal_member(const std::string& expr, const std::string& family_text) const {
    const Family f = load_family_json(family_text, registry);
    const IdealMembership m = gnum::ideal_member(normalize(parse(expr)), f);
    Json out = with_schema({{"family", family_json(f)}});
    merge(out, membership_json(m, f));
    return out;
}

Json Session::enum_families(const std::string& algebra_text) const {
    const auto alg = load_algebra_json(algebra_text, registry);
    const auto fams = enumerate_families(alg);
    Json atoms = Json::array();
    for (std::size_t i = 0; i < alg->size(); ++i)
        atoms.push_back({{"index", i}, {"set", alg->atoms()[i].to_string()}, {"visible", alg->atom_visible(i)}});
    Json list = Json::array();
    for (const auto& f : fams) {
        Json j = family_json(f);
        j["validated"] = f.validate();
        list.push_back(j);
    }
    return with_schema({{"atoms", atoms}, {"count", fams.size()}, {"families", list}});
}

Json Session::sign(const std::string& expr) const {
    const Germ g = parse(expr);
    const QPositivity pos = is_qpositive(g, grid);
    const QPositivity neg = is_qpositive(Germ::neg(g), grid);
    return with_schema({{"qpositive", to_string(pos.verdict)},
                        {"qnegative", to_string(neg.verdict)},
                        {"mode", to_string(pos.mode == Mode::Exact && neg.mode == Mode::Exact ? Mode::Exact : Mode::Sampled)},
                        {"evidence", {{"qpositive", evidence_json(pos)}, {"qnegative", evidence_json(neg)}}}});
}

Json Session::decompose(const std::string& expr) const {
    const SignDecomposition d = gnum::decompose(parse(expr));
    Json out = with_schema({{"pos", format(d.pos)}, {"neg", format(d.neg)}, {"mode", to_string(d.mode)}});
    if (d.theta) out["theta"] = format(*d.theta);
    if (d.support) out["support"] = to_json(*d.support);
    return out;
}

Json Session::qsign(const std::string& expr, const std::string& family_text) const {
    const Family f = load_family_json(family_text, registry);
    const QuotientSignResult q = quotient_sign(normalize(parse(expr)), f);
    return with_schema({{"sign", to_string(q.sign)},
                        {"definite", q.sign != QuotientSign::BothImpossible},
                        {"family", family_json(f)},
                        {"pos_member", membership_json(q.pos_member, f)},
                        {"neg_member", membership_json(q.neg_member, f)}});
}

Json Session::oracle(const std::string& expr, const std::optional<std::string>& injected) const {
    CrossCheckOptions opts;
    if (injected) {
        try {
            opts.injected_valuation =
                *injected == "+inf" ? std::optional<Rational>() : std::optional<Rational>(parse_rational(*injected));
        } catch (const std::invalid_argument&) {
            throw Error("usage", "invalid injected valuation '" + *injected + "'");
        }
    }
    const CrossCheckReport r = cross_check(parse(expr), grid, opts);
    Json entries = Json::array();
    for (const auto& e : r.entries)
        entries.push_back({{"check", e.check},
                           {"exact", e.exact},
                           {"sampled", e.sampled},
                           {"result", e.pass ? "PASS" : "FAIL"},
                           {"detail", e.detail}});
    return with_schema({{"result", r.pass() ? "PASS" : "FAIL"}, {"pass", r.pass()}, {"entries", entries}});
}

Json Session::suite(const std::string& name) const { return theorem_suite(name).to_json(); }

Json Session::suite_list() const {
    Json list = Json::array();
    for (const auto& s : gnum::suite_list()) list.push_back({{"name", s.name}, {"statement", s.statement}});
    return with_schema({{"suites", list}});
}

}  // namespace gnum
