#include "gnum/normal_form.hpp"

#include <algorithm>
#include <stdexcept>

#include "gnum/errors.hpp"

namespace gnum {

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r = a;
    for (const auto& [e, c] : b) {
        auto [it, inserted] = r.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) r = poly_add(r, Poly{{ea + eb, ca * cb}});
    }
    return r;
}

Poly poly_scale(const Poly& a, const ExactScalar& c) {
    if (c.is_zero()) return {};
    Poly r;
    for (const auto& [e, v] : a) r.emplace(e, v * c);
    return r;
}

bool poly_equal(const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return false;
    for (auto ia = a.begin(), ib = b.begin(); ia != a.end(); ++ia, ++ib)
        if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
}

ExactScalar poly_eval(const Poly& p, const Rational& u) {
    ExactScalar acc;
    for (const auto& [e, c] : p) acc += c * ExactScalar(Surd::power(u, e));
    return acc;
}

std::string poly_to_string(const Poly& p) {
    if (p.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : p) {
        if (!out.empty()) out += " + ";
        out += c.to_string() + "*u^(" + to_string(e) + ")";
    }
    return out;
}

namespace {

const Poly& zero_poly() {
    static const Poly z;
    return z;
}

Poly poly_map(const Poly& p, ExactScalar (*f)(const ExactScalar&)) {
    Poly r;
    for (const auto& [e, c] : p) {
        ExactScalar v = f(c);
        if (!v.is_zero()) r.emplace(e, v);
    }
    return r;
}

Poly poly_abs_pointwise(const Poly& p) {
    if (p.empty()) return p;
    if (p.size() == 1) {
        auto m = p.begin()->second.modulus();
        if (!m) throw NotNormalizable("modulus of a complex coefficient is not exact");
        return Poly{{p.begin()->first, ExactScalar(*m)}};
    }
    int sign = 0;
    for (const auto& [e, c] : p) {
        if (!c.is_real()) throw NotNormalizable("abs over a complex composite");
        const int s = c.real().sign();
        if (sign != 0 && s != sign) throw NotNormalizable("abs over a mixed-sign composite");
        sign = s;
    }
    return sign < 0 ? poly_scale(p, ExactScalar(-1)) : p;
}

Poly poly_of(const Germ& x, const Universe& u, Minterm m) {
    switch (x.kind()) {
        case GermKind::Const:
            if (x.value().is_zero()) return {};
            return Poly{{Rational(0), x.value()}};
        case GermKind::Alpha: return Poly{{x.exponent(), ExactScalar(1)}};
        case GermKind::Chi:
            if (x.set().eval(u, m)) return Poly{{Rational(0), ExactScalar(1)}};
            return {};
        case GermKind::Add: {
            Poly r;
            for (const auto& c : x.children()) r = poly_add(r, poly_of(c, u, m));
            return r;
        }
        case GermKind::Mul: {
            Poly r{{Rational(0), ExactScalar(1)}};
            for (const auto& c : x.children()) {
                r = poly_mul(r, poly_of(c, u, m));
                if (r.empty()) break;
            }
            return r;
        }
        case GermKind::Neg: return poly_scale(poly_of(x.children().front(), u, m), ExactScalar(-1));
        case GermKind::Abs: return poly_abs_pointwise(poly_of(x.children().front(), u, m));
        case GermKind::Conj:
            return poly_map(poly_of(x.children().front(), u, m), [](const ExactScalar& c) { return c.conj(); });
        case GermKind::Re:
            return poly_map(poly_of(x.children().front(), u, m),
                            [](const ExactScalar& c) { return ExactScalar(c.real()); });
        case GermKind::Im:
            return poly_map(poly_of(x.children().front(), u, m),
                            [](const ExactScalar& c) { return ExactScalar(c.imag()); });
        case GermKind::Osc: throw NotNormalizable("oscillator present");
        case GermKind::PrimeScale: throw NotNormalizable("prime-scale germ present");
    }
    throw std::logic_error("unknown germ kind");
}

}  // namespace

NormalForm::NormalForm() : universe_(Universe::empty_universe()) {}

NormalForm::NormalForm(Universe::Ref u, std::map<Minterm, Poly> polys) : universe_(std::move(u)) {
    for (auto& [m, p] : polys)
        if (!p.empty() && universe_->satisfiable().count(m)) polys_.emplace(m, std::move(p));
}

NormalForm NormalForm::constant(const ExactScalar& c) {
    auto u = Universe::empty_universe();
    std::map<Minterm, Poly> polys;
    if (!c.is_zero()) polys[0] = Poly{{Rational(0), c}};
    return NormalForm(u, std::move(polys));
}

NormalForm NormalForm::alpha(const Rational& r) {
    return NormalForm(Universe::empty_universe(), {{0, Poly{{r, ExactScalar(1)}}}});
}

NormalForm NormalForm::chi(const SetDescriptor& a) {
    auto u = Universe::of({a});
    return chi(u, minterms_of(a, *u));
}

NormalForm NormalForm::chi(const Universe::Ref& u, const MintermSet& set) {
    std::map<Minterm, Poly> polys;
    for (Minterm m : set) polys[m] = Poly{{Rational(0), ExactScalar(1)}};
    return NormalForm(u, std::move(polys));
}

NormalForm NormalForm::from_germ(const Germ& x) {
    std::vector<SetDescriptor> sets;
    x.collect_sets(sets);
    auto u = Universe::of(sets);
    if (x.contains(GermKind::Osc)) throw NotNormalizable("oscillator present");
    if (x.contains(GermKind::PrimeScale)) throw NotNormalizable("prime-scale germ present");
    std::map<Minterm, Poly> polys;
    for (Minterm m : u->satisfiable()) polys[m] = poly_of(x, *u, m);
    return NormalForm(u, std::move(polys));
}

const Poly& NormalForm::poly_at(Minterm m) const {
    auto it = polys_.find(m);
    return it == polys_.end() ? zero_poly() : it->second;
}

NormalForm NormalForm::lift(const Universe::Ref& to) const {
    if (to.get() == universe_.get()) return *this;
    std::map<Minterm, Poly> polys;
    for (Minterm m : to->satisfiable()) {
        const Poly& p = poly_at(to->project(m, *universe_));
        if (!p.empty()) polys[m] = p;
    }
    return NormalForm(to, std::move(polys));
}

namespace {

template <typename F>
NormalForm combine(const NormalForm& a, const NormalForm& b, F f) {
    auto u = Universe::merge(a.universe(), b.universe());
    NormalForm la = a.lift(u), lb = b.lift(u);
    std::map<Minterm, Poly> polys;
    for (Minterm m : u->satisfiable()) {
        Poly p = f(la.poly_at(m), lb.poly_at(m));
        if (!p.empty()) polys[m] = std::move(p);
    }
    return NormalForm(u, std::move(polys));
}

}  // namespace

NormalForm operator+(const NormalForm& a, const NormalForm& b) { return combine(a, b, poly_add); }
NormalForm operator-(const NormalForm& a, const NormalForm& b) { return a + (-b); }
NormalForm operator*(const NormalForm& a, const NormalForm& b) { return combine(a, b, poly_mul); }

NormalForm NormalForm::operator-() const { return scaled(ExactScalar(-1)); }

NormalForm NormalForm::scaled(const ExactScalar& c) const {
    std::map<Minterm, Poly> polys;
    for (const auto& [m, p] : polys_) polys[m] = poly_scale(p, c);
    return NormalForm(universe_, std::move(polys));
}

NormalForm NormalForm::times_alpha(const Rational& r) const { return *this * alpha(r); }

NormalForm NormalForm::power(unsigned n) const {
    NormalForm r = constant(ExactScalar(1));
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

NormalForm NormalForm::conj() const {
    std::map<Minterm, Poly> polys;
    for (const auto& [m, p] : polys_) polys[m] = poly_map(p, [](const ExactScalar& c) { return c.conj(); });
    return NormalForm(universe_, std::move(polys));
}

NormalForm NormalForm::real_part() const {
    std::map<Minterm, Poly> polys;
    for (const auto& [m, p] : polys_)
        polys[m] = poly_map(p, [](const ExactScalar& c) { return ExactScalar(c.real()); });
    return NormalForm(universe_, std::move(polys));
}

NormalForm NormalForm::imag_part() const {
    std::map<Minterm, Poly> polys;
    for (const auto& [m, p] : polys_)
        polys[m] = poly_map(p, [](const ExactScalar& c) { return ExactScalar(c.imag()); });
    return NormalForm(universe_, std::move(polys));
}

NormalForm NormalForm::restricted(const MintermSet& set) const {
    std::map<Minterm, Poly> polys;
    for (const auto& [m, p] : polys_)
        if (set.count(m)) polys[m] = p;
    return NormalForm(universe_, std::move(polys));
}

bool NormalForm::is_real() const {
    for (const auto& [m, p] : polys_)
        for (const auto& [e, c] : p)
            if (!c.is_real()) return false;
    return true;
}

bool NormalForm::is_zero() const { return polys_.empty(); }

bool NormalForm::is_null() const {
    for (Minterm m : universe_->near_zero())
        if (!poly_at(m).empty()) return false;
    return true;
}

std::optional<Rational> NormalForm::valuation() const {
    std::optional<Rational> v;
    for (Minterm m : universe_->near_zero()) {
        const Poly& p = poly_at(m);
        if (p.empty()) continue;
        const Rational& lead = p.begin()->first;
        if (!v || lead < *v) v = lead;
    }
    return v;
}

NormalForm NormalForm::abs_pointwise() const {
    std::map<Minterm, Poly> polys;
    for (const auto& [m, p] : polys_) polys[m] = poly_abs_pointwise(p);
    return NormalForm(universe_, std::move(polys));
}

NormalForm NormalForm::abs_class() const {
    std::map<Minterm, Poly> polys;
    for (const auto& [m, p] : polys_) {
        if (p.size() == 1 || !is_real()) {
            polys[m] = poly_abs_pointwise(p);
            continue;
        }
        polys[m] = p.begin()->second.real().sign() < 0 ? poly_scale(p, ExactScalar(-1)) : p;
    }
    return NormalForm(universe_, std::move(polys));
}

MintermSet NormalForm::nonnegative_cells() const {
    if (!is_real()) throw PreconditionError("sign cells need a real element");
    MintermSet out;
    for (Minterm m : universe_->satisfiable()) {
        const Poly& p = poly_at(m);
        if (p.empty() || p.begin()->second.real().sign() > 0) out.insert(m);
    }
    return out;
}

MintermSet NormalForm::zero_cells() const {
    MintermSet out;
    for (Minterm m : universe_->satisfiable())
        if (poly_at(m).empty()) out.insert(m);
    return out;
}

ExactScalar NormalForm::eval(const TestPoint& t) const {
    return poly_eval(poly_at(universe_->minterm_of(t)), t.scale());
}

NormalForm NormalForm::canonical() const {
    NormalForm cur = *this;
    bool changed = true;
    while (changed) {
        changed = false;
        const auto& leaves = cur.universe_->leaves();
        for (std::size_t i = 0; i < leaves.size(); ++i) {
            std::vector<SetDescriptor> rest;
            for (std::size_t j = 0; j < leaves.size(); ++j)
                if (j != i) rest.push_back(leaves[j]);
            auto sub = Universe::of(rest);
            std::map<Minterm, const Poly*> image;
            bool consistent = true;
            for (Minterm m : cur.universe_->satisfiable()) {
                const Minterm pm = cur.universe_->project(m, *sub);
                const Poly& p = cur.poly_at(m);
                auto [it, inserted] = image.emplace(pm, &p);
                if (!inserted && !poly_equal(*it->second, p)) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) continue;
            std::map<Minterm, Poly> polys;
            for (const auto& [pm, p] : image)
                if (!p->empty()) polys[pm] = *p;
            cur = NormalForm(sub, std::move(polys));
            changed = true;
            break;
        }
    }
    return cur;
}

std::vector<NormalTerm> NormalForm::terms(std::vector<NormalAtom>* atoms_out) const {
    NormalForm c = canonical();
    // group cells with equal polynomials
    std::vector<std::pair<const Poly*, MintermSet>> groups;
    for (const auto& [m, p] : c.polys_) {
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return poly_equal(*g.first, p); });
        if (it == groups.end()) groups.push_back({&p, {m}});
        else it->second.insert(m);
    }
    struct Named {
        const Poly* poly;
        SetDescriptor set;
    };
    std::vector<Named> named;
    for (const auto& [p, cells] : groups) named.push_back({p, describe(cells, *c.universe_)});
    std::sort(named.begin(), named.end(), [](const Named& a, const Named& b) { return a.set.key() < b.set.key(); });
    std::vector<NormalTerm> out;
    for (std::size_t i = 0; i < named.size(); ++i) {
        const std::string id = "A" + std::to_string(i + 1);
        if (atoms_out) atoms_out->push_back({id, named[i].set});
        for (const auto& [e, coef] : *named[i].poly) out.push_back({coef, e, id});
    }
    std::stable_sort(out.begin(), out.end(), [](const NormalTerm& a, const NormalTerm& b) {
        if (a.exponent != b.exponent) return a.exponent < b.exponent;
        if (a.atom_id.size() != b.atom_id.size()) return a.atom_id.size() < b.atom_id.size();
        return a.atom_id < b.atom_id;
    });
    return out;
}

std::string NormalForm::to_string() const {
    std::vector<NormalAtom> atoms;
    auto ts = terms(&atoms);
    if (ts.empty()) return "0";
    std::map<std::string, std::string> sets;
    for (const auto& a : atoms) sets[a.id] = a.set.to_string();
    std::string out;
    for (const auto& t : ts) {
        if (!out.empty()) out += " + ";
        out += t.coef.to_string() + "*u^(" + gnum::to_string(t.exponent) + ")*[" + sets[t.atom_id] + "]";
    }
    return out;
}

Germ NormalForm::to_germ() const {
    std::vector<NormalAtom> atoms;
    auto ts = terms(&atoms);
    std::map<std::string, SetDescriptor> sets;
    for (const auto& a : atoms) sets[a.id] = a.set;
    std::vector<Germ> summands;
    for (const auto& t : ts) {
        // negative real coefficients become a subtraction
        const bool negate = t.coef.is_real() && t.coef.real().sign() < 0;
        const ExactScalar c = negate ? -t.coef : t.coef;
        std::vector<Germ> factors;
        if (!c.is_one()) factors.push_back(Germ::constant(c));
        if (t.exponent != 0) factors.push_back(Germ::alpha(t.exponent));
        const auto& s = sets[t.atom_id];
        if (s.kind() != SetKind::Full) factors.push_back(Germ::chi(s));
        if (factors.empty()) factors.push_back(Germ::constant(ExactScalar(1)));
        Germ body = factors.size() == 1 ? factors.front() : Germ::mul(factors);
        summands.push_back(negate ? Germ::neg(body) : body);
    }
    if (summands.empty()) return Germ::constant(ExactScalar(0));
    if (summands.size() == 1) return summands.front();
    return Germ::add(summands);
}

bool pointwise_equal(const NormalForm& a, const NormalForm& b) { return (a - b).is_zero(); }
bool equal_mod_null(const NormalForm& a, const NormalForm& b) { return (a - b).is_null(); }

}  // namespace gnum
