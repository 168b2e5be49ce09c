#include "gnum/germ.hpp"

#include <algorithm>
#include <stdexcept>

namespace gnum {

Germ Germ::make(GermNode n) { return Germ(std::make_shared<const GermNode>(std::move(n))); }

Germ::Germ() : node_(std::make_shared<const GermNode>()) {}

Germ Germ::constant(const ExactScalar& c) {
    GermNode n;
    n.kind = GermKind::Const;
    n.value = c;
    return make(std::move(n));
}

Germ Germ::alpha(const Rational& r) {
    GermNode n;
    n.kind = GermKind::Alpha;
    n.exponent = r;
    n.exponent.canonicalize();
    return make(std::move(n));
}

Germ Germ::chi(const SetDescriptor& a) {
    GermNode n;
    n.kind = GermKind::Chi;
    n.set = a;
    return make(std::move(n));
}

Germ Germ::add(std::vector<Germ> terms) {
    if (terms.empty()) return Germ();
    if (terms.size() == 1) return terms.front();
    GermNode n;
    n.kind = GermKind::Add;
    n.children = std::move(terms);
    return make(std::move(n));
}

Germ Germ::mul(std::vector<Germ> factors) {
    if (factors.empty()) return constant(ExactScalar(1));
    if (factors.size() == 1) return factors.front();
    GermNode n;
    n.kind = GermKind::Mul;
    n.children = std::move(factors);
    return make(std::move(n));
}


Germ Germ::neg(const Germ& x) {
    GermNode n;
    n.kind = GermKind::Neg;
    n.children = {x};
    return make(std::move(n));
}

Germ Germ::abs(const Germ& x) {
    GermNode n;
    n.kind = GermKind::Abs;
    n.children = {x};
    return make(std::move(n));
}

Germ Germ::conj(const Germ& x) {
    GermNode n;
    n.kind = GermKind::Conj;
    n.children = {x};
    return make(std::move(n));
}

Germ Germ::re(const Germ& x) {
    GermNode n;
    n.kind = GermKind::Re;
    n.children = {x};
    return make(std::move(n));
}

Germ Germ::im(const Germ& x) {
    GermNode n;
    n.kind = GermKind::Im;
    n.children = {x};
    return make(std::move(n));
}

Germ Germ::osc(OscKind kind, const Rational& s) {
    if (s < 0) throw std::invalid_argument("oscillator exponent must be non-negative");
    GermNode n;
    n.kind = GermKind::Osc;
    n.osc = kind;
    n.exponent = s;
    return make(std::move(n));
}

Germ Germ::prime_scale() {
    GermNode n;
    n.kind = GermKind::PrimeScale;
    return make(std::move(n));
}

Germ Germ::arith(ArithOp op, const std::vector<Germ>& args) {
    auto need_one = [&] {
        if (args.size() != 1) throw std::invalid_argument("unary operation needs exactly one argument");
    };
    switch (op) {
        case ArithOp::Add:
            if (args.size() < 2) throw std::invalid_argument("add needs at least two arguments");
            return add(args);
        case ArithOp::Mul:
            if (args.size() < 2) throw std::invalid_argument("mul needs at least two arguments");
            return mul(args);
        case ArithOp::Neg: need_one(); return neg(args[0]);
        case ArithOp::Abs: need_one(); return abs(args[0]);
        case ArithOp::Conj: need_one(); return conj(args[0]);
        case ArithOp::Re: need_one(); return re(args[0]);
        case ArithOp::Im: need_one(); return im(args[0]);
    }
    throw std::logic_error("unknown operation");
}

GermKind Germ::kind() const { return node_->kind; }
const ExactScalar& Germ::value() const { return node_->value; }
const Rational& Germ::exponent() const { return node_->exponent; }
OscKind Germ::osc_kind() const { return node_->osc; }
const SetDescriptor& Germ::set() const { return node_->set; }
const std::vector<Germ>& Germ::children() const { return node_->children; }

bool Germ::contains(GermKind k) const {
    if (node_->kind == k) return true;
    return std::any_of(node_->children.begin(), node_->children.end(), [&](const Germ& c) { return c.contains(k); });
}

void Germ::collect_sets(std::vector<SetDescriptor>& out) const {
    if (node_->kind == GermKind::Chi) out.push_back(node_->set);
    for (const auto& c : node_->children) c.collect_sets(out);
}

ModerateBound moderate_bound(const Germ& x) {
    switch (x.kind()) {
        case GermKind::Const: {
            Interval m = x.value().modulus_enclosure(64);
            Rational c;
            mpfr_get_q(c.get_mpq_t(), m.hi().get());
            return {Rational(0), Rational(ceil(c))};
        }
        case GermKind::Alpha: return {x.exponent() < 0 ? Rational(-x.exponent()) : Rational(0), Rational(1)};
        case GermKind::Chi:
        case GermKind::Osc:
        case GermKind::PrimeScale: return {Rational(0), Rational(1)};
        case GermKind::Add: {
            ModerateBound b{Rational(0), Rational(0)};
            for (const auto& c : x.children()) {
                auto cb = moderate_bound(c);
                b.power = std::max(b.power, cb.power, RationalLess{});
                b.constant += cb.constant;
            }
            return b;
        }
        case GermKind::Mul: {
            ModerateBound b{Rational(0), Rational(1)};
            for (const auto& c : x.children()) {
                auto cb = moderate_bound(c);
                b.power += cb.power;
                b.constant *= cb.constant;
            }
            return b;
        }
        default: return moderate_bound(x.children().front());
    }
}

}  // namespace gnum
