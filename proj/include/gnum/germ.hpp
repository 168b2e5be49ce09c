#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gnum/sets.hpp"
#include "gnum/surd.hpp"

namespace gnum {

enum class GermKind { Const, Alpha, Chi, Add, Mul, Neg, Abs, Conj, Re, Im, Osc, PrimeScale };
enum class OscKind { Sin, Cos };
enum class ArithOp { Add, Mul, Neg, Abs, Conj, Re, Im };

struct GermNode;

// Symbolic representative: an immutable expression tree evaluated pointwise at test points.
class Germ {
public:
    Germ();  // the constant 0

    static Germ constant(const ExactScalar& c);
    static Germ alpha(const Rational& r);
    static Germ chi(const SetDescriptor& a);
    static Germ add(std::vector<Germ> terms);
    static Germ mul(std::vector<Germ> factors);
    static Germ neg(const Germ& x);
    static Germ abs(const Germ& x);
    static Germ conj(const Germ& x);
    static Germ re(const Germ& x);
    static Germ im(const Germ& x);
    // sin or cos of (iota*eps)^(-s).
    static Germ osc(OscKind kind, const Rational& s);
    // (iota*eps)^p with p the smallest prime dividing (iota*eps)^-1, and 0 when that is not an integer.
    static Germ prime_scale();

    // Checked builder for a named operation.
    static Germ arith(ArithOp op, const std::vector<Germ>& args);

    GermKind kind() const;
    const ExactScalar& value() const;
    const Rational& exponent() const;  // Alpha r, Osc s
    OscKind osc_kind() const;
    const SetDescriptor& set() const;
    const std::vector<Germ>& children() const;

    bool contains(GermKind k) const;
    void collect_sets(std::vector<SetDescriptor>& out) const;

    friend Germ operator+(const Germ& a, const Germ& b) { return add({a, b}); }
    friend Germ operator-(const Germ& a, const Germ& b) { return add({a, neg(b)}); }
    friend Germ operator*(const Germ& a, const Germ& b) { return mul({a, b}); }
    Germ operator-() const { return neg(*this); }

private:
    explicit Germ(std::shared_ptr<const GermNode> n) : node_(std::move(n)) {}
    static Germ make(GermNode n);
    std::shared_ptr<const GermNode> node_;
};

struct GermNode {
    GermKind kind = GermKind::Const;
    ExactScalar value;
    Rational exponent;
    OscKind osc = OscKind::Sin;
    SetDescriptor set;
    std::vector<Germ> children;
};

// |x(t)| <= constant * (iota*eps)^(-power) at every test point.
struct ModerateBound {
    Rational power;
    Rational constant;
};
ModerateBound moderate_bound(const Germ& x);

}  // namespace gnum
