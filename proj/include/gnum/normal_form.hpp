#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gnum/germ.hpp"
#include "gnum/sets.hpp"
#include "gnum/surd.hpp"
#include "gnum/test_point.hpp"

namespace gnum {

// Finite sum of c * u^r with u = iota*eps; keys are exponents, values nonzero coefficients.
using Poly = std::map<Rational, ExactScalar, RationalLess>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, const ExactScalar& c);
bool poly_equal(const Poly& a, const Poly& b);
ExactScalar poly_eval(const Poly& p, const Rational& u);
std::string poly_to_string(const Poly& p);

struct NormalTerm {
    ExactScalar coef;
    Rational exponent;
    std::string atom_id;
};

struct NormalAtom {
    std::string id;
    SetDescriptor set;
};

// Oscillator-free germ as one polynomial per realizable truth assignment of its set leaves.
class NormalForm {
public:
    NormalForm();  // zero
    NormalForm(Universe::Ref u, std::map<Minterm, Poly> polys);

    static NormalForm constant(const ExactScalar& c);
    static NormalForm alpha(const Rational& r);
    static NormalForm chi(const SetDescriptor& a);
    static NormalForm chi(const Universe::Ref& u, const MintermSet& set);
    // Throws NotNormalizable for oscillators, the prime-scale germ, and abs over mixed-sign sums.
    static NormalForm from_germ(const Germ& x);

    const Universe::Ref& universe() const { return universe_; }
    const std::map<Minterm, Poly>& polys() const { return polys_; }
    const Poly& poly_at(Minterm m) const;

    NormalForm lift(const Universe::Ref& to) const;

    friend NormalForm operator+(const NormalForm& a, const NormalForm& b);
    friend NormalForm operator-(const NormalForm& a, const NormalForm& b);
    friend NormalForm operator*(const NormalForm& a, const NormalForm& b);
    NormalForm operator-() const;
    NormalForm scaled(const ExactScalar& c) const;
    NormalForm times_alpha(const Rational& r) const;
    NormalForm power(unsigned n) const;
    NormalForm conj() const;
    NormalForm real_part() const;
    NormalForm imag_part() const;
    // x * chi(S) for S a set of minterms of this universe.
    NormalForm restricted(const MintermSet& set) const;

    bool is_real() const;
    // Identically zero at every test point.
    bool is_zero() const;
    // Zero near eps = 0 on every realizable cell of the eventual level.
    bool is_null() const;
    // Smallest leading exponent over near-zero cells; empty for null elements.
    std::optional<Rational> valuation() const;

    // Pointwise modulus; needs a single term or same-sign real terms on each cell.
    NormalForm abs_pointwise() const;
    // Modulus of the class: on each cell the sign of the leading coefficient decides.
    NormalForm abs_class() const;
    // Cells where the leading coefficient is non-negative (zero cells included). Real input only.
    MintermSet nonnegative_cells() const;
    MintermSet zero_cells() const;

    ExactScalar eval(const TestPoint& t) const;

    // Same element over the fewest leaves.
    NormalForm canonical() const;
    // Canonical term list with atom descriptors.
    std::vector<NormalTerm> terms(std::vector<NormalAtom>* atoms = nullptr) const;
    std::string to_string() const;
    Germ to_germ() const;

private:
    Universe::Ref universe_;
    std::map<Minterm, Poly> polys_;
};

bool pointwise_equal(const NormalForm& a, const NormalForm& b);
bool equal_mod_null(const NormalForm& a, const NormalForm& b);

// Shorthand: germ to normal form.
inline NormalForm normalize(const Germ& x) { return NormalForm::from_germ(x); }

}  // namespace gnum
