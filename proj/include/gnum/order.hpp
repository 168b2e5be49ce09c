#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gnum/families.hpp"
#include "gnum/normal_form.hpp"
#include "gnum/oracle.hpp"
#include "gnum/valuation.hpp"

namespace gnum {

struct SignDecomposition {
    Germ pos, neg;
    // Present on the exact path: sign of the canonical representative and the cells where it is >= 0.
    std::optional<Germ> theta;
    std::optional<CellSet> support;
    Mode mode = Mode::Exact;
};

struct ExactSign {
    NormalForm pos, neg, theta;
    CellSet support;
};

// Throws Error("complex-input") for non-real x.
ExactSign decompose(const NormalForm& x);
SignDecomposition decompose(const Germ& x);

struct SignEvidence {
    Rational b;
    TestPoint point;
    double value;
};

struct QPositivity {
    Tri verdict = Tri::Inconclusive;
    Mode mode = Mode::Exact;
    // Points with x < -eps^b in every window of the refutation.
    std::vector<SignEvidence> evidence;
};

QPositivity is_qpositive(const NormalForm& x);
QPositivity is_qpositive(const Germ& x, const SampleGrid& g = SampleGrid::default_grid());

enum class QuotientSign { NonNegative, NonPositive, Zero, BothImpossible };
std::string to_string(QuotientSign s);

struct QuotientSignResult {
    QuotientSign sign;
    IdealMembership pos_member, neg_member;
};
// x must be real and a polynomial combination of the family's atoms up to null elements.
QuotientSignResult quotient_sign(const NormalForm& x, const Family& f);

// Requires x in g_f(F) and |x| - |y| q-positive; returns ideal_member(y, F).
bool convexity_check(const NormalForm& x, const NormalForm& y, const Family& f);

struct ComplexParts {
    Germ re, im;
};
ComplexParts complex_parts(const Germ& z);
Germ abs_complex(const Germ& z);

}  // namespace gnum
