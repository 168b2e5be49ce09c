#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gnum/normal_form.hpp"
#include "gnum/oracle.hpp"
#include "gnum/scalar.hpp"
#include "gnum/valuation.hpp"

namespace gnum {

// Union of truth assignments of a universe, read as an index set.
struct CellSet {
    Universe::Ref universe;
    MintermSet cells;

    SetDescriptor descriptor() const { return describe(cells, *universe); }
    TailClass tail() const { return classify(cells, *universe); }
    bool in_sf() const { return tail() == TailClass::Proper; }
    CellSet complement() const;
    NormalForm chi() const { return NormalForm::chi(universe, cells); }
    bool subset_of(const CellSet& other) const;
};

// |P(u)| < u^a for all small u > 0.
bool below_power_near_zero(const Poly& p, const Rational& a);

CellSet zero_set(const NormalForm& x);
// Cells where |x| < (iota*eps)^a near eps = 0; exact away from finitely many crossover scales per cell.
CellSet n_a_set(const NormalForm& x, const Rational& a);

struct UnitWitness {
    Rational r;          // |x| >= (iota*eps)^r
    long from_level = 0; // on levels q >= from_level
    Rational eta;        // for eps < eta
};

struct UnitVerdict {
    bool unit = false;
    Mode mode = Mode::Exact;
    std::optional<UnitWitness> witness;
    std::optional<CellSet> obstruction;  // S in S_f with x * chi(S) = 0
};

// Throws PreconditionError("null-input") for null x.
UnitVerdict is_unit(const NormalForm& x);
UnitVerdict is_unit(const Germ& x, const SampleGrid& g = SampleGrid::default_grid());

struct ApproxStep {
    long a;
    CellSet set;
};

struct ApproxCase {
    bool case_a = false;
    // Case A: set S with x*chi(S) null and |x| >= alpha_a off S. Case B: the nested chain, truncated.
    std::vector<ApproxStep> steps;
    const ApproxStep& last() const { return steps.back(); }
};

constexpr long kMaxA = 64;

// Preconditions: x not null and not a unit.
ApproxCase approx_decompose(const NormalForm& x, long max_n);

struct UnitApprox {
    NormalForm value;
    std::string kind;  // "zero", "unit", "case-a", "case-b"
    std::optional<ApproxStep> step;
    std::optional<Rational> dist;   // V(x_n - x)
    std::optional<Rational> bound;  // V of max(e^-a_n, ||x chi(S_n)||)
};
UnitApprox unit_approx_seq(const NormalForm& x, long n);

struct Unitized {
    long a;
    NormalForm unit;
    NormalForm idempotent;
    CellSet set;
};
// Preconditions: x not null and not a unit. Throws NotFound when no a <= kMaxA works.
Unitized unitize(const NormalForm& x);

struct RecoveredIdempotent {
    long a = 1;
    CellSet set;
};
// Throws Error("not-idempotent") unless e^2 - e is null and e, e - 1 are not.
RecoveredIdempotent idempotent_to_chi(const NormalForm& e);

struct PrimeScaleSample {
    TestPoint point;
    std::optional<Integer> exponent;
    ScalarValue value;
};
Germ prime_scale_witness();
// Along eps = p^-n (iota = 1) and along eps = 1/(n-th prime).
std::vector<PrimeScaleSample> prime_scale_diagnostic(const Integer& p, int n_points);
std::vector<PrimeScaleSample> prime_scale_mixed_diagnostic(int n_points);

}  // namespace gnum
