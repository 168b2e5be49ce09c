#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gnum/germ.hpp"
#include "gnum/normal_form.hpp"
#include "gnum/oracle.hpp"

namespace gnum {

enum class Mode { Exact, Sampled };
std::string to_string(Mode m);

enum class Tri { Yes, No, Inconclusive };
std::string to_string(Tri t);

// Element of Q u {+inf}; sampled values carry the regression estimate and band instead.
struct Valuation {
    std::optional<Rational> value;  // empty: +inf
    Mode mode = Mode::Exact;
    double estimate = 0;
    double band = 0;
    bool sampled_infinite = false;

    static Valuation exact(std::optional<Rational> v) { return {std::move(v), Mode::Exact, 0, 0, false}; }
    bool infinite() const { return mode == Mode::Exact ? !value.has_value() : sampled_infinite; }
    // Best numeric value; +inf as infinity().
    double as_double() const;
    std::string text() const;
};

// -1, 0, 1 comparing exact valuations with +inf largest.
int compare_valuations(const std::optional<Rational>& a, const std::optional<Rational>& b);
std::optional<Rational> min_valuation(const std::optional<Rational>& a, const std::optional<Rational>& b);
std::optional<Rational> add_valuations(const std::optional<Rational>& a, const std::optional<Rational>& b);

Valuation valuation(const NormalForm& x);
Valuation valuation(const Germ& x, const SampleGrid& g = SampleGrid::default_grid());

// e^{-V}; exact mode keeps the exponent, sampled mode an interval [lo, hi].
struct SharpDistance {
    Valuation v;
    double value = 0;
    double lo = 0, hi = 0;
    std::string text() const;
};

SharpDistance norm(const Germ& x, const SampleGrid& g = SampleGrid::default_grid());
SharpDistance dist(const Germ& x, const Germ& y, const SampleGrid& g = SampleGrid::default_grid());
SharpDistance norm_of(const NormalForm& x);

// r in A(x): eps^-r x -> 0 at every level. Exact: r < V(x).
Tri a_set_contains(const Germ& x, const Rational& r, const SampleGrid& g = SampleGrid::default_grid());

// dist(center, x) < radius, or <= radius when closed.
Tri ball_contains(const Germ& center, const Rational& radius, const Germ& x, bool closed = false,
                  const SampleGrid& g = SampleGrid::default_grid());
// e^{-v} against radius, exact.
bool norm_below(const std::optional<Rational>& v, const Rational& radius, bool closed);

struct NullVerdict {
    bool null = false;
    Mode mode = Mode::Exact;
    // When not null: |x(t)| >= (iota*eps)^a at each listed point.
    std::optional<Rational> a;
    std::vector<TestPoint> points;
};
NullVerdict is_null(const Germ& x, const SampleGrid& g = SampleGrid::default_grid());

struct GeometricInverse {
    NormalForm partial_sum;               // sum_{n<N} x^n
    std::optional<Rational> residual;     // V((1-x) y_N - 1)
    std::optional<Rational> bound;        // N * V(x)
};
// Needs exact V(x) > 0.
GeometricInverse geometric_inverse(const NormalForm& x, unsigned n_terms);
GeometricInverse geometric_inverse(const Germ& x, unsigned n_terms);

// Up to count test points at the given level realizing the assignment m, smallest eps first.
std::vector<TestPoint> cell_points(const Universe& u, Minterm m, std::size_t count, long level,
                                   const Rational& iota = Rational(1));

}  // namespace gnum
