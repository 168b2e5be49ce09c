#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <random>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gnum/interval.hpp"
#include "gnum/normal_form.hpp"
#include "gnum/valuation.hpp"

namespace gnum::testing {

using BigReal = boost::multiprecision::cpp_bin_float_100;

inline double log_integer(const Integer& n) {
    long e = 0;
    const double m = mpz_get_d_2exp(&e, n.get_mpz_t());
    return std::log(std::abs(m)) + static_cast<double>(e) * std::log(2.0);
}

// log q for q > 0, with no underflow for tiny q.
inline double log_rational(const Rational& q) { return log_integer(q.get_num()) - log_integer(q.get_den()); }

inline double log_modulus(const ExactScalar& z) {
    BigFloat n2 = z.norm_squared().enclose(256).midpoint();
    BigFloat out(256);
    mpfr_log(out.get(), n2.get(), MPFR_RNDN);
    return 0.5 * out.to_double();
}

// Valuation read off pointwise: per near-zero cell, the slope of log|x| against log(iota*eps) between two
// points far apart in scale; minimum over cells. Empty when x vanishes at every sampled point.
inline std::optional<double> pointwise_valuation(const NormalForm& x) {
    const Universe& u = *x.universe();
    std::optional<double> best;
    for (Minterm m : u.near_zero()) {
        const auto pts = cell_points(u, m, 200, u.eventual_level());
        if (pts.size() < 2) continue;
        const TestPoint& small = pts.front();
        const TestPoint* far = nullptr;
        for (const auto& t : pts)
            if (t.eps >= small.eps * (Rational(1) << 20)) {
                far = &t;
                break;
            }
        if (!far) continue;
        const ExactScalar a = x.eval(small), b = x.eval(*far);
        if (a.is_zero() && b.is_zero()) continue;
        const double la = log_rational(small.scale()), lb = log_rational(far->scale());
        const double slope = (log_modulus(a) - log_modulus(b)) / (la - lb);
        if (!best || slope < *best) best = slope;
    }
    return best;
}

inline bool agrees(const std::optional<Rational>& exact, const std::optional<double>& sampled, double tol = 1e-3) {
    if (!exact || !sampled) return !exact && !sampled;
    return std::abs(exact->get_d() - *sampled) <= tol;
}

// eps * sin(1/eps) in 100-digit binary floating point.
inline BigReal eps_sin_inverse(const Rational& eps) {
    const BigReal e = BigReal(eps.get_num().get_str()) / BigReal(eps.get_den().get_str());
    return e * boost::multiprecision::sin(BigReal(1) / e);
}

}  // namespace gnum::testing
