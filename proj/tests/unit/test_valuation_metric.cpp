#include <random>

#include "doctest.h"
#include "gnum/corpus.hpp"
#include "gnum/errors.hpp"
#include "gnum/parser.hpp"
#include "gnum/valuation.hpp"
#include "support/oracles.hpp"

using namespace gnum;

namespace {

Germ g(const std::string& s) { return parse_germ(s); }
NormalForm nf(const std::string& s) { return normalize(parse_germ(s)); }

}  // namespace

TEST_SUITE("valuation-metric") {
    TEST_CASE("valuation examples") {
        CHECK(valuation(g("alpha(3/2)")).value == Rational(3, 2));
        CHECK(valuation(g("chi(G2)")).value == Rational(0));
        CHECK(valuation(g("alpha(1) + alpha(2)*chi(G2)")).value == Rational(1));
        CHECK(valuation(g("0")).infinite());
        CHECK(valuation(g("alpha(1) + alpha(2)*chi(G2)")).mode == Mode::Exact);
        // independent pointwise slope
        CHECK(testing::agrees(Rational(1), testing::pointwise_valuation(nf("alpha(1) + alpha(2)*chi(G2)"))));
    }

    TEST_CASE("sampled fallback for oscillators") {
        const Valuation v = valuation(g("alpha(1)*sin(alpha(-1))"));
        CHECK(v.mode == Mode::Sampled);
        CHECK(std::abs(v.estimate - 1.0) <= std::max(0.05, v.band));
    }

    TEST_CASE("a-set membership") {
        CHECK(a_set_contains(g("alpha(2)"), Rational(1)) == Tri::Yes);
        CHECK(a_set_contains(g("alpha(2)"), Rational(2)) == Tri::No);
        CHECK(a_set_contains(g("0"), Rational(100)) == Tri::Yes);
    }

    TEST_CASE("norm and distance") {
        const SharpDistance n = norm(g("alpha(3/2)"));
        CHECK(n.text() == "exp(-3/2)");
        CHECK(n.value == doctest::Approx(std::exp(-1.5)));
        CHECK(dist(g("chi(G2)"), g("chi(G3)")).value == 1.0);
        CHECK(norm(g("0")).value == 0.0);
        CHECK(norm(g("5")).text() == "1");
    }

    TEST_CASE("balls") {
        CHECK(ball_contains(Germ(), Rational(1), g("alpha(1)")) == Tri::Yes);
        CHECK(ball_contains(Germ(), Rational(1), g("1")) == Tri::No);
        CHECK(ball_contains(Germ(), Rational(1), g("1"), true) == Tri::Yes);
        // e^-2 < 1/2 < e^-1 for the radius
        CHECK(ball_contains(Germ(), Rational(1, 2), g("alpha(2)")) == Tri::Yes);
        CHECK(ball_contains(Germ(), Rational(1, 2), g("alpha(1/2)")) == Tri::No);
    }

    TEST_CASE("geometric inverse") {
        const auto z = geometric_inverse(NormalForm(), 5);
        CHECK(pointwise_equal(z.partial_sum, nf("1")));
        CHECK_FALSE(z.residual.has_value());
        const auto a = geometric_inverse(nf("alpha(1)"), 8);
        CHECK(a.residual == Rational(8));
        // residual equals x^8, checked through an independent slope
        CHECK(testing::agrees(Rational(8), testing::pointwise_valuation((nf("1") - nf("alpha(1)")) * a.partial_sum - nf("1"))));
        const auto b = geometric_inverse(nf("alpha(2)*chi(G2)"), 4);
        CHECK(compare_valuations(b.residual, Rational(8)) >= 0);
        CHECK_THROWS_AS(geometric_inverse(nf("chi(G2)"), 3), PreconditionError);
    }

    TEST_CASE("property: exact valuation agrees with an independent pointwise slope") {
        std::mt19937_64 rng(5);
        for (int i = 0; i < 150; ++i) {
            const NormalForm x = random_normal_form(rng, dyadic_atoms(4));
            INFO(format(x.to_germ()));
            CHECK(testing::agrees(x.valuation(), testing::pointwise_valuation(x)));
        }
    }

    TEST_CASE("property: ultrametric and scaling identities") {
        std::mt19937_64 rng(6);
        for (int i = 0; i < 200; ++i) {
            const NormalForm x = random_normal_form(rng, dyadic_atoms(4)), y = random_normal_form(rng, dyadic_atoms(4));
            const auto vx = x.valuation(), vy = y.valuation();
            CHECK(compare_valuations((x + y).valuation(), min_valuation(vx, vy)) >= 0);
            CHECK(compare_valuations((x * y).valuation(), add_valuations(vx, vy)) >= 0);
            CHECK(compare_valuations(x.scaled(ExactScalar(Rational(-7, 3))).valuation(), vx) == 0);
            CHECK(compare_valuations(x.times_alpha(Rational(5, 2)).valuation(), add_valuations(vx, Rational(5, 2))) == 0);
        }
    }

    TEST_CASE("norm_below is exact at the boundary") {
        // e^-1 = 0.3679 < 3/8
        CHECK(norm_below(Rational(1), Rational(3, 8), false));
        CHECK_FALSE(norm_below(Rational(0), Rational(1), false));
        CHECK(norm_below(Rational(0), Rational(1), true));
        CHECK(norm_below(std::nullopt, Rational(1, 1000), false));
    }
}
