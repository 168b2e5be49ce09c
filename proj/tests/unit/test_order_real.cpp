#include <random>

#include "doctest.h"
#include "gnum/corpus.hpp"
#include "gnum/errors.hpp"
#include "gnum/eval.hpp"
#include "gnum/order.hpp"
#include "gnum/parser.hpp"

using namespace gnum;

namespace {

NormalForm nf(const std::string& s) { return normalize(parse_germ(s)); }

}  // namespace

TEST_SUITE("order-real") {
    TEST_CASE("decomposition examples") {
        const ExactSign a = decompose(nf("alpha(1)"));
        CHECK(pointwise_equal(a.pos, nf("alpha(1)")));
        CHECK(a.neg.is_zero());
        CHECK(pointwise_equal(a.theta, nf("1")));

        const ExactSign b = decompose(nf("-alpha(1)"));
        CHECK(b.pos.is_zero());
        CHECK(pointwise_equal(b.neg, nf("-alpha(1)")));

        const ExactSign c = decompose(nf("chi(G2) - chi(~G2)"));
        CHECK(pointwise_equal(c.pos, nf("chi(G2)")));
        CHECK(pointwise_equal(c.neg, nf("-chi(~G2)")));
        CHECK(equal_near_zero(c.support.descriptor(), parse_set("G2")));

        CHECK_THROWS_AS(decompose(nf("2i*alpha(1)")), Error);
    }

    TEST_CASE("sampled decomposition of the oscillating germ") {
        const SignDecomposition d = decompose(parse_germ("alpha(1)*sin(alpha(-1))"));
        CHECK(d.mode == Mode::Sampled);
        // x = pos + neg pointwise
        for (long k = 3; k < 12; ++k) {
            const TestPoint t(0, Rational(1), Rational(1, 3) / (Rational(1) << k));
            const double x = eval(parse_germ("alpha(1)*sin(alpha(-1))"), t).real_double();
            CHECK(eval(d.pos, t).real_double() + eval(d.neg, t).real_double() == doctest::Approx(x).epsilon(1e-12));
            CHECK(eval(d.pos, t).real_double() >= -1e-15);
            CHECK(eval(d.neg, t).real_double() <= 1e-15);
        }
    }

    TEST_CASE("q-positivity") {
        CHECK(is_qpositive(nf("alpha(2)")).verdict == Tri::Yes);
        const Germ osc = parse_germ("alpha(1)*sin(alpha(-1))");
        const QPositivity pos = is_qpositive(osc), neg = is_qpositive(-osc);
        CHECK(pos.verdict == Tri::No);
        CHECK(neg.verdict == Tri::No);
        // every evidence point violates x >= -(iota eps)^b, checked by direct evaluation
        for (const auto& e : pos.evidence) {
            const double x = eval(osc, e.point).real_double();
            CHECK(x < -std::pow(to_double(e.point.scale()), to_double(e.b)));
        }
        for (const auto& e : neg.evidence) {
            const double x = -eval(osc, e.point).real_double();
            CHECK(x < -std::pow(to_double(e.point.scale()), to_double(e.b)));
        }
        CHECK(is_qpositive(nf("-chi(G2)")).verdict == Tri::No);
        CHECK(is_qpositive(nf("chi(G2)")).verdict == Tri::Yes);
    }

    TEST_CASE("quotient sign examples") {
        const auto alg = std::make_shared<const AtomAlgebra>(std::vector<SetDescriptor>{parse_set("G2"), parse_set("~G2")});
        // family excluding atom 1 contains G2
        const Family f{alg, 1};
        CHECK(quotient_sign(nf("chi(G2)"), f).sign == QuotientSign::Zero);
        CHECK(quotient_sign(nf("chi(G2) - chi(~G2)"), f).sign == QuotientSign::NonPositive);
        CHECK(quotient_sign(nf("1"), f).sign == QuotientSign::NonNegative);
        CHECK(quotient_sign(nf("-alpha(3)"), f).sign == QuotientSign::NonPositive);
    }

    TEST_CASE("convexity examples") {
        const auto alg = std::make_shared<const AtomAlgebra>(std::vector<SetDescriptor>{parse_set("G2"), parse_set("~G2")});
        const Family f{alg, 1};
        CHECK(convexity_check(nf("chi(G2)"), nf("alpha(1)*chi(G2)"), f));
        CHECK(convexity_check(nf("chi(G2)"), nf("chi(G2)"), f));
        CHECK(convexity_check(nf("chi(G2)"), nf("1/2*chi(G2)"), f));
    }

    TEST_CASE("complex parts") {
        CHECK(eval(abs_complex(parse_germ("3+4i")), TestPoint(0, Rational(1), Rational(1, 2))).exact() ==
              ExactScalar(Rational(5)));
        const ComplexParts p = complex_parts(parse_germ("1i*alpha(1)"));
        const TestPoint t(0, Rational(1), Rational(1, 16));
        CHECK(eval(p.re, t).exact().is_zero());
        CHECK(eval(p.im, t).exact() == ExactScalar(Rational(1, 16)));
    }

    TEST_CASE("property: positive and negative parts") {
        std::mt19937_64 rng(13);
        for (int i = 0; i < 200; ++i) {
            const NormalForm a = random_normal_form(rng, dyadic_atoms(4)), b = random_normal_form(rng, dyadic_atoms(4));
            const ExactSign sa = decompose(a), sb = decompose(b);
            CHECK(pointwise_equal(sa.pos + sa.neg, a));
            CHECK(pointwise_equal(sa.pos - sa.neg, a.abs_class()));
            CHECK(pointwise_equal(decompose(a * b).neg, sa.pos * sb.neg + sa.neg * sb.pos));
            CHECK(is_qpositive(sa.pos).verdict == Tri::Yes);
            CHECK(is_qpositive(-sa.neg).verdict == Tri::Yes);
        }
    }
}
