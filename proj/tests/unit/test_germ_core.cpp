#include <random>

#include "doctest.h"
#include "gnum/errors.hpp"
#include "gnum/eval.hpp"
#include "gnum/normal_form.hpp"
#include "gnum/parser.hpp"
#include "gnum/valuation.hpp"
#include "support/oracles.hpp"

using namespace gnum;

namespace {

ExactScalar value_at(const std::string& expr, const TestPoint& t) { return eval(parse_germ(expr), t).exact(); }

ExactScalar q(long n, long d = 1) { return ExactScalar(Rational(n, d)); }

// Random oscillator-free germ over a few named sets, built from every exact node kind.
Germ random_germ(std::mt19937_64& rng, int depth) {
    static const char* sets[] = {"G2", "D2_0", "D4_1", "T4", "G3"};
    std::uniform_int_distribution<int> kind(0, depth > 0 ? 6 : 2), small(-3, 3), set(0, 4);
    switch (kind(rng)) {
        case 0: return Germ::constant(ExactScalar(Rational(small(rng), 2)));
        case 1: return Germ::alpha(Rational(small(rng), 2));
        case 2: return Germ::chi(parse_set(sets[set(rng)]));
        case 3: return random_germ(rng, depth - 1) + random_germ(rng, depth - 1);
        case 4: return random_germ(rng, depth - 1) * random_germ(rng, depth - 1);
        case 5: return -random_germ(rng, depth - 1);
        default: return Germ::conj(random_germ(rng, depth - 1));
    }
}

TestPoint random_point(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> level(0, 8), k(1, 30), num(1, 7);
    std::uniform_int_distribution<int> iota(1, 4);
    return TestPoint(level(rng), Rational(1, iota(rng)), Rational(num(rng), 8) / (Rational(1) << k(rng)));
}

}  // namespace

TEST_SUITE("germ-core") {
    TEST_CASE("test point invariants") {
        CHECK_THROWS_AS(TestPoint(0, Rational(0), Rational(1, 2)), std::invalid_argument);
        CHECK_THROWS_AS(TestPoint(0, Rational(1), Rational(3, 2)), std::invalid_argument);
        CHECK_THROWS_AS(TestPoint(-1, Rational(1), Rational(1, 2)), std::invalid_argument);
        CHECK(TestPoint(2, Rational(1, 2), Rational(1, 4)).scale() == Rational(1, 8));
        // gmpxx does not reduce Rational(num, den) on its own
        CHECK(TestPoint(0, Rational(2, 4), Rational(3, 6)).eps.get_den() == 2);
    }

    TEST_CASE("eval examples") {
        CHECK(value_at("alpha(2)", TestPoint(3, Rational(1, 2), Rational(1, 4))) == q(1, 64));
        CHECK(value_at("0", TestPoint(5, Rational(1, 3), Rational(1, 7))).is_zero());
        CHECK(value_at("alpha(1) + -alpha(1)", TestPoint(0, Rational(1), Rational(1, 5))).is_zero());
        CHECK(value_at("abs(-3)", TestPoint(0, Rational(1), Rational(1, 5))) == q(3));
        CHECK(value_at("re(2+5i)", TestPoint(1, Rational(1), Rational(1, 9))) == q(2));
        CHECK(value_at("im(2+5i)", TestPoint(1, Rational(1), Rational(1, 9))) == q(5));
        CHECK(value_at("abs(3+4i)", TestPoint(0, Rational(1), Rational(1, 2))) == q(5));
        // chi is 1 on geom(1/2) = {2^-n}
        CHECK(value_at("chi(G2)", TestPoint(0, Rational(1), Rational(1, 8))) == q(1));
        CHECK(value_at("chi(G2)", TestPoint(0, Rational(1), Rational(3, 8))).is_zero());
        // alpha(1/2) at iota*eps = 1/4 is exactly 1/2
        CHECK(value_at("alpha(1/2)", TestPoint(0, Rational(1), Rational(1, 4))) == q(1, 2));
        const TestPoint t(0, Rational(1), Rational(1, 8));
        CHECK(eval(Germ::constant(ExactScalar(Rational(-8, 2))), t).exact() == q(-4));
        CHECK(eval(Germ::alpha(Rational(2, 2)), t).exact() == q(1, 8));
    }

    TEST_CASE("oscillator enclosure matches a 100-digit evaluation") {
        const Germ x = parse_germ("alpha(1)*sin(alpha(-1))");
        // grid points near 1/pi and along 2^-k
        for (const Rational& eps : {Rational(113, 355), Rational(1, 3), Rational(1, 1024), Rational(7, 1 << 20),
                                    Rational(1, 1000003)}) {
            const ScalarValue v = eval(x, TestPoint(0, Rational(1), eps));
            const ScalarValue tight = eval(x, TestPoint(0, Rational(1), eps), Rational(1) / (Rational(1) << 100));
            const auto reference = testing::eps_sin_inverse(eps);
            const ComplexInterval box = tight.enclosure(400);
            const testing::BigReal lo(box.re.lo().to_string(60)), hi(box.re.hi().to_string(60));
            CHECK(lo - reference <= testing::BigReal("1e-50"));
            CHECK(reference - hi <= testing::BigReal("1e-50"));
            CHECK(tight.width().to_double() <= std::ldexp(1.0, -100));
            CHECK(!v.is_exact());
        }
    }

    TEST_CASE("precision budget") {
        EvalOptions tiny;
        tiny.max_bits = 16;
        CHECK_THROWS_AS(eval(parse_germ("sin(alpha(-3))"), TestPoint(0, Rational(1), Rational(1, 1 << 30)),
                             Rational(1) / (Rational(1) << 60), tiny),
                        PrecisionUnreachable);
    }

    TEST_CASE("normalize examples") {
        const NormalForm a = normalize(parse_germ("alpha(1)*alpha(2)"));
        auto terms = a.terms();
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].exponent == Rational(3));
        CHECK(terms[0].coef == q(1));

        const NormalForm b = normalize(parse_germ("chi(G2) + chi(~G2)"));
        std::vector<NormalAtom> atoms;
        terms = b.terms(&atoms);
        REQUIRE(terms.size() == 1);
        CHECK(terms[0].exponent == Rational(0));
        CHECK(equivalent(atoms.at(0).set, SetDescriptor::full()));

        const NormalForm c = normalize(parse_germ("chi(G2)*chi(G2)"));
        atoms.clear();
        terms = c.terms(&atoms);
        REQUIRE(terms.size() == 1);
        CHECK(equivalent(atoms.at(0).set, parse_set("G2")));

        CHECK_THROWS_AS(normalize(parse_germ("alpha(1)*sin(alpha(-1))")), NotNormalizable);
        CHECK_THROWS_AS(normalize(parse_germ("abs(alpha(1) - alpha(2)*chi(G2) - 1)")), NotNormalizable);
    }

    TEST_CASE("normal form JSON-level terms are sorted and disjoint") {
        std::vector<NormalAtom> atoms;
        const auto terms = normalize(parse_germ("alpha(2)*chi(G2) + 3/4*alpha(-1) + chi(G3)")).terms(&atoms);
        for (std::size_t i = 1; i < terms.size(); ++i)
            CHECK((terms[i - 1].exponent < terms[i].exponent ||
                   (terms[i - 1].exponent == terms[i].exponent && terms[i - 1].atom_id < terms[i].atom_id)));
        for (std::size_t i = 0; i < atoms.size(); ++i)
            for (std::size_t j = i + 1; j < atoms.size(); ++j) CHECK(is_empty(atoms[i].set & atoms[j].set));
    }

    TEST_CASE("is_null examples") {
        CHECK(is_null(parse_germ("0")).null);
        CHECK(is_null(parse_germ("chi(~T4)")).null);
        const NullVerdict v = is_null(parse_germ("alpha(5)"));
        CHECK_FALSE(v.null);
        REQUIRE(v.a.has_value());
        // independent check of the witness points: |x| >= (iota eps)^a
        for (const auto& t : v.points)
            CHECK(cmp(value_at("alpha(5)", t).real().rational_value().value(), pow(t.scale(), v.a->get_num().get_si())) >= 0);
    }

    TEST_CASE("parse and format") {
        const Germ g = parse_germ("alpha(3/2) * chi(G2)");
        CHECK(format(parse_germ(format(g))) == format(g));
        const Germ h = parse_germ("1 - chi(G2)");
        CHECK(h.kind() == GermKind::Add);
        CHECK(h.children().at(1).kind() == GermKind::Neg);
        const Germ osc = parse_germ("alpha(1)*sin(alpha(-1))");
        CHECK(osc.contains(GermKind::Osc));
        CHECK_THROWS_AS(parse_germ("alpha(1"), ParseError);
        CHECK_THROWS_AS(parse_germ("chi(NOPE)"), UnknownName);
        try {
            parse_germ("alpha(1) + * 2");
        } catch (const ParseError& e) {
            CHECK(e.position() == 11);
        }
    }

    TEST_CASE("property: ring axioms and normalize soundness on random germs") {
        std::mt19937_64 rng(7);
        for (int i = 0; i < 150; ++i) {
            const Germ x = random_germ(rng, 3), y = random_germ(rng, 3), z = random_germ(rng, 2);
            const NormalForm nx = normalize(x);
            for (int j = 0; j < 10; ++j) {
                const TestPoint t = random_point(rng);
                const ExactScalar vx = eval(x, t).exact(), vy = eval(y, t).exact(), vz = eval(z, t).exact();
                CHECK(eval((x + y) + z, t).exact() == eval(x + (y + z), t).exact());
                CHECK(eval(x * y, t).exact() == eval(y * x, t).exact());
                CHECK(eval(x * (y + z), t).exact() == vx * vy + vx * vz);
                CHECK(nx.eval(t) == vx);
            }
        }
    }

    TEST_CASE("property: normalize soundness at 1000 points") {
        const Germ x = parse_germ("(alpha(1) - chi(G2))*(2 + alpha(-1/2)*chi(D4_1)) + conj(3i*chi(~G3))");
        const NormalForm nx = normalize(x);
        std::mt19937_64 rng(8);
        for (int i = 0; i < 1000; ++i) {
            const TestPoint t = random_point(rng);
            REQUIRE(nx.eval(t) == eval(x, t).exact());
        }
    }

    TEST_CASE("property: moderateness bound") {
        std::mt19937_64 rng(9);
        for (int i = 0; i < 60; ++i) {
            const Germ x = random_germ(rng, 3);
            const ModerateBound b = moderate_bound(x);
            for (int j = 0; j < 20; ++j) {
                const TestPoint t = random_point(rng);
                const double lhs = testing::log_modulus(eval(x, t).exact());
                const double rhs = std::log(to_double(b.constant)) - to_double(b.power) * std::log(to_double(t.scale()));
                CHECK(lhs <= rhs + 1e-9);
            }
        }
    }

    TEST_CASE("property: no non-zero nilpotents") {
        std::mt19937_64 rng(10);
        for (int i = 0; i < 100; ++i) {
            const NormalForm x = normalize(random_germ(rng, 3));
            if (x.is_null()) continue;
            CHECK_FALSE((x * x).is_null());
        }
    }
}
