#include <random>

#include "doctest.h"
#include "gnum/corpus.hpp"
#include "gnum/errors.hpp"
#include "gnum/oracle.hpp"
#include "gnum/parser.hpp"

using namespace gnum;

TEST_SUITE("oracle") {
    TEST_CASE("sampled valuation examples") {
        CHECK(sampled_valuation(parse_germ("alpha(3/2)")).estimate == doctest::Approx(1.5).epsilon(0.03));
        CHECK(std::abs(sampled_valuation(parse_germ("5")).estimate) <= 0.05);
        const SampledValuation osc = sampled_valuation(parse_germ("alpha(1)*sin(alpha(-1))"));
        CHECK(std::abs(osc.estimate - 1) <= std::max(0.05, osc.band));
        CHECK(osc.band > sampled_valuation(parse_germ("alpha(1)")).band);
        CHECK(sampled_valuation(parse_germ("0")).infinite);
    }

    TEST_CASE("cross check") {
        CHECK(cross_check(parse_germ("0")).pass());
        CHECK(cross_check(parse_germ("alpha(1) + alpha(2)*chi(D4_1)")).pass());
        // a residue stream through an empty cell keeps only three collinear-looking points
        CHECK(cross_check(parse_germ("-3/2*alpha(-5/2)*chi(D4_3) - 1/2*alpha(-2)*chi(D4_2) + "
                                     "3/2*alpha(-1/2)*chi(D4_3) - 3/2*alpha(3/2)*chi(D4_0)"))
                  .pass());
        CrossCheckOptions bad;
        bad.injected_valuation = std::optional<Rational>(Rational(3));
        CHECK_FALSE(cross_check(parse_germ("alpha(1) + alpha(2)*chi(D4_1)"), SampleGrid::default_grid(), bad).pass());
        CrossCheckOptions null_claim;
        null_claim.injected_valuation = std::optional<Rational>();
        CHECK_FALSE(cross_check(parse_germ("alpha(1)"), SampleGrid::default_grid(), null_claim).pass());
    }

    TEST_CASE("grid files") {
        const SampleGrid g = SampleGrid::from_json_text(R"({"levels":[0,2],"iotas":["1"],"k_min":6,"k_max":20})");
        CHECK(g.levels.size() == 2);
        CHECK(g.k_max == 20);
        CHECK_THROWS_AS(SampleGrid::from_json_text(R"({"k_min":10,"k_max":5})"), Error);
        CHECK_THROWS_AS(SampleGrid::from_json_text(R"({"iotas":["2"]})"), Error);
        CHECK_THROWS_AS(SampleGrid::from_json_text("[]"), Error);
    }

    TEST_CASE("property: random normal forms pass the cross check") {
        std::mt19937_64 rng(17);
        for (int i = 0; i < 60; ++i) {
            const NormalForm x = random_normal_form(rng, dyadic_atoms(4));
            INFO(format(x.to_germ()));
            CHECK(cross_check(x.to_germ()).pass());
        }
    }
}
