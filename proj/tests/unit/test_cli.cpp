#include "doctest.h"
#include "gnum/errors.hpp"
#include "gnum/session.hpp"
#include "gnum/suites.hpp"

using namespace gnum;

namespace {

int code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return exit_code_for(e.code());
    }
    return 0;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("session commands") {
        const Session s;
        CHECK(s.val("alpha(3/2)").dump() == R"({"schema":"gnum/1","valuation":"3/2","mode":"exact"})");
        CHECK(s.dist("chi(G2)", "chi(G3)")["dist"].get<double>() == 1.0);
        CHECK(s.is_unit("alpha(1)*chi(G2) + alpha(2)*chi(~G2)")["unit"].get<bool>());
        CHECK(s.approx("chi(G2)", 3)["case"] == "A");
        CHECK(s.unitize("chi(G2)")["a"] == 1);
        CHECK(s.idempotent("chi(G2)")["tail_class"] == "Proper");
        CHECK(s.sign("alpha(1)*sin(alpha(-1))")["qpositive"] == "no");
        CHECK(s.decompose("alpha(1)")["neg"] == "0");
        CHECK(s.oracle("alpha(2)")["result"] == "PASS");
        CHECK(s.oracle("alpha(2)", "5")["result"] == "FAIL");
        CHECK(s.enum_families(R"({"atoms":["D4_0","D4_1","D4_2","D4_3"]})")["count"] == 4);
        const std::string fam = R"({"atoms":["G2","~G2"],"excluded":1})";
        CHECK(s.ideal_member("chi(G2)", fam)["member"].get<bool>());
        CHECK(s.qsign("chi(G2) - chi(~G2)", fam)["sign"] == "non-positive");
    }

    TEST_CASE("every output carries the schema tag") {
        const Session s;
        for (const Json& j : {s.val("1"), s.norm("1"), s.is_null("0"), s.suite_list(), s.eval("1", TestPoint())})
            CHECK(j["schema"] == "gnum/1");
    }

    TEST_CASE("exit codes") {
        const Session s;
        CHECK(code_of([&] { s.val("alpha("); }) == 2);
        CHECK(code_of([&] { s.val("chi(NOPE)"); }) == 2);
        CHECK(code_of([&] { s.suite("unknown-name"); }) == 2);
        CHECK(code_of([&] { s.enum_families("{"); }) == 2);
        CHECK(code_of([&] { s.is_unit("0"); }) == 1);
        CHECK(code_of([&] { s.idempotent("2*chi(G2)"); }) == 1);
        CHECK(code_of([&] { s.approx("alpha(1)*sin(alpha(-1))", 3); }) == 1);
        CHECK(code_of([&] { s.unitize("alpha(2)"); }) == 1);
        CHECK(code_of([&] { parse_precision("abc"); }) == 2);
    }

    TEST_CASE("precision settings") {
        CHECK(parse_precision("2^-80") == Rational(1) / (Rational(1) << 80));
        CHECK(parse_precision("1/2^10") == Rational(1, 1024));
        CHECK(parse_precision("1e-6") == Rational(1, 1000000));
        CHECK_THROWS(parse_precision("-1"));
    }

    TEST_CASE("suites") {
        const auto& list = suite_list();
        CHECK(list.size() >= 25);
        std::set<std::string> names;
        for (const auto& s : list) names.insert(s.name);
        CHECK(names.size() == list.size());
        const SuiteReport r = theorem_suite("prop-valor");
        CHECK(r.pass());
        const SuiteReport d = theorem_suite("thm-impor-density");
        CHECK(d.pass());
        const Json table = d.tables["alpha1-on-atom"];
        REQUIRE(table.size() == 8);
        for (long n = 1; n <= 8; ++n) CHECK(table[n - 1]["dist"] == "exp(-" + std::to_string(n) + ")");
    }
}
