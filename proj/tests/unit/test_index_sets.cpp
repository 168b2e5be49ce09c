#include <random>

#include "doctest.h"
#include "gnum/parser.hpp"
#include "gnum/sets.hpp"

using namespace gnum;

namespace {

TestPoint at(const Rational& eps, long level = 0) { return TestPoint(level, Rational(1), eps); }

}  // namespace

TEST_SUITE("index-sets") {
    TEST_CASE("membership") {
        // 1/8 lies in (1/16, 1/8] with n = 3, odd
        CHECK_FALSE(SetDescriptor::dyadic(2, 0).member(at(Rational(1, 8))));
        CHECK(SetDescriptor::dyadic(2, 1).member(at(Rational(1, 8))));
        CHECK(SetDescriptor::full().member(at(Rational(3, 7), 4)));
        const Rational rho(1, 3);
        CHECK(SetDescriptor::geom(rho).member(at(rho * rho * rho)));
        CHECK_FALSE(SetDescriptor::geom(rho).member(at(Rational(1, 4))));
        CHECK(SetDescriptor::tail(Rational(1, 4)).member(at(Rational(1, 5))));
        CHECK_FALSE(SetDescriptor::tail(Rational(1, 4)).member(at(Rational(1, 4))));
        CHECK(SetDescriptor::levels(2, 5).member(at(Rational(1, 2), 3)));
        CHECK_FALSE(SetDescriptor::levels(2, 5).member(at(Rational(1, 2), 5)));
    }

    TEST_CASE("tail classification") {
        CHECK(tail_class(SetDescriptor::geom(Rational(1, 2))) == TailClass::Proper);
        CHECK(tail_class(SetDescriptor::tail(Rational(1, 4))) == TailClass::FullTail);
        CHECK(tail_class(~SetDescriptor::tail(Rational(1, 4))) == TailClass::NullTail);
        CHECK(tail_class(SetDescriptor::dyadic(3, 1)) == TailClass::Proper);
        CHECK(tail_class(SetDescriptor::empty()) == TailClass::NullTail);
    }

    TEST_CASE("S_f membership") {
        CHECK(in_sf(SetDescriptor::geom(Rational(1, 2))));
        CHECK_FALSE(in_sf(SetDescriptor::empty()));
        CHECK_FALSE(in_sf(SetDescriptor::full()));
        // masked to levels below 5: empty from level 5 on
        CHECK_FALSE(in_sf(SetDescriptor::dyadic(2, 0) & SetDescriptor::levels(0, 5)));
        CHECK(tail_class(SetDescriptor::dyadic(2, 0) & SetDescriptor::levels(0, 5), 2) == TailClass::Proper);
    }

    TEST_CASE("boolean operations") {
        const SetDescriptor a = parse_set("G2");
        CHECK(equivalent(boolean(BoolOp::Union, a, ~a), SetDescriptor::full()));
        CHECK(is_empty(boolean(BoolOp::Intersect, a, ~a)));
        // 2^-n = 3^-m has no solutions with n, m >= 1; only eps = 1 is shared
        const SetDescriptor meet = boolean(BoolOp::Intersect, a, parse_set("G3"));
        CHECK(tail_class(meet) == TailClass::NullTail);
        CHECK(meet.member(at(Rational(1))));
        CHECK_FALSE(meet.member(at(Rational(1, 2))));
    }

    TEST_CASE("atoms") {
        const SetDescriptor a = parse_set("G2"), b = parse_set("D2_0");
        CHECK(atoms({a}).size() == 2);
        CHECK(atoms({a, b}).size() == 4);
        CHECK(atoms({a, a}).size() == 2);
        const auto parts = atoms({a, b, parse_set("T4")});
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j) CHECK(is_empty(parts[i] & parts[j]));
        CHECK(equivalent(SetDescriptor::union_of(parts), SetDescriptor::full()));
    }

    TEST_CASE("registry files") {
        Registry r = Registry::builtin();
        r.load_json_text(R"({"A":{"kind":"geomseq","rho":"1/5"},"B":{"kind":"complement","of":"A"},
                             "C":{"kind":"expr","text":"A & D2_0"}})");
        CHECK(equivalent(*r.find("B"), ~SetDescriptor::geom(Rational(1, 5))));
        CHECK(in_sf(*r.find("C")));
        CHECK_THROWS(r.load_json_text(R"({"X":{"kind":"nope"}})"));
        CHECK_THROWS(r.load_json_text("not json"));
    }

    TEST_CASE("property: S_f closed under complement, tail class swaps, De Morgan pointwise") {
        std::mt19937_64 rng(3);
        const std::vector<SetDescriptor> leaves = {parse_set("G2"),  parse_set("G3"),   parse_set("D2_0"),
                                                   parse_set("D3_1"), parse_set("T16"), SetDescriptor::levels(2)};
        std::uniform_int_distribution<int> pick(0, static_cast<int>(leaves.size()) - 1), op(0, 2);
        std::uniform_int_distribution<long> num(1, 1 << 16), level(0, 6);
        for (int i = 0; i < 200; ++i) {
            SetDescriptor a = leaves[pick(rng)], b = leaves[pick(rng)];
            switch (op(rng)) {
                case 0: a = a | b; break;
                case 1: a = a & ~b; break;
                default: a = ~a;
            }
            CHECK(in_sf(a) == in_sf(~a));
            CHECK(tail_class(~a) == swap(tail_class(a)));
            for (int j = 0; j < 20; ++j) {
                const TestPoint t(level(rng), Rational(1), Rational(num(rng), 1 << 16));
                CHECK((~(a | b)).member(t) == ((~a) & (~b)).member(t));
                CHECK((~~a).member(t) == a.member(t));
            }
        }
    }
}
