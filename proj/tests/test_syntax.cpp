#include <doctest.h>

#include "lpc/syntax.hpp"

using namespace lpc;

TEST_CASE("constants print with their mode suffixes") {
    CHECK(print_prop(top()) == "T");
    CHECK(print_prop(zero()) == "0");
    CHECK(print_prop(one_l()) == "1");
    CHECK(print_prop(bot_l()) == "B");
    CHECK(print_prop(one_p()) == "1p");
    CHECK(print_prop(bot_c()) == "Bc");
}

TEST_CASE("parse and print are mutually inverse") {
    for (const char* src : {
             "T", "0", "1", "B", "1p", "Bc",
             "(& T 0)", "(+ 1 B)", "(tensor 1 1)", "(par B B)",
             "(tensor 1p 1p)", "(par Bc Bc)",
             "(F! 1p)", "(F? Bc)", "(! T)", "(? T)",
             "(tensor (F! (! 1)) (F? (? B)))",
         }) {
        Prop p = parse_prop(src);
        CHECK(print_prop(p) == src);
        CHECK(prop_eq(parse_prop(print_prop(p)), p));
    }
}

TEST_CASE("connectives enforce operand modes") {
    CHECK_THROWS_AS(tensor(one_p(), one_l()), mode_error);
    CHECK_THROWS_AS(tensor(bot_c(), bot_c()), mode_error);  // no consumer tensor
    CHECK_THROWS_AS(par(one_p(), one_p()), mode_error);     // no producer par
    CHECK_THROWS_AS(with(one_p(), one_p()), mode_error);    // additives are linear
    CHECK_THROWS_AS(fbang(top()), mode_error);
    CHECK_THROWS_AS(fwhy(one_p()), mode_error);
    CHECK_THROWS_AS(gbang(bot_c()), mode_error);
    CHECK_THROWS_AS(gwhy(one_p()), mode_error);
    // the parser reports mode violations as parse errors, with a position
    CHECK_THROWS_AS(parse_prop("(tensor 1 1p)"), parse_error);
}

TEST_CASE("size counts grammar nodes") {
    CHECK(prop_size(top()) == 1);
    CHECK(prop_size(tensor(one_l(), one_l())) == 3);
    CHECK(prop_size(fbang(gbang(with(top(), zero())))) == 5);
}

TEST_CASE("dual flips modes and is an involution") {
    // constants pair up exactly
    CHECK(prop_eq(dual(top()), zero()));
    CHECK(prop_eq(dual(one_l()), bot_l()));
    CHECK(prop_eq(dual(one_p()), bot_c()));
    CHECK(prop_eq(dual(bot_c()), one_p()));

    // connectives swap with their mirror
    Prop a = one_l(), b = bot_l();
    CHECK(prop_eq(dual(with(a, b)), plus(dual(a), dual(b))));
    CHECK(prop_eq(dual(tensor(a, b)), par(dual(a), dual(b))));
    CHECK(prop_eq(dual(fbang(one_p())), fwhy(dual(one_p()))));
    CHECK(prop_eq(dual(gbang(a)), gwhy(dual(a))));

    auto flip = [](Mode m) {
        return m == Mode::L ? Mode::L : (m == Mode::P ? Mode::C : Mode::P);
    };
    PropUniverse u = enumerate_props(2);
    for (const auto* v : {&u.linear, &u.producer, &u.consumer})
        for (const auto& p : *v) {
            CHECK(prop_eq(dual(dual(p)), p));
            CHECK(mode_of(dual(p)) == flip(mode_of(p)));
        }
}

TEST_CASE("negation is the dual padded by the additive unit") {
    // not A := dual(A) par 0, a linear proposition for linear A
    PropUniverse u = enumerate_props(2);
    for (const auto& a : u.linear) {
        Prop n = neg(a);
        CHECK(mode_of(n) == Mode::L);
        CHECK(prop_eq(n, par(dual(a), zero())));
    }
    CHECK_THROWS_AS(neg(one_p()), mode_error);
}

TEST_CASE("enumeration by level has the expected profile") {
    PropUniverse u1 = enumerate_props(1);
    CHECK(u1.linear.size() == 4);
    CHECK(u1.producer.size() == 1);
    CHECK(u1.consumer.size() == 1);

    PropUniverse u2 = enumerate_props(2);
    // 4 constants + 4*4 pairs * 4 binary connectives + F!1p + F?Bc
    CHECK(u2.linear.size() == 70);
    CHECK(u2.producer.size() == 6);  // 1p, 1p(x)1p, and !A for the 4 constants
    CHECK(u2.consumer.size() == 6);
}

TEST_CASE("enumeration by size is deterministic and size-bounded") {
    auto v1 = enumerate_props_by_size(3);
    auto v2 = enumerate_props_by_size(3);
    REQUIRE(v1.size() == v2.size());
    for (size_t i = 0; i < v1.size(); ++i) CHECK(prop_eq(v1[i], v2[i]));
    for (const auto& p : v1) CHECK(prop_size(p) <= 3);
    // the size-1 stratum is exactly the six constants
    auto c = enumerate_props_by_size(1);
    CHECK(c.size() == 6);
}
