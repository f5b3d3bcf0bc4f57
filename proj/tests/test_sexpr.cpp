#include <doctest.h>

#include "lpc/sexpr.hpp"

using namespace lpc;

TEST_CASE("atoms and lists roundtrip through print") {
    for (const char* src : {"x", "()", "(a b c)", "(a (b c) (d (e)))", "(|- (1 1) (T))"}) {
        SExpr e = parse_sexpr(src);
        CHECK(to_string(e) == src);
    }
}

TEST_CASE("whitespace and comments are insignificant") {
    SExpr e = parse_sexpr("  (a ; trailing words\n   b)  ");
    CHECK(to_string(e) == "(a b)");
    CHECK(to_string(parse_sexpr("(a\n\tb\r\n c)")) == "(a b c)");
}

TEST_CASE("parse_sexprs reads a whole stream") {
    auto es = parse_sexprs("(a) b ; comment\n (c d)");
    REQUIRE(es.size() == 3);
    CHECK(to_string(es[0]) == "(a)");
    CHECK(to_string(es[1]) == "b");
    CHECK(to_string(es[2]) == "(c d)");
    CHECK(parse_sexprs("").empty());
}

TEST_CASE("malformed input reports a position") {
    for (const char* bad : {"(a", ")", "(a))", ""}) {
        CHECK_THROWS_AS(parse_sexpr(bad), parse_error);
    }
    try {
        parse_sexpr("(a\n  (b )) )");
    } catch (const parse_error& e) {
        CHECK(e.line == 2);
    }
}

TEST_CASE("constructors agree with the parser") {
    SExpr e = sx_list({sx_atom("a"), sx_list({sx_atom("b")})});
    CHECK(to_string(e) == to_string(parse_sexpr("(a (b))")));
}
