#include <doctest.h>

#include "lpc/sequent.hpp"

using namespace lpc;

TEST_CASE("contexts are canonically sorted multisets") {
    Context c = make_ctx({top(), one_l(), top()});
    REQUIRE(c.size() == 3);
    CHECK(std::is_sorted(c.begin(), c.end(), prop_lt));
    CHECK(ctx_count(c, top()) == 2);
    CHECK(ctx_count(c, one_l()) == 1);
    CHECK(ctx_count(c, zero()) == 0);

    // insertion keeps the order and reports where the element landed
    Context d;
    size_t i = ctx_insert(d, one_l());
    CHECK(i == 0);
    ctx_insert(d, one_l());
    CHECK(d.size() == 2);
    CHECK(std::is_sorted(d.begin(), d.end(), prop_lt));

    // equality is multiset equality, independent of construction order
    CHECK(ctx_eq(make_ctx({top(), one_l()}), make_ctx({one_l(), top()})));
    CHECK(!ctx_eq(make_ctx({top()}), make_ctx({top(), top()})));
}

TEST_CASE("subtract and union respect multiplicities") {
    Context c = make_ctx({top(), top(), one_l()});
    auto r = ctx_subtract(c, make_ctx({top()}));
    REQUIRE(r.has_value());
    CHECK(ctx_count(*r, top()) == 1);
    CHECK(!ctx_subtract(c, make_ctx({zero()})).has_value());
    CHECK(!ctx_subtract(c, make_ctx({one_l(), one_l()})).has_value());

    Context u = ctx_union(make_ctx({top()}), make_ctx({top(), one_l()}));
    CHECK(ctx_count(u, top()) == 2);
    CHECK(u.size() == 3);
}

TEST_CASE("mode predicates") {
    CHECK(all_producer(make_ctx({one_p(), tensor(one_p(), one_p())})));
    CHECK(!all_producer(make_ctx({one_p(), top()})));
    CHECK(all_consumer(make_ctx({bot_c()})));
    CHECK(all_persistent(make_ctx({one_p(), bot_c()})));
    CHECK(all_producer({}));  // vacuously
}

TEST_CASE("persistent sequents expose their displaced occurrences") {
    // . ||- 1p : the producer sits on the wrong side, so it is displaced
    Sequent s{Judgment::Persistent, {}, make_ctx({one_p()})};
    auto d = displaced(s);
    REQUIRE(d.size() == 1);
    CHECK(d[0].side == Side::Right);
    CHECK(d[0].index == 0);

    // Bc ||- . : the consumer on the left is displaced
    Sequent t{Judgment::Persistent, make_ctx({bot_c()}), {}};
    auto e = displaced(t);
    REQUIRE(e.size() == 1);
    CHECK(e[0].side == Side::Left);

    // producers left, consumers right: nothing displaced
    Sequent w{Judgment::Persistent, make_ctx({one_p()}), make_ctx({bot_c()})};
    CHECK(displaced(w).empty());

    // linear sequents never report displacement
    Sequent l{Judgment::Linear, make_ctx({one_p()}), make_ctx({one_p()})};
    CHECK(displaced(l).empty());
}

TEST_CASE("persistent sequents restrict their context modes") {
    CHECK(sequent_modes_ok({Judgment::Linear, make_ctx({top()}), make_ctx({one_p()})}));
    CHECK(sequent_modes_ok(
        {Judgment::Persistent, make_ctx({one_p()}), make_ctx({bot_c(), one_p()})}));
    CHECK(!sequent_modes_ok({Judgment::Persistent, make_ctx({top()}), {}}));
    CHECK(!sequent_modes_ok({Judgment::Persistent, {}, make_ctx({fbang(one_p())})}));
}

TEST_CASE("sequents roundtrip through their surface syntax") {
    for (const char* src : {
             "(|- () ())",
             "(|- (1 1) (T))",
             "(|- ((tensor 1 1)) (T (par B B)))",  // contexts print in canonical order
             "(||- (1p 1p) (Bc))",
             "(||- () ((! T)))",
         }) {
        Sequent s = parse_sequent(src);
        CHECK(print_sequent(s) == src);
        CHECK(sequent_eq(parse_sequent(print_sequent(s)), s));
    }
    CHECK_THROWS(parse_sequent("(|- (T))"));      // missing a side
    CHECK_THROWS(parse_sequent("(x () ())"));     // unknown judgment
    CHECK_THROWS(parse_sequent("(|- () (q))"));   // unknown proposition
}
