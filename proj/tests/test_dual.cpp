#include <doctest.h>

#include "lpc/elaborate.hpp"
#include "lpc/search.hpp"

using namespace lpc;

TEST_CASE("closed duality witnesses exist for every small proposition") {
    PropUniverse u = enumerate_props(2);
    for (const auto& a : u.linear) {
        CAPTURE(print_prop(a));
        Deriv l = lin_dual_left(a);
        CHECK(check_ok(l));
        CHECK(!deriv_has_cut(l));
        CHECK(sequent_eq(l->conclusion,
                         Sequent{Judgment::Linear, make_ctx({a, dual(a)}), {}}));
        Deriv r = lin_dual_right(a);
        CHECK(check_ok(r));
        CHECK(!deriv_has_cut(r));
        CHECK(sequent_eq(r->conclusion,
                         Sequent{Judgment::Linear, {}, make_ctx({a, dual(a)})}));
    }
    for (const auto& p : u.producer) {
        CAPTURE(print_prop(p));
        Deriv l = prod_dual_left(p);
        CHECK(check_ok(l));
        CHECK(!deriv_has_cut(l));
        CHECK(sequent_eq(l->conclusion,
                         Sequent{Judgment::Persistent, make_ctx({p, dual(p)}), {}}));
        Deriv r = prod_dual_right(p);
        CHECK(check_ok(r));
        CHECK(sequent_eq(r->conclusion,
                         Sequent{Judgment::Persistent, {}, make_ctx({p, dual(p)})}));
    }
    // consumers go through their dual producer, multiset contexts make the
    // sequents literally identical
    for (const auto& c : u.consumer) {
        Deriv l = prod_dual_left(dual(c));
        CHECK(sequent_eq(l->conclusion,
                         Sequent{Judgment::Persistent, make_ctx({c, dual(c)}), {}}));
    }
}

TEST_CASE("dual_axiom covers both sides at the linear judgment") {
    // for a linear a these are cut-free; for persistent propositions they
    // carry the one judgment-crossing cut
    for (const char* s : {"1", "(tensor 1 B)", "(& T 0)"}) {
        Prop a = parse_prop(s);
        Deriv l = dual_axiom(a, Side::Left);
        CHECK(check_ok(l));
        CHECK(sequent_eq(l->conclusion,
                         Sequent{Judgment::Linear, make_ctx({a, dual(a)}), {}}));
        Deriv r = dual_axiom(a, Side::Right);
        CHECK(check_ok(r));
        CHECK(sequent_eq(r->conclusion,
                         Sequent{Judgment::Linear, {}, make_ctx({a, dual(a)})}));
    }
    for (const char* s : {"1p", "(! 1)", "Bc", "(? B)"}) {
        Prop a = parse_prop(s);
        Deriv l = dual_axiom(a, Side::Left);
        CHECK(check_ok(l));
        CHECK(sequent_eq(l->conclusion,
                         Sequent{Judgment::Linear, make_ctx({a, dual(a)}), {}}));
    }
}

TEST_CASE("transport moves an occurrence across the turnstile") {
    // 1 (x) T |- T (x) 1 becomes |- dual(1 (x) T), T (x) 1
    Prop t = parse_prop("(tensor 1 T)");
    Sequent goal = parse_sequent("(|- ((tensor 1 T)) ((tensor T 1)))");
    SearchOutcome found = search(goal);
    REQUIRE(found);
    Deriv moved = elaborate_dual(found.deriv, Side::Left, t);
    CHECK(check_ok(moved));
    CHECK(!deriv_has_cut(moved));
    CHECK(sequent_eq(moved->conclusion,
                     elaborated_conclusion(goal, Side::Left, t)));
    Sequent want{Judgment::Linear, {}, make_ctx({dual(t), parse_prop("(tensor T 1)")})};
    CHECK(sequent_eq(moved->conclusion, want));
}

TEST_CASE("transport is involutive on the conclusion") {
    Sequent goal = parse_sequent("(|- (B) ())");
    SearchOutcome found = search(goal);
    REQUIRE(found);
    Prop b = bot_l();
    Deriv once = elaborate_dual(found.deriv, Side::Left, b);
    CHECK(sequent_eq(once->conclusion, parse_sequent("(|- () (1))")));
    Deriv twice = elaborate_dual(once, Side::Right, dual(b));
    CHECK(sequent_eq(twice->conclusion, goal));
    CHECK(check_ok(twice));
}

TEST_CASE("transport sweeps the provable enumeration") {
    SearchBudget b;
    b.max_depth = 5;
    auto entries = enumerate_provable(3, b);
    size_t moved_count = 0, gapped = 0;
    for (const auto& e : entries) {
        if (e.goal.kind != Judgment::Linear) continue;
        // move the first linear occurrence from each side, when there is one
        for (Side sd : {Side::Left, Side::Right}) {
            const Context& ctx = sd == Side::Left ? e.goal.left : e.goal.right;
            if (ctx.empty()) continue;
            const Prop& x = ctx[0];
            try {
                Deriv moved = elaborate_dual(e.deriv, sd, x);
                CHECK(check_ok(moved));
                CHECK(!deriv_has_cut(moved));
                CHECK(sequent_eq(moved->conclusion,
                                 elaborated_conclusion(e.goal, sd, x)));
                ++moved_count;
            } catch (const cut_gap_error&) {
                ++gapped;  // the documented hole; counted, not hidden
            }
        }
    }
    CHECK(moved_count > 50);
    // the hole is real but must stay rare on this corpus
    CHECK(gapped < moved_count / 4);
}

TEST_CASE("a consumer at a linear axiom is the transport counterexample") {
    using namespace lpc::build;
    // Moving ?1 across the turnstile of its own axiom asks for the linear
    // cancellation |- !B, ?1 - but the only right rule for ! promotes into
    // the persistent judgment, so no cut-free linear derivation exists.
    Prop g = gwhy(one_l());
    Deriv a = ax(g);  // ?1 |- ?1
    REQUIRE(check_ok(a));
    CHECK_THROWS_AS((void)elaborate_dual(a, Side::Left, g), cut_gap_error);

    // the same hole survives wrapping: ?1 |- F? ? 1, move the left ?1
    Deriv d = fwhy_r(fwhy(g), a);
    REQUIRE(check_ok(d));
    bool gapped = false;
    try {
        (void)elaborate_dual(d, Side::Left, g);
    } catch (const cut_gap_error& e) {
        gapped = true;
        CHECK(!e.diagnosis().note.empty());
        CHECK(mode_of(e.diagnosis().blocking) != Mode::L);
    }
    CHECK(gapped);
}

TEST_CASE("demoted consumers transport when their duality witness exists") {
    using namespace lpc::build;
    // B |- F? ? B via demotion: the tracked occurrence B is linear, so the
    // axiom-free witness carries the move through
    Prop g = gwhy(bot_l());
    Deriv d = fwhy_r(fwhy(g), gwhy_r(g, ax(bot_l())));
    REQUIRE(check_ok(d));
    Deriv moved = elaborate_dual(d, Side::Left, bot_l());
    CHECK(check_ok(moved));
    CHECK(!deriv_has_cut(moved));
    CHECK(sequent_eq(moved->conclusion,
                     elaborated_conclusion(d->conclusion, Side::Left, bot_l())));
}
