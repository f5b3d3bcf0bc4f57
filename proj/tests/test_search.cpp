#include <doctest.h>

#include "lpc/search.hpp"

using namespace lpc;

TEST_CASE("search proves the easy goals and its proofs check") {
    for (const char* goal : {
             "(|- () (1))",
             "(|- (B) ())",
             "(|- (T) (T))",
             "(|- () ((tensor 1 1)))",
             "(|- ((tensor 1 T)) ((tensor T 1)))",
             "(|- ((par B B)) (B B))",
             "(|- () ((& T T)))",
             "(|- (1) ((+ 1 0)))",
             "(|- ((F! 1p)) (1))",
             "(|- (B) ((F? Bc)))",
             "(||- (1p) (Bc 1p))",
             "(||- ((par Bc Bc)) (Bc Bc))",
         }) {
        CAPTURE(goal);
        SearchOutcome out = search(parse_sequent(goal));
        REQUIRE_MESSAGE(out, "no derivation found for ", goal);
        CHECK(check_ok(out.deriv));
        CHECK(sequent_eq(out.deriv->conclusion, parse_sequent(goal)));
        CHECK(!deriv_has_cut(out.deriv));  // the search space is cut-free
    }
}

TEST_CASE("search exhausts rather than diverges on the unprovable") {
    // |- 0 has no derivation; the space is finite, so this is exhaustion,
    // not a budget stop
    SearchOutcome out = search(parse_sequent("(|- () (0))"));
    CHECK(!out);
    CHECK(!out.node_limit);

    CHECK(!search(parse_sequent("(|- () ())")));
    CHECK(!search(parse_sequent("(|- (1) ())")));   // 1 is not refutable
    CHECK(!search(parse_sequent("(||- () ())")));
}

TEST_CASE("provable goals under a starved budget report the stop") {
    SearchBudget tiny;
    tiny.max_nodes = 1;
    SearchOutcome out = search(parse_sequent("(|- ((tensor 1 T)) ((tensor T 1)))"), tiny);
    CHECK(!out);
    CHECK(out.node_limit);
}

TEST_CASE("contraction budget gates the structural loop") {
    // ||- !0 |- !0 (x) !0 requires duplicating the producer: unlike the unit,
    // !0 cannot be conjured from nothing, so the tensor split cannot starve
    // one branch
    Sequent goal = parse_sequent("(||- ((! 0)) ((tensor (! 0) (! 0))))");
    SearchBudget none;
    none.contractions = 0;
    CHECK(!search(goal, none));

    SearchBudget one;
    one.contractions = 1;
    SearchOutcome out = search(goal, one);
    REQUIRE(out);
    CHECK(check_ok(out.deriv));
    CHECK(sequent_eq(out.deriv->conclusion, goal));
}

TEST_CASE("depth budget bounds the derivation height") {
    Sequent goal = parse_sequent("(|- () ((tensor 1 (tensor 1 (tensor 1 1)))))");
    SearchBudget shallow;
    shallow.max_depth = 2;
    CHECK(!search(goal, shallow));
    SearchBudget deep;
    deep.max_depth = 8;
    CHECK(search(goal, deep));
}

TEST_CASE("the provable enumeration is deterministic and consistent") {
    SearchBudget b;
    b.max_depth = 6;
    auto run1 = enumerate_provable(3, b);
    auto run2 = enumerate_provable(3, b);
    REQUIRE(run1.size() == run2.size());
    CHECK(run1.size() > 0);
    for (size_t i = 0; i < run1.size(); ++i)
        CHECK(sequent_eq(run1[i].goal, run2[i].goal));

    // every reported entry really is a checking derivation of its goal
    for (const auto& e : run1) {
        CHECK(check_ok(e.deriv));
        CHECK(sequent_eq(e.deriv->conclusion, e.goal));
    }

    // consistency: a provable proposition's negation must not be provable
    for (const auto& e : run1) {
        if (e.goal.kind != Judgment::Linear || !e.goal.left.empty() ||
            e.goal.right.size() != 1)
            continue;
        const Prop& a = e.goal.right[0];
        if (mode_of(a) != Mode::L) continue;
        Sequent negated{Judgment::Linear, {}, make_ctx({neg(a)})};
        SearchOutcome refute = search(negated, b);
        CAPTURE(print_prop(a));
        CHECK(!refute);
    }
}
