#include <doctest.h>

#include "corpus_derivs.hpp"
#include "lpc/cutelim.hpp"
#include "lpc/search.hpp"

using namespace lpc;

namespace {

// shared assertions for a successful elimination
void expect_eliminated(const Deriv& before, const char* what) {
    CAPTURE(what);
    EliminationResult res = eliminate_all(before, /*with_trace=*/true);
    CHECK(!deriv_has_cut(res.deriv));
    CHECK(check_ok(res.deriv, CheckPolicy{false}));
    CHECK(sequent_eq(res.deriv->conclusion, before->conclusion));
    CHECK(trace_measure_decreases(res.trace));
}

} // namespace

TEST_CASE("cut-free derivations pass through unchanged") {
    for (const auto& [name, d] : corpus::all_rule_derivations()) {
        if (deriv_has_cut(d)) continue;
        CAPTURE(name);
        Deriv out = eliminate(d);
        CHECK(print_deriv(out) == print_deriv(d));
    }
}

TEST_CASE("the corpus cuts eliminate") {
    for (const auto& [name, d] : corpus::all_rule_derivations()) {
        if (!deriv_has_cut(d)) continue;
        expect_eliminated(d, name.c_str());
    }
}

TEST_CASE("a principal tensor cut reduces to its component cuts") {
    using namespace lpc::build;
    Prop I = one_l();
    Prop t = tensor(I, I);
    Deriv d = make_cut(t, tensor_r(t, one_r(I), one_r(I)), tensor_l(t, one_l(I, ax(I))));
    expect_eliminated(d, "tensor against tensor");
}

TEST_CASE("cuts against an axiom vanish") {
    using namespace lpc::build;
    for (const Prop& a : {top(), one_l(), with(one_l(), bot_l()), fbang(one_p())}) {
        CAPTURE(print_prop(a));
        // ax(a) cut with ax(a): both orders collapse to ax(a)
        Deriv d = make_cut(a, ax(a), ax(a));
        Deriv out = eliminate(d);
        CHECK(!deriv_has_cut(out));
        CHECK(sequent_eq(out->conclusion, ax(a)->conclusion));
    }
}

TEST_CASE("a weakened producer cut erases the producer premise") {
    using namespace lpc::build;
    // ||- . |- 1p   cut   1p, . |- 1  where the copy is introduced by weakening
    Deriv d = make_cut(one_p(), one_p_r(), weak_l(one_p(), one_r(one_l())));
    expect_eliminated(d, "cut against weakening");
    CHECK(sequent_eq(eliminate(d)->conclusion, parse_sequent("(|- () (1))")));
}

TEST_CASE("a contracted producer cut duplicates the producer premise") {
    using namespace lpc::build;
    Prop P = gbang(top());  // a producer with real content
    Deriv prod = gbang_r(P, top_r({}, {top()}));        // ||- . |- !T
    Deriv twice = tensor_r(tensor(P, P), ax_p(P), ax_p(P));
    Deriv consumer = contr_l(P, twice);                 // ||- !T |- !T (x) !T
    Deriv d = make_cut(P, prod, consumer);
    expect_eliminated(d, "cut against contraction");
    CHECK(sequent_eq(eliminate(d)->conclusion, parse_sequent("(||- () ((tensor (! T) (! T))))")));
}

TEST_CASE("search-found derivations cut against each other and eliminate") {
    // stitch together cuts from the provable enumeration: whenever goal g1
    // proves |- ..., x and g2 proves x, ... |- ..., cut them on x
    SearchBudget b;
    b.max_depth = 6;
    auto entries = enumerate_provable(3, b);
    size_t cuts_tried = 0;
    for (const auto& e1 : entries) {
        if (e1.goal.kind != Judgment::Linear) continue;
        for (const auto& e2 : entries) {
            if (cuts_tried >= 200) break;
            if (e2.goal.kind != Judgment::Linear) continue;
            for (const auto& x : e1.goal.right) {
                if (mode_of(x) != Mode::L) continue;
                if (ctx_count(e2.goal.left, x) == 0) continue;
                Deriv d = build::make_cut(x, e1.deriv, e2.deriv);
                REQUIRE(check_ok(d));
                expect_eliminated(d, print_prop(x).c_str());
                ++cuts_tried;
                break;
            }
        }
    }
    CHECK(cuts_tried >= 50);
}

TEST_CASE("eliminate_cut_plus removes several copies at once") {
    using namespace lpc::build;
    Prop P = gbang(one_l());
    Deriv prod = gbang_r(P, one_r(one_l()));  // ||- . |- !1
    // consumer with two copies: ||- !1, !1 |- !1 (x) !1
    Deriv both = tensor_r(tensor(P, P), ax_p(P), ax_p(P));
    EliminationResult res = eliminate_cut_plus(prod, both, {P, 2});
    CHECK(!deriv_has_cut(res.deriv));
    CHECK(check_ok(res.deriv, CheckPolicy{false}));
    CHECK(sequent_eq(res.deriv->conclusion,
                     parse_sequent("(||- () ((tensor (! 1) (! 1))))")));
    CHECK(trace_measure_decreases(res.trace));

    // zero copies: the producer premise is discarded entirely
    Deriv none = weak_l(P, one_r(one_l()));  // !1 |- 1 by weakening
    EliminationResult res0 = eliminate_cut_plus(prod, none, {P, 1});
    CHECK(sequent_eq(res0.deriv->conclusion, parse_sequent("(|- () (1))")));

    // misuse is reported, not silently mangled
    CHECK_THROWS_AS(eliminate_cut_plus(prod, both, {P, 5}), std::invalid_argument);
    CHECK_THROWS_AS(eliminate_cut_plus(prod, both, {one_l(), 1}), std::invalid_argument);
}

TEST_CASE("the known hole is reported as a structured gap") {
    using namespace lpc::build;
    // A bare demoted consumer reaching a linear axiom has no cut-free
    // counterpart: ?B |- . exists only through the persistent judgment, and
    // nothing in the linear fragment can reconstruct it. Cutting F? ? B
    // between its right and left introductions funnels elimination into
    // exactly that dead end, so the eliminator must surface a diagnosis
    // instead of an unsound derivation.
    Prop g = gwhy(bot_l());                       // ?B, a consumer
    Deriv left = fwhy_r(fwhy(g), ax(g));          // ?B |- F? ? B
    Deriv right = fwhy_l(fwhy(g), gwhy_l(g, bot_l(bot_l())));  // F? ? B |- .
    Deriv d = make_cut(fwhy(g), left, right);
    REQUIRE(check_ok(d));
    REQUIRE(sequent_eq(d->conclusion, parse_sequent("(|- ((? B)) ())")));
    bool gapped = false;
    try {
        (void)eliminate(d);
    } catch (const cut_gap_error& e) {
        gapped = true;
        CHECK(mode_of(e.diagnosis().blocking) != Mode::L);
        CHECK(!e.diagnosis().note.empty());
        CHECK(e.diagnosis().goal.kind == Judgment::Linear);
    }
    CHECK(gapped);
}
