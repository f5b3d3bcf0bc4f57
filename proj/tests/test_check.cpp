#include <doctest.h>

#include <set>

#include "corpus_derivs.hpp"
#include "lpc/check.hpp"

using namespace lpc;

TEST_CASE("every corpus derivation checks") {
    for (const auto& [name, d] : corpus::all_rule_derivations()) {
        CAPTURE(name);
        CheckReport r = check(d);
        CHECK_MESSAGE(r.ok, name, ": ", r.message, " at ", r.path_string());
    }
}

TEST_CASE("the corpus covers the whole rule set") {
    std::set<RuleId> seen;
    for (const auto& [name, d] : corpus::all_rule_derivations())
        deriv_visit(d, [&](const Deriv& n) { seen.insert(n->rule); });
    for (int i = 0; i <= static_cast<int>(RuleId::CutCPers); ++i) {
        RuleId r = static_cast<RuleId>(i);
        CHECK_MESSAGE(seen.count(r) == 1, "rule not covered: ", rule_name(r));
    }
}

TEST_CASE("derivations survive a print/parse roundtrip") {
    for (const auto& [name, d] : corpus::all_rule_derivations()) {
        CAPTURE(name);
        Deriv back = parse_deriv(print_deriv(d));
        CHECK(check_ok(back));
        CHECK(sequent_eq(back->conclusion, d->conclusion));
        CHECK(print_deriv(back) == print_deriv(d));
    }
}

// --- targeted rejections ----------------------------------------------------
//
// Hand-built bad nodes; the builder API would refuse most of these, so they
// are assembled with mk_deriv directly.

namespace {

CheckReport report_of(Deriv d) { return check(d); }

Deriv node(RuleId r, Sequent s, std::vector<Occurrence> prin, std::vector<Deriv> prem) {
    return mk_deriv(r, std::move(s), std::move(prin), std::move(prem));
}

} // namespace

TEST_CASE("axioms must match their two sides") {
    Deriv bad = node(RuleId::Ax, {Judgment::Linear, make_ctx({top()}), make_ctx({zero()})},
                     {}, {});
    CheckReport r = report_of(bad);
    CHECK(!r.ok);

    // axiom with extra context
    Deriv fat = node(RuleId::Ax,
                     {Judgment::Linear, make_ctx({top(), one_l()}), make_ctx({top()})}, {}, {});
    CHECK(!check_ok(fat));

    // persistent axiom on the wrong judgment
    Deriv wrongkind = node(RuleId::AxP, {Judgment::Linear, make_ctx({one_p()}),
                                         make_ctx({one_p()})}, {}, {});
    CheckReport rk = report_of(wrongkind);
    CHECK(!rk.ok);
    CHECK(rk.cause == CheckCause::JudgmentKind);

    // producer axiom on a consumer
    Deriv wrongmode = node(RuleId::AxP, {Judgment::Persistent, make_ctx({bot_c()}),
                                         make_ctx({bot_c()})}, {}, {});
    CHECK(!check_ok(wrongmode));
}

TEST_CASE("arity violations are caught") {
    // a binary rule with one premise
    Deriv d = node(RuleId::TensorR, {Judgment::Linear, {}, make_ctx({tensor(one_l(), one_l())})},
                   {{Side::Right, 0}}, {build::one_r(one_l())});
    CheckReport r = report_of(d);
    CHECK(!r.ok);
    CHECK(r.cause == CheckCause::Arity);

    // a leaf with a premise
    Deriv e = node(RuleId::OneR, {Judgment::Linear, {}, make_ctx({one_l()})},
                   {{Side::Right, 0}}, {build::one_r(one_l())});
    CHECK(!check_ok(e));
}

TEST_CASE("principal occurrences must exist and have the right shape") {
    // index out of range
    Deriv d = node(RuleId::TopR, {Judgment::Linear, {}, make_ctx({top()})},
                   {{Side::Right, 3}}, {});
    CheckReport r = report_of(d);
    CHECK(!r.ok);
    CHECK(r.cause == CheckCause::PrincipalMismatch);

    // principal points at a proposition of the wrong shape
    Deriv e = node(RuleId::TensorL, {Judgment::Linear, make_ctx({with(top(), top())}),
                                      make_ctx({top()})},
                   {{Side::Left, 0}}, {build::ax(top())});
    CHECK(!check_ok(e));

    // principal on the wrong side
    Deriv f = node(RuleId::TopR, {Judgment::Linear, make_ctx({top()}), make_ctx({top()})},
                   {{Side::Left, 0}}, {});
    CHECK(!check_ok(f));

    // a principal-count mismatch is an arity error
    Deriv g = node(RuleId::OneR, {Judgment::Linear, {}, make_ctx({one_l()})},
                   {{Side::Right, 0}}, {});
    CheckReport rg = report_of(g);
    CHECK(!rg.ok);
    CHECK(rg.cause == CheckCause::Arity);
}

TEST_CASE("premise contexts must match the scheme exactly") {
    // tensor_r that drops a context formula
    Deriv lhs = build::ax(top());  // T |- T
    Deriv rhs = build::one_r(one_l());
    Deriv good = build::tensor_r(tensor(top(), one_l()), lhs, rhs);
    REQUIRE(check_ok(good));

    // same premises, conclusion missing the leftover T on the left
    Deriv bad = node(good->rule,
                     {Judgment::Linear, {}, good->conclusion.right}, good->principal,
                     good->premises);
    CheckReport r = report_of(bad);
    CHECK(!r.ok);
    CHECK(r.cause == CheckCause::ContextMismatch);

    // conclusion with an extra copy smuggled in
    Deriv fat = node(good->rule,
                     {Judgment::Linear, ctx_with(good->conclusion.left, one_l()),
                      good->conclusion.right},
                     good->principal, good->premises);
    CHECK(!check_ok(fat));

    // weakening that changes more than it may
    Deriv w = node(RuleId::WeakL, {Judgment::Linear, make_ctx({one_p()}), make_ctx({top()})},
                   {{Side::Left, 0}}, {build::ax(top())});
    CHECK(!check_ok(w));  // premise T |- T, conclusion right is just T: left T vanished
}

TEST_CASE("contraction requires a mergeable pair") {
    Deriv base = build::weak_l(one_p(), build::one_r(one_l()));  // 1p |- 1
    // claiming a contraction directly on the single-copy sequent
    Deriv bad = node(RuleId::ContrL, {Judgment::Linear, make_ctx({one_p()}), make_ctx({one_l()})},
                     {{Side::Left, 0}}, {base});
    CHECK(!check_ok(bad));  // premise must carry two copies

    Deriv two = build::weak_l(one_p(), base);  // 1p, 1p |- 1
    Deriv good = build::contr_l(one_p(), two);
    CHECK(check_ok(good));
}

TEST_CASE("promotion rules police their contexts") {
    // ! on the right requires a producer-only left context: T is not one
    Deriv prem = build::top_r({top()}, {top()});  // T |- T ... left T is linear
    Deriv bad = node(RuleId::GBangR, {Judgment::Persistent, make_ctx({top()}),
                                      make_ctx({gbang(top())})},
                     {{Side::Right, 0}}, {prem});
    CheckReport r = report_of(bad);
    CHECK(!r.ok);

    // the same promotion over a producer context is fine
    CHECK(check_ok(build::gbang_r(gbang(top()), build::top_r({one_p()}, {top()}))));
}

TEST_CASE("judgment kinds are enforced along the tree") {
    // fbang_r whose premise is linear instead of persistent
    Deriv prem = build::one_r(one_p());  // |- 1p (linear judgment, producer formula)
    Deriv bad = node(RuleId::FBangR, {Judgment::Linear, {}, make_ctx({fbang(one_p())})},
                     {{Side::Right, 0}}, {prem});
    CheckReport r = report_of(bad);
    CHECK(!r.ok);
    CHECK(r.cause == CheckCause::JudgmentKind);
}

TEST_CASE("the no-cut policy rejects exactly the cut nodes") {
    Deriv with_cut = build::make_cut(one_l(), build::one_r(one_l()), build::ax(one_l()));
    REQUIRE(check_ok(with_cut));
    CheckPolicy strict{false};
    CheckReport r = check(with_cut, strict);
    CHECK(!r.ok);
    CHECK(r.cause == CheckCause::CutForbidden);

    for (const auto& [name, d] : corpus::all_rule_derivations()) {
        if (deriv_has_cut(d)) continue;
        CAPTURE(name);
        CHECK(check_ok(d, strict));
    }
}

TEST_CASE("every root rule-flip of a checking derivation is rejected") {
    // Flip each root's rule to every other rule of the same arity and
    // principal count; the checker must reject every variant. The one real
    // overlap in the calculus: introducing the producer unit on the left is
    // the same scheme as weakening by it (and dually Bc on the right), so
    // those pairs are exempt.
    auto alias_class = [](RuleId x) -> int {
        switch (x) {
            case RuleId::OneL:
            case RuleId::WeakL: return 1;
            case RuleId::OnePL:
            case RuleId::WeakPL: return 2;
            case RuleId::BotR:
            case RuleId::WeakR: return 3;
            case RuleId::BotCR:
            case RuleId::WeakPR: return 4;
            default: return 0;
        }
    };
    size_t rejected = 0, tried = 0;
    for (const auto& [name, d] : corpus::all_rule_derivations()) {
        if (deriv_has_cut(d)) continue;  // cut nodes have sibling cut ids that overlap
        for (int i = 0; i <= static_cast<int>(RuleId::CutCPers); ++i) {
            RuleId alt = static_cast<RuleId>(i);
            if (alt == d->rule || is_cut(alt)) continue;
            if (rule_arity(alt) != d->premises.size()) continue;
            if (rule_principal_count(alt) != d->principal.size()) continue;
            if (alias_class(alt) != 0 && alias_class(alt) == alias_class(d->rule)) continue;
            Deriv mutant = mk_deriv(alt, d->conclusion, d->principal, d->premises);
            ++tried;
            if (check_ok(mutant)) {
                CAPTURE(name);
                CAPTURE(rule_name(alt));
                CHECK_MESSAGE(false, "mutant not rejected");
            } else {
                ++rejected;
            }
        }
    }
    CHECK(tried > 100);
    CHECK(rejected == tried);
}

TEST_CASE("the producer unit aliases weakening, by design") {
    // 1p |- 1 as weakening and as a unit introduction: both check
    Deriv w = build::weak_l(one_p(), build::one_r(one_l()));
    REQUIRE(check_ok(w));
    Deriv u = mk_deriv(RuleId::OneL, w->conclusion, w->principal, w->premises);
    CHECK(check_ok(u));
}

TEST_CASE("failure paths locate the offending node") {
    // bury a bad axiom two levels deep
    Deriv bad_leaf = node(RuleId::Ax, {Judgment::Linear, make_ctx({top()}), make_ctx({zero()})},
                          {}, {});
    Context mid_left = make_ctx({one_l(), top()});  // sorts as [T, 1]
    Deriv mid = node(RuleId::OneL, {Judgment::Linear, mid_left, make_ctx({zero()})},
                     {{Side::Left, *ctx_find(mid_left, one_l())}}, {bad_leaf});
    CheckReport r = check(mid);
    CHECK(!r.ok);
    CHECK(r.path == std::vector<size_t>{0});
    CHECK(r.path_string() == "root.0");
}
