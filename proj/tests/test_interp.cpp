#include <doctest.h>

#include <cstdint>
#include <vector>

#include "corpus_derivs.hpp"
#include "lpc/cutelim.hpp"
#include "lpc/models/finvect.hpp"
#include "lpc/models/rel.hpp"
#include "lpc/semantics/interp.hpp"

using namespace lpc;
using namespace lpc::build;
using namespace lpc::models;
using lpc::semantics::interp_linear;
using lpc::semantics::interp_persistent;
using lpc::semantics::LinearDen;
using lpc::semantics::PersistentDen;

namespace {

// Independent size oracle. Both interpreting models carry plain
// cardinalities as objects: tensor and par multiply, the additives add,
// every unit is a point, and the two modalities raise a base (2 for
// subsets, q for vector-space carriers) to the size of their argument.
// Because the folds are products with unit 1, the boundary of a denotation
// is a product of these numbers no matter how the fold associates.
uint64_t osize(const Prop& p, uint64_t base) {
    switch (p->tag) {
        case PropTag::Top:
        case PropTag::Zero: return 0;
        case PropTag::With:
        case PropTag::Plus: return osize(p->a, base) + osize(p->b, base);
        case PropTag::OneL:
        case PropTag::BotL:
        case PropTag::OneP:
        case PropTag::BotC: return 1;
        case PropTag::TensorL:
        case PropTag::ParL:
        case PropTag::TensorP:
        case PropTag::ParC: return osize(p->a, base) * osize(p->b, base);
        case PropTag::FBang:
        case PropTag::FWhy: return osize(p->a, base);
        case PropTag::GBang:
        case PropTag::GWhy: {
            uint64_t n = osize(p->a, base), c = 1;
            for (uint64_t i = 0; i < n; ++i) c *= base;
            return c;
        }
    }
    return 0;
}

uint64_t ctx_size(const Context& c, uint64_t base) {
    uint64_t s = 1;
    for (const auto& p : c) s *= osize(p, base);
    return s;
}

// a two-element linear proposition and a three-element one
Prop two_l() { return plus(one_l(), one_l()); }
Prop three_l() { return plus(plus(one_l(), one_l()), one_l()); }

// A (x) B |- B (x) A by unpacking the tensor and repacking it flipped.
Deriv swap_deriv(const Prop& a, const Prop& b) {
    return tensor_l(tensor(a, b), tensor_r(tensor(b, a), ax(b), ax(a)));
}

} // namespace

TEST_CASE("axioms denote identities") {
    RelModel rel;
    Prop a = two_l();
    LinearDen<RelModel> den = interp_linear(rel, ax(a));
    CHECK(den.dom == 2);
    CHECK(den.cod == 2);
    CHECK(den.mor == brel_id(2));

    FinVectModel vec{2};
    LinearDen<FinVectModel> dv = interp_linear(vec, ax(a));
    CHECK(dv.mor == mat_id(2));

    // persistent axiom: identity function on the producer's carrier
    Prop p = gbang(a); // subsets of a two-element set: four of them
    PersistentDen<RelModel> dp = interp_persistent(rel, ax_p(p));
    CHECK(dp.dom_left == 4);
    CHECK(dp.dom_right == 1);
    CHECK(dp.dom == 4);
    CHECK(dp.cod == 4);
    CHECK(dp.displaced.side == Side::Right);
    CHECK(dp.mor == fn_id(4));
}

TEST_CASE("flipping a tensor denotes the braiding") {
    Prop a = two_l(), b = three_l();
    Deriv d = swap_deriv(a, b);

    RelModel rel;
    LinearDen<RelModel> den = interp_linear(rel, d);
    CHECK(den.dom == 6);
    CHECK(den.cod == 6);
    // the graph of (x, y) |-> (y, x) and nothing else
    for (uint32_t x = 0; x < 2; ++x)
        for (uint32_t y = 0; y < 3; ++y)
            CHECK(den.mor.get(x * 3 + y, y * 2 + x));
    uint32_t set = 0;
    for (uint32_t r = 0; r < 6; ++r)
        for (uint32_t c = 0; c < 6; ++c) set += den.mor.get(r, c);
    CHECK(set == 6);
    CHECK(den.mor == rel.lt_sigma(2, 3));

    FinVectModel vec{2};
    LinearDen<FinVectModel> dv = interp_linear(vec, d);
    CHECK(dv.mor == vec.lt_sigma(2, 3));
    CHECK(vec.l_eq(vec.l_comp(vec.lt_sigma(3, 2), dv.mor), vec.l_id(6)));
}

TEST_CASE("additive pairing denotes the biproduct structure") {
    RelModel rel;
    // |- 1 & 1 pairs two copies of the unit: one row, both columns
    Deriv d = with_r(with(one_l(), one_l()), one_r(one_l()), one_r(one_l()));
    LinearDen<RelModel> den = interp_linear(rel, d);
    CHECK(den.dom == 1);
    CHECK(den.cod == 2);
    CHECK(den.mor.get(0, 0));
    CHECK(den.mor.get(0, 1));

    // B + B |- copairs two refutations of B: both rows, one column
    Prop b = bot_l();
    Deriv e = plus_l(plus(b, b), bot_l(b), bot_l(b));
    LinearDen<RelModel> dep = interp_linear(rel, e);
    CHECK(dep.dom == 2);
    CHECK(dep.cod == 1);
    CHECK(dep.mor.get(0, 0));
    CHECK(dep.mor.get(1, 0));
}

TEST_CASE("weakening a producer denotes the constant map") {
    RelModel rel;
    Prop p = gbang(two_l());
    PersistentDen<RelModel> den = interp_persistent(rel, weak_l(p, one_p_r()));
    CHECK(den.dom_left == 4);
    CHECK(den.dom_right == 1);
    CHECK(den.dom == 4);
    CHECK(den.cod == 1);
    CHECK(den.displaced.side == Side::Right);
    CHECK(den.mor.tab == std::vector<uint32_t>(4, 0));
}

TEST_CASE("contracting a producer denotes the diagonal") {
    RelModel rel;
    Prop p = gbang(two_l());
    Deriv both = tensor_r(tensor(p, p), ax_p(p), ax_p(p));
    PersistentDen<RelModel> den = interp_persistent(rel, contr_l(p, both));
    CHECK(den.dom == 4);
    CHECK(den.cod == 16);
    CHECK(den.mor.tab == std::vector<uint32_t>{0, 5, 10, 15});
}

TEST_CASE("cut elimination preserves the denotation") {
    Prop a = two_l(), b = three_l();
    // swapping twice composes to the identity on A (x) B
    Deriv d1 = swap_deriv(a, b);
    Deriv d2 = swap_deriv(b, a);
    Deriv cut = make_cut(tensor(b, a), d1, d2);
    REQUIRE(deriv_has_cut(cut));
    Deriv e = eliminate(cut);

    RelModel rel;
    LinearDen<RelModel> den = interp_linear(rel, e);
    CHECK(den.dom == 6);
    CHECK(den.cod == 6);
    CHECK(den.mor == brel_id(6));

    FinVectModel vec{3};
    LinearDen<FinVectModel> dv = interp_linear(vec, e);
    CHECK(dv.mor == mat_id(6));
}

TEST_CASE("derivations with cuts are refused") {
    RelModel rel;
    Deriv cut = make_cut(two_l(), ax(two_l()), ax(two_l()));
    CHECK_THROWS_AS((void)interp_linear(rel, cut), std::logic_error);
}

namespace {

// run one corpus entry through a model and compare the boundary of its
// denotation against the size oracle
template <class M>
void check_boundary(const M& m, uint64_t base, const char* name, const Deriv& d0) {
    CAPTURE(name);
    Deriv d = deriv_has_cut(d0) ? eliminate(d0) : d0;
    const Sequent& s = d->conclusion;
    if (s.kind == Judgment::Linear) {
        LinearDen<M> den = interp_linear(m, d);
        CHECK(den.dom == ctx_size(s.left, base));
        CHECK(den.cod == ctx_size(s.right, base));
    } else {
        auto disp = displaced(s);
        REQUIRE(disp.size() == 1);
        const Prop& dp =
            disp[0].side == Side::Left ? s.left[disp[0].index] : s.right[disp[0].index];
        uint64_t left = 1, right = 1;
        for (size_t i = 0; i < s.left.size(); ++i)
            if (!(disp[0].side == Side::Left && i == disp[0].index))
                left *= osize(s.left[i], base);
        for (size_t i = 0; i < s.right.size(); ++i)
            if (!(disp[0].side == Side::Right && i == disp[0].index))
                right *= osize(s.right[i], base);
        PersistentDen<M> den = interp_persistent(m, d);
        CHECK(den.dom_left == left);
        CHECK(den.dom_right == right);
        CHECK(den.dom == left * right);
        CHECK(den.cod == osize(dp, base));
        CHECK(den.displaced.side == disp[0].side);
        CHECK(den.displaced.index == disp[0].index);
    }
}

} // namespace

TEST_CASE("every corpus derivation interprets at its stated boundary") {
    RelModel rel;
    FinVectModel vec{2};
    for (const auto& [name, d] : corpus::all_rule_derivations()) {
        check_boundary(rel, 2, name.c_str(), d);
        check_boundary(vec, 2, name.c_str(), d);
    }
}
