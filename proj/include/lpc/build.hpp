#pragma once

#include <stdexcept>
#include <string>

#include "lpc/derivation.hpp"

namespace lpc::build {

// Forward rule application. Each builder takes the principal proposition and
// the premise derivation(s), computes the conclusion by context arithmetic,
// and records the principal's index in the sorted conclusion. Misuse is a
// programming error, reported by throwing std::logic_error.
//
// Builders for the mode-generic linear rules double as their persistent
// counterparts: they pick the persistent rule id when the premise is a
// persistent sequent. That is exactly the rebuild cut elimination needs when
// commuting persistent steps into linear derivations and back.

namespace detail {

inline void need(bool cond, const std::string& msg) {
    if (!cond) throw std::logic_error("build: " + msg);
}

inline Context sub1(const Context& c, const Prop& p, const char* what) {
    auto r = ctx_subtract(c, {p});
    need(r.has_value(), std::string(what) + ": missing " + print_prop(p));
    return *r;
}

inline Deriv leaf(RuleId r, Sequent s, std::vector<Occurrence> prin = {}) {
    return mk_deriv(r, std::move(s), std::move(prin), {});
}

inline Deriv un(RuleId r, Sequent s, Occurrence o, Deriv prem) {
    return mk_deriv(r, std::move(s), {o}, {std::move(prem)});
}

inline Deriv bin(RuleId r, Sequent s, Occurrence o, Deriv p0, Deriv p1) {
    return mk_deriv(r, std::move(s), {o}, {std::move(p0), std::move(p1)});
}

} // namespace detail

// --- leaves -------------------------------------------------------------

inline Deriv ax(const Prop& x) {
    return detail::leaf(RuleId::Ax, Sequent{Judgment::Linear, {x}, {x}});
}

inline Deriv ax_p(const Prop& p) {
    detail::need(mode_of(p) == Mode::P, "ax_p wants a producer");
    return detail::leaf(RuleId::AxP, Sequent{Judgment::Persistent, {p}, {p}});
}

inline Deriv ax_c(const Prop& c) {
    detail::need(mode_of(c) == Mode::C, "ax_c wants a consumer");
    return detail::leaf(RuleId::AxC, Sequent{Judgment::Persistent, {c}, {c}});
}

// Conclusion right context must contain T / left context 0. The contexts may
// arrive in any order; they are canonicalized here.
inline Deriv top_r(Context left, Context right) {
    Sequent s{Judgment::Linear, make_ctx(std::move(left)), make_ctx(std::move(right))};
    auto i = ctx_find(s.right, top());
    detail::need(i.has_value(), "top_r: no T on the right");
    return detail::leaf(RuleId::TopR, std::move(s), {{Side::Right, *i}});
}

inline Deriv zero_l(Context left, Context right) {
    Sequent s{Judgment::Linear, make_ctx(std::move(left)), make_ctx(std::move(right))};
    auto i = ctx_find(s.left, zero());
    detail::need(i.has_value(), "zero_l: no 0 on the left");
    return detail::leaf(RuleId::ZeroL, std::move(s), {{Side::Left, *i}});
}

inline Deriv one_r(const Prop& u) {
    detail::need(u->tag == PropTag::OneL || u->tag == PropTag::OneP, "one_r wants a unit");
    return detail::leaf(RuleId::OneR, Sequent{Judgment::Linear, {}, {u}});
}

inline Deriv bot_l(const Prop& u) {
    detail::need(u->tag == PropTag::BotL || u->tag == PropTag::BotC, "bot_l wants a falsity");
    return detail::leaf(RuleId::BotL, Sequent{Judgment::Linear, {u}, {}});
}

inline Deriv one_p_r() {
    return detail::leaf(RuleId::OnePR, Sequent{Judgment::Persistent, {}, {one_p()}});
}

inline Deriv bot_c_l() {
    return detail::leaf(RuleId::BotCL, Sequent{Judgment::Persistent, {bot_c()}, {}});
}

// --- additive rules -------------------------------------------------------

inline Deriv with_l(int k, const Prop& w, Deriv prem) {
    detail::need(w->tag == PropTag::With, "with_l wants A & B");
    const Sequent& p = prem->conclusion;
    Sequent s{p.kind, detail::sub1(p.left, k == 1 ? w->a : w->b, "with_l"), p.right};
    size_t i = ctx_insert(s.left, w);
    return detail::un(k == 1 ? RuleId::WithL1 : RuleId::WithL2, std::move(s),
                      {Side::Left, i}, std::move(prem));
}

inline Deriv with_r(const Prop& w, Deriv p0, Deriv p1) {
    detail::need(w->tag == PropTag::With, "with_r wants A & B");
    const Sequent& a = p0->conclusion;
    const Sequent& b = p1->conclusion;
    Sequent s{a.kind, a.left, detail::sub1(a.right, w->a, "with_r")};
    Sequent t{b.kind, b.left, detail::sub1(b.right, w->b, "with_r")};
    detail::need(ctx_eq(s.left, t.left) && ctx_eq(s.right, t.right) && s.kind == t.kind,
                 "with_r premises must share contexts");
    size_t i = ctx_insert(s.right, w);
    return detail::bin(RuleId::WithR, std::move(s), {Side::Right, i}, std::move(p0),
                       std::move(p1));
}

inline Deriv plus_r(int k, const Prop& w, Deriv prem) {
    detail::need(w->tag == PropTag::Plus, "plus_r wants A + B");
    const Sequent& p = prem->conclusion;
    Sequent s{p.kind, p.left, detail::sub1(p.right, k == 1 ? w->a : w->b, "plus_r")};
    size_t i = ctx_insert(s.right, w);
    return detail::un(k == 1 ? RuleId::PlusR1 : RuleId::PlusR2, std::move(s),
                      {Side::Right, i}, std::move(prem));
}

inline Deriv plus_l(const Prop& w, Deriv p0, Deriv p1) {
    detail::need(w->tag == PropTag::Plus, "plus_l wants A + B");
    const Sequent& a = p0->conclusion;
    const Sequent& b = p1->conclusion;
    Sequent s{a.kind, detail::sub1(a.left, w->a, "plus_l"), a.right};
    Sequent t{b.kind, detail::sub1(b.left, w->b, "plus_l"), b.right};
    detail::need(ctx_eq(s.left, t.left) && ctx_eq(s.right, t.right) && s.kind == t.kind,
                 "plus_l premises must share contexts");
    size_t i = ctx_insert(s.left, w);
    return detail::bin(RuleId::PlusL, std::move(s), {Side::Left, i}, std::move(p0),
                       std::move(p1));
}

// --- multiplicative rules (mode-generic; persistent ids when premise is ||-)

inline Deriv tensor_l(const Prop& t, Deriv prem) {
    detail::need(t->tag == PropTag::TensorL || t->tag == PropTag::TensorP,
                 "tensor_l wants a tensor");
    const Sequent& p = prem->conclusion;
    Context l = detail::sub1(detail::sub1(p.left, t->a, "tensor_l"), t->b, "tensor_l");
    Sequent s{p.kind, std::move(l), p.right};
    size_t i = ctx_insert(s.left, t);
    RuleId r = p.kind == Judgment::Linear ? RuleId::TensorL : RuleId::TensorPL;
    return detail::un(r, std::move(s), {Side::Left, i}, std::move(prem));
}

inline Deriv tensor_r(const Prop& t, Deriv p0, Deriv p1) {
    detail::need(t->tag == PropTag::TensorL || t->tag == PropTag::TensorP,
                 "tensor_r wants a tensor");
    const Sequent& a = p0->conclusion;
    const Sequent& b = p1->conclusion;
    detail::need(a.kind == b.kind, "tensor_r premises share a judgment");
    Context r = ctx_union(detail::sub1(a.right, t->a, "tensor_r"),
                          detail::sub1(b.right, t->b, "tensor_r"));
    Sequent s{a.kind, ctx_union(a.left, b.left), std::move(r)};
    size_t i = ctx_insert(s.right, t);
    RuleId id = a.kind == Judgment::Linear ? RuleId::TensorR : RuleId::TensorPR;
    return detail::bin(id, std::move(s), {Side::Right, i}, std::move(p0), std::move(p1));
}

inline Deriv one_l(const Prop& u, Deriv prem) {
    detail::need(u->tag == PropTag::OneL || u->tag == PropTag::OneP, "one_l wants a unit");
    const Sequent& p = prem->conclusion;
    Sequent s{p.kind, p.left, p.right};
    size_t i = ctx_insert(s.left, u);
    RuleId r = p.kind == Judgment::Linear ? RuleId::OneL : RuleId::OnePL;
    return detail::un(r, std::move(s), {Side::Left, i}, std::move(prem));
}

inline Deriv par_r(const Prop& w, Deriv prem) {
    detail::need(w->tag == PropTag::ParL || w->tag == PropTag::ParC, "par_r wants a par");
    const Sequent& p = prem->conclusion;
    Context r = detail::sub1(detail::sub1(p.right, w->a, "par_r"), w->b, "par_r");
    Sequent s{p.kind, p.left, std::move(r)};
    size_t i = ctx_insert(s.right, w);
    RuleId id = p.kind == Judgment::Linear ? RuleId::ParR : RuleId::ParCR;
    return detail::un(id, std::move(s), {Side::Right, i}, std::move(prem));
}

inline Deriv par_l(const Prop& w, Deriv p0, Deriv p1) {
    detail::need(w->tag == PropTag::ParL || w->tag == PropTag::ParC, "par_l wants a par");
    const Sequent& a = p0->conclusion;
    const Sequent& b = p1->conclusion;
    detail::need(a.kind == b.kind, "par_l premises share a judgment");
    Context l = ctx_union(detail::sub1(a.left, w->a, "par_l"),
                          detail::sub1(b.left, w->b, "par_l"));
    Sequent s{a.kind, std::move(l), ctx_union(a.right, b.right)};
    size_t i = ctx_insert(s.left, w);
    RuleId id = a.kind == Judgment::Linear ? RuleId::ParL : RuleId::ParCL;
    return detail::bin(id, std::move(s), {Side::Left, i}, std::move(p0), std::move(p1));
}

inline Deriv bot_r(const Prop& u, Deriv prem) {
    detail::need(u->tag == PropTag::BotL || u->tag == PropTag::BotC, "bot_r wants a falsity");
    const Sequent& p = prem->conclusion;
    Sequent s{p.kind, p.left, p.right};
    size_t i = ctx_insert(s.right, u);
    RuleId r = p.kind == Judgment::Linear ? RuleId::BotR : RuleId::BotCR;
    return detail::un(r, std::move(s), {Side::Right, i}, std::move(prem));
}

// --- adjunction rules -------------------------------------------------------

inline Deriv fbang_l(const Prop& fp, Deriv prem) {
    detail::need(fp->tag == PropTag::FBang, "fbang_l wants F! P");
    const Sequent& p = prem->conclusion;
    detail::need(p.kind == Judgment::Linear, "fbang_l premise is linear");
    Sequent s{Judgment::Linear, detail::sub1(p.left, fp->a, "fbang_l"), p.right};
    size_t i = ctx_insert(s.left, fp);
    return detail::un(RuleId::FBangL, std::move(s), {Side::Left, i}, std::move(prem));
}

inline Deriv fbang_r(const Prop& fp, Deriv prem) {
    detail::need(fp->tag == PropTag::FBang, "fbang_r wants F! P");
    const Sequent& p = prem->conclusion;
    detail::need(p.kind == Judgment::Persistent, "fbang_r premise is persistent");
    Sequent s{Judgment::Linear, p.left, detail::sub1(p.right, fp->a, "fbang_r")};
    size_t i = ctx_insert(s.right, fp);
    return detail::un(RuleId::FBangR, std::move(s), {Side::Right, i}, std::move(prem));
}

inline Deriv fwhy_l(const Prop& fc, Deriv prem) {
    detail::need(fc->tag == PropTag::FWhy, "fwhy_l wants F? C");
    const Sequent& p = prem->conclusion;
    detail::need(p.kind == Judgment::Persistent, "fwhy_l premise is persistent");
    Sequent s{Judgment::Linear, detail::sub1(p.left, fc->a, "fwhy_l"), p.right};
    size_t i = ctx_insert(s.left, fc);
    return detail::un(RuleId::FWhyL, std::move(s), {Side::Left, i}, std::move(prem));
}

inline Deriv fwhy_r(const Prop& fc, Deriv prem) {
    detail::need(fc->tag == PropTag::FWhy, "fwhy_r wants F? C");
    const Sequent& p = prem->conclusion;
    detail::need(p.kind == Judgment::Linear, "fwhy_r premise is linear");
    Sequent s{Judgment::Linear, p.left, detail::sub1(p.right, fc->a, "fwhy_r")};
    size_t i = ctx_insert(s.right, fc);
    return detail::un(RuleId::FWhyR, std::move(s), {Side::Right, i}, std::move(prem));
}

inline Deriv gbang_l(const Prop& gp, Deriv prem) {
    detail::need(gp->tag == PropTag::GBang, "gbang_l wants ! A");
    const Sequent& p = prem->conclusion;
    detail::need(p.kind == Judgment::Linear, "gbang_l premise is linear");
    Sequent s{Judgment::Linear, detail::sub1(p.left, gp->a, "gbang_l"), p.right};
    size_t i = ctx_insert(s.left, gp);
    return detail::un(RuleId::GBangL, std::move(s), {Side::Left, i}, std::move(prem));
}

inline Deriv gbang_r(const Prop& gp, Deriv prem) {
    detail::need(gp->tag == PropTag::GBang, "gbang_r wants ! A");
    const Sequent& p = prem->conclusion;
    detail::need(p.kind == Judgment::Linear, "gbang_r premise is linear");
    Sequent s{Judgment::Persistent, p.left, detail::sub1(p.right, gp->a, "gbang_r")};
    size_t i = ctx_insert(s.right, gp);
    return detail::un(RuleId::GBangR, std::move(s), {Side::Right, i}, std::move(prem));
}

inline Deriv gwhy_l(const Prop& gc, Deriv prem) {
    detail::need(gc->tag == PropTag::GWhy, "gwhy_l wants ? A");
    const Sequent& p = prem->conclusion;
    detail::need(p.kind == Judgment::Linear, "gwhy_l premise is linear");
    Sequent s{Judgment::Persistent, detail::sub1(p.left, gc->a, "gwhy_l"), p.right};
    size_t i = ctx_insert(s.left, gc);
    return detail::un(RuleId::GWhyL, std::move(s), {Side::Left, i}, std::move(prem));
}

inline Deriv gwhy_r(const Prop& gc, Deriv prem) {
    detail::need(gc->tag == PropTag::GWhy, "gwhy_r wants ? A");
    const Sequent& p = prem->conclusion;
    detail::need(p.kind == Judgment::Linear, "gwhy_r premise is linear");
    Sequent s{Judgment::Linear, p.left, detail::sub1(p.right, gc->a, "gwhy_r")};
    size_t i = ctx_insert(s.right, gc);
    return detail::un(RuleId::GWhyR, std::move(s), {Side::Right, i}, std::move(prem));
}

// --- structural rules (judgment-selected ids) --------------------------------

inline Deriv weak_l(const Prop& p, Deriv prem) {
    detail::need(mode_of(p) == Mode::P, "weak_l adds a producer");
    const Sequent& q = prem->conclusion;
    Sequent s{q.kind, q.left, q.right};
    size_t i = ctx_insert(s.left, p);
    RuleId r = q.kind == Judgment::Linear ? RuleId::WeakL : RuleId::WeakPL;
    return detail::un(r, std::move(s), {Side::Left, i}, std::move(prem));
}

inline Deriv weak_r(const Prop& c, Deriv prem) {
    detail::need(mode_of(c) == Mode::C, "weak_r adds a consumer");
    const Sequent& q = prem->conclusion;
    Sequent s{q.kind, q.left, q.right};
    size_t i = ctx_insert(s.right, c);
    RuleId r = q.kind == Judgment::Linear ? RuleId::WeakR : RuleId::WeakPR;
    return detail::un(r, std::move(s), {Side::Right, i}, std::move(prem));
}

inline Deriv contr_l(const Prop& p, Deriv prem) {
    detail::need(mode_of(p) == Mode::P, "contr_l merges producers");
    const Sequent& q = prem->conclusion;
    detail::need(ctx_count(q.left, p) >= 2, "contr_l needs two copies");
    Sequent s{q.kind, detail::sub1(q.left, p, "contr_l"), q.right};
    auto i = ctx_find(s.left, p);
    RuleId r = q.kind == Judgment::Linear ? RuleId::ContrL : RuleId::ContrPL;
    return detail::un(r, std::move(s), {Side::Left, *i}, std::move(prem));
}

inline Deriv contr_r(const Prop& c, Deriv prem) {
    detail::need(mode_of(c) == Mode::C, "contr_r merges consumers");
    const Sequent& q = prem->conclusion;
    detail::need(ctx_count(q.right, c) >= 2, "contr_r needs two copies");
    Sequent s{q.kind, q.left, detail::sub1(q.right, c, "contr_r")};
    auto i = ctx_find(s.right, c);
    RuleId r = q.kind == Judgment::Linear ? RuleId::ContrR : RuleId::ContrPR;
    return detail::un(r, std::move(s), {Side::Right, *i}, std::move(prem));
}

// --- cuts ---------------------------------------------------------------------
//
// Conclusion: left = left(p0) + (left(p1) - x), right = (right(p0) - x) + right(p1).
// The rule id follows the cut proposition's mode and the premise judgments.

inline Deriv make_cut(const Prop& x, Deriv p0, Deriv p1) {
    const Sequent& a = p0->conclusion;
    const Sequent& b = p1->conclusion;
    Context l = ctx_union(a.left, detail::sub1(b.left, x, "cut"));
    Context r = ctx_union(detail::sub1(a.right, x, "cut"), b.right);
    RuleId rule;
    Judgment kind;
    switch (mode_of(x)) {
        case Mode::L:
            detail::need(a.kind == Judgment::Linear && b.kind == Judgment::Linear,
                         "linear cut premises are linear");
            rule = RuleId::CutL;
            kind = Judgment::Linear;
            break;
        case Mode::P:
            detail::need(a.kind == Judgment::Persistent, "producer cut premise 0 is persistent");
            rule = b.kind == Judgment::Linear ? RuleId::CutP : RuleId::CutPPers;
            kind = b.kind;
            break;
        default:
            detail::need(b.kind == Judgment::Persistent, "consumer cut premise 1 is persistent");
            rule = a.kind == Judgment::Linear ? RuleId::CutC : RuleId::CutCPers;
            kind = a.kind;
            break;
    }
    return mk_deriv(rule, Sequent{kind, std::move(l), std::move(r)}, {},
                    {std::move(p0), std::move(p1)});
}

} // namespace lpc::build
