#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lpc/check.hpp"
#include "lpc/derivation.hpp"
#include "lpc/errors.hpp"
#include "lpc/rules.hpp"
#include "lpc/semantics/plumbing.hpp"
#include "lpc/sequent.hpp"
#include "lpc/syntax.hpp"

// Interpretation of checked cut-free derivations in a concrete model.
//
// A linear sequent G |- D denotes an L-morphism from the tensor fold of the
// left context to the par fold of the right context. A persistent sequent
// has exactly one displaced proposition (a consumer on the left or a
// producer on the right); it denotes a P-morphism
//
//     fold_p(producers on the left) (x) fold_p(lowered consumers on the
//     right, displaced excluded)  ->  interpretation of the displaced side
//
// where a displaced producer lands at its P-object and a displaced consumer
// at the lowering of its C-object. Tensor folds of contexts associate to the
// left; par folds associate to the right.
//
// The clauses below lean on structure every shipped interpretation model
// provides on the nose: negation is involutive on objects and turns par into
// tensor, F! and F? are strongly (co)monoidal, and the duality comparison
// maps (dual_f2, dual_g) together with the star/lower round trip are
// isomorphisms. A model that lacks one of these cannot interpret
// derivations, and the entry points report that as unsupported_structure.

namespace lpc::semantics {

template <class M>
struct LTensorOps {
    const M& m;
    using Obj = typename M::LObj;
    using Mor = typename M::LMor;
    Obj unit() const { return m.lt_unit(); }
    Obj obj(Obj a, Obj b) const { return m.lt(a, b); }
    Mor id(Obj a) const { return m.l_id(a); }
    Mor comp(const Mor& g, const Mor& f) const { return m.l_comp(g, f); }
    Mor mor(const Mor& f, const Mor& g) const { return m.lt_mor(f, g); }
    Mor alpha(Obj a, Obj b, Obj c) const { return m.lt_alpha(a, b, c); }
    Mor alpha_inv(Obj a, Obj b, Obj c) const { return m.lt_alpha_inv(a, b, c); }
    Mor lambda(Obj a) const { return m.lt_lambda(a); }
    Mor lambda_inv(Obj a) const { return m.lt_lambda_inv(a); }
    Mor rho(Obj a) const { return m.lt_rho(a); }
    Mor rho_inv(Obj a) const { return m.lt_rho_inv(a); }
    Mor sigma(Obj a, Obj b) const { return m.lt_sigma(a, b); }
};

// Par in L through the tensor machinery: run the plumbing over reversed
// lists with the arguments of every binary operation flipped. A
// left-associated flipped fold of the reversed list is exactly the
// right-associated par fold of the original one.
template <class M>
struct ParFlipOps {
    const M& m;
    using Obj = typename M::LObj;
    using Mor = typename M::LMor;
    Obj unit() const { return m.lp_unit(); }
    Obj obj(Obj a, Obj b) const { return m.lp(b, a); }
    Mor id(Obj a) const { return m.l_id(a); }
    Mor comp(const Mor& g, const Mor& f) const { return m.l_comp(g, f); }
    Mor mor(const Mor& f, const Mor& g) const { return m.lp_mor(g, f); }
    Mor alpha(Obj a, Obj b, Obj c) const { return m.lp_alpha_inv(c, b, a); }
    Mor alpha_inv(Obj a, Obj b, Obj c) const { return m.lp_alpha(c, b, a); }
    Mor lambda(Obj a) const { return m.lp_rho(a); }
    Mor lambda_inv(Obj a) const { return m.lp_rho_inv(a); }
    Mor rho(Obj a) const { return m.lp_lambda(a); }
    Mor rho_inv(Obj a) const { return m.lp_lambda_inv(a); }
    Mor sigma(Obj a, Obj b) const { return m.lp_sigma(b, a); }
};

template <class M>
struct PTensorOps {
    const M& m;
    using Obj = typename M::PObj;
    using Mor = typename M::PMor;
    Obj unit() const { return m.pt_unit(); }
    Obj obj(Obj a, Obj b) const { return m.pt(a, b); }
    Mor id(Obj a) const { return m.p_id(a); }
    Mor comp(const Mor& g, const Mor& f) const { return m.p_comp(g, f); }
    Mor mor(const Mor& f, const Mor& g) const { return m.pt_mor(f, g); }
    Mor alpha(Obj a, Obj b, Obj c) const { return m.pt_alpha(a, b, c); }
    Mor alpha_inv(Obj a, Obj b, Obj c) const { return m.pt_alpha_inv(a, b, c); }
    Mor lambda(Obj a) const { return m.pt_lambda(a); }
    Mor lambda_inv(Obj a) const { return m.pt_lambda_inv(a); }
    Mor rho(Obj a) const { return m.pt_rho(a); }
    Mor rho_inv(Obj a) const { return m.pt_rho_inv(a); }
    Mor sigma(Obj a, Obj b) const { return m.pt_sigma(a, b); }
};

// Right-associated par folds, with the element extracted on the left:
// par_extract(xs, i) : pfold(xs) -> xs[i] par pfold(xs \ i).
template <class M>
struct ParPlumb {
    Plumb<ParFlipOps<M>> fp;

    using Obj = typename M::LObj;
    using Mor = typename M::LMor;
    using Objs = std::vector<Obj>;

    static Objs rev(const Objs& xs) { return Objs(xs.rbegin(), xs.rend()); }
    static std::vector<bool> revmask_not(const std::vector<bool>& ones) {
        std::vector<bool> out(ones.rbegin(), ones.rend());
        out.flip();
        return out;
    }

    Obj pfold(const Objs& xs) const { return fp.fold(rev(xs)); }

    Mor par_fold_map(const std::vector<Mor>& fs) const {
        return fp.fold_map(std::vector<Mor>(fs.rbegin(), fs.rend()));
    }

    Mor par_extract(const Objs& xs, size_t i) const {
        return fp.extract(rev(xs), xs.size() - 1 - i);
    }

    Mor par_insert(const Objs& xs, size_t i) const {
        return fp.insert(rev(xs), xs.size() - 1 - i);
    }

    // pfold(xs) -> pfold(mask-false picks) par pfold(mask-true picks)
    Mor par_split_mask(const Objs& xs, const std::vector<bool>& ones) const {
        return fp.split_mask(rev(xs), revmask_not(ones));
    }

    Mor par_merge_mask(const Objs& xs, const std::vector<bool>& ones) const {
        return fp.merge_mask(rev(xs), revmask_not(ones));
    }
};

template <class M>
struct LinearDen {
    typename M::LObj dom;
    typename M::LObj cod;
    typename M::LMor mor;
};

template <class M>
struct PersistentDen {
    typename M::PObj dom_left;   // fold_p of the producers on the left
    typename M::PObj dom_right;  // fold_p of the lowered non-displaced consumers
    typename M::PObj dom;        // pt(dom_left, dom_right)
    typename M::PObj cod;        // the displaced proposition
    Occurrence displaced;        // where it sits in the conclusion
    typename M::PMor mor;
};

template <class M>
class Interp {
public:
    explicit Interp(const M& m) : m_(m), lt_{{m}}, pp_{{{m}}}, pt_{{m}} {}

    using LObj = typename M::LObj;
    using LMor = typename M::LMor;
    using PObj = typename M::PObj;
    using PMor = typename M::PMor;
    using CObj = typename M::CObj;
    using LObjs = std::vector<LObj>;
    using PObjs = std::vector<PObj>;

    // --- proposition objects --------------------------------------------

    LObj obj_l(const Prop& p) const {
        switch (mode_of(p)) {
            case Mode::P: return m_.fbang_obj(obj_p(p));
            case Mode::C: return m_.fwhy_obj(obj_c(p));
            case Mode::L: break;
        }
        switch (p->tag) {
            case PropTag::Top:
            case PropTag::Zero: return m_.l_zero();
            case PropTag::With:
            case PropTag::Plus: return m_.l_add(obj_l(p->a), obj_l(p->b));
            case PropTag::OneL: return m_.lt_unit();
            case PropTag::BotL: return m_.lp_unit();
            case PropTag::TensorL: return m_.lt(obj_l(p->a), obj_l(p->b));
            case PropTag::ParL: return m_.lp(obj_l(p->a), obj_l(p->b));
            case PropTag::FBang: return m_.fbang_obj(obj_p(p->a));
            case PropTag::FWhy: return m_.fwhy_obj(obj_c(p->a));
            default: break;
        }
        throw std::logic_error("interp: bad linear proposition");
    }

    PObj obj_p(const Prop& p) const {
        switch (p->tag) {
            case PropTag::OneP: return m_.pt_unit();
            case PropTag::TensorP: return m_.pt(obj_p(p->a), obj_p(p->b));
            case PropTag::GBang: return m_.gbang_obj(obj_l(p->a));
            default: break;
        }
        if (mode_of(p) == Mode::C) return m_.lower_obj(obj_c(p));
        throw mode_error("interp: expected a producer proposition, got " + print_prop(p));
    }

    CObj obj_c(const Prop& p) const {
        switch (p->tag) {
            case PropTag::BotC: return m_.cp_unit();
            case PropTag::ParC: return m_.cp(obj_c(p->a), obj_c(p->b));
            case PropTag::GWhy: return m_.gwhy_obj(obj_l(p->a));
            default: break;
        }
        if (mode_of(p) == Mode::P) return m_.star_obj(obj_p(p));
        throw mode_error("interp: expected a consumer proposition, got " + print_prop(p));
    }

    LObjs objs_l(const Context& c) const {
        LObjs out;
        out.reserve(c.size());
        for (const auto& p : c) out.push_back(obj_l(p));
        return out;
    }

    PObjs pobjs(const Context& c) const {
        PObjs out;
        out.reserve(c.size());
        for (const auto& p : c) out.push_back(obj_p(p));
        return out;
    }

    PObjs lowobjs(const Context& c) const {
        PObjs out;
        out.reserve(c.size());
        for (const auto& p : c) out.push_back(m_.lower_obj(obj_c(p)));
        return out;
    }

    // --- derivations ------------------------------------------------------

    LinearDen<M> den_l(const Deriv& d) const {
        const Sequent& s = d->conclusion;
        if (s.kind != Judgment::Linear)
            throw std::logic_error("interp: linear clause on a persistent sequent");
        LinearDen<M> out;
        out.dom = lt_.fold(objs_l(s.left));
        out.cod = pp_.pfold(objs_l(s.right));
        out.mor = mor_l(d);
        if (!(m_.l_dom(out.mor) == out.dom) || !(m_.l_cod(out.mor) == out.cod))
            throw std::logic_error(std::string("interp: morphism for ") +
                                   rule_name(d->rule) +
                                   " does not match the interpreted sequent");
        return out;
    }

    PersistentDen<M> den_p(const Deriv& d) const {
        const Sequent& s = d->conclusion;
        auto disp = displaced(s);
        if (s.kind != Judgment::Persistent || disp.size() != 1)
            throw unsupported_structure(
                "interp: persistent sequent must carry exactly one displaced "
                "proposition: " + print_sequent(s));
        PersistentDen<M> out;
        out.displaced = disp[0];
        Context gamma = s.left, delta = s.right;
        if (out.displaced.side == Side::Left)
            gamma = ctx_without_index(gamma, out.displaced.index);
        else
            delta = ctx_without_index(delta, out.displaced.index);
        const Prop& dp = out.displaced.side == Side::Left
                             ? s.left[out.displaced.index]
                             : s.right[out.displaced.index];
        out.dom_left = pt_.fold(pobjs(gamma));
        out.dom_right = pt_.fold(lowobjs(delta));
        out.dom = m_.pt(out.dom_left, out.dom_right);
        out.cod = out.displaced.side == Side::Left ? m_.lower_obj(obj_c(dp)) : obj_p(dp);
        out.mor = mor_p(d, gamma, delta, dp);
        if (!(out.mor.dom == out.dom) || !(out.mor.cod == out.cod))
            throw std::logic_error(std::string("interp: morphism for ") +
                                   rule_name(d->rule) +
                                   " does not match the interpreted sequent");
        return out;
    }

private:
    const M& m_;
    Plumb<LTensorOps<M>> lt_;
    ParPlumb<M> pp_;
    Plumb<PTensorOps<M>> pt_;

    using LOps = LTensorOps<M>;
    using Mask = std::vector<bool>;

    // --- small helpers ----------------------------------------------------

    LMor lc(const LMor& g, const LMor& f) const { return m_.l_comp(g, f); }
    LMor lc(const LMor& h, const LMor& g, const LMor& f) const {
        return m_.l_comp(h, m_.l_comp(g, f));
    }
    PMor pc(const PMor& g, const PMor& f) const { return m_.p_comp(g, f); }

    static std::pair<Context, size_t> with_inserted(const Context& c, const Prop& p) {
        Context out = c;
        size_t idx = ctx_insert(out, p);
        return {out, idx};
    }

    // Split `whole` between two premise sub-multisets: mask false entries
    // feed the first group. Both groups and `whole` are sorted, so a greedy
    // in-order match is exact.
    static Mask assign_mask(const Context& whole, const Context& first,
                            const Context& second) {
        Mask mask(whole.size());
        size_t i0 = 0, i1 = 0;
        for (size_t i = 0; i < whole.size(); ++i) {
            if (i0 < first.size() && prop_eq(whole[i], first[i0])) {
                mask[i] = false;
                ++i0;
            } else {
                if (i1 >= second.size() || !prop_eq(whole[i], second[i1]))
                    throw std::logic_error("interp: premise contexts do not split the conclusion");
                mask[i] = true;
                ++i1;
            }
        }
        if (i0 != first.size() || i1 != second.size())
            throw std::logic_error("interp: premise contexts do not split the conclusion");
        return mask;
    }

    void need(bool ok, const char* what) const {
        if (!ok)
            throw unsupported_structure(std::string("interp: model '") + m_.name() +
                                        "' lacks required structure: " + what);
    }

    // neg turns the par fold into a tensor fold; these are the object
    // equalities the transport below relies on.
    LObj neg_checked(LObj a, const char* what) const {
        LObj n = m_.l_neg(a);
        need(m_.l_neg(n) == a, what);
        return n;
    }

    // --- dualization helpers in L ------------------------------------------

    // a (x) (b par c) -> b par (a (x) c)
    LMor dl_prime(LObj a, LObj b, LObj c) const {
        return lc(m_.lp_sigma(m_.lt(a, c), b), m_.delta(a, c, b),
                  m_.lt_mor(m_.l_id(a), m_.lp_sigma(b, c)));
    }

    // (a par b) (x) c -> a par (b (x) c)
    LMor dr(LObj a, LObj b, LObj c) const {
        LMor s1 = m_.lt_sigma(m_.lp(a, b), c);
        LMor s2 = m_.lt_mor(m_.l_id(c), m_.lp_sigma(a, b));
        LMor d = m_.delta(c, b, a);
        LMor s3 = m_.lp_mor(m_.lt_sigma(c, b), m_.l_id(a));
        LMor s4 = m_.lp_sigma(m_.lt(b, c), a);
        return lc(s4, lc(s3, d), lc(s2, s1));
    }

    // (x (x) w) (x) z -> (x (x) z) (x) w
    LMor rot_last(LObj x, LObj w, LObj z) const {
        return lc(m_.lt_alpha_inv(x, z, w), m_.lt_mor(m_.l_id(x), m_.lt_sigma(w, z)),
                  m_.lt_alpha(x, w, z));
    }

    // from u : y (x) a -> bot, the name y -> neg a
    LMor curry(LObj y, LObj a, const LMor& u) const {
        LObj na = neg_checked(a, "involutive negation");
        LMor intro = lc(m_.lt_mor(m_.l_id(y), m_.gamma_one(a)), m_.lt_rho_inv(y));
        LMor dist = m_.delta(y, a, na);
        return lc(m_.lp_lambda(na), m_.lp_mor(u, m_.l_id(na)), lc(dist, intro));
    }

    // fold_tensor(F! p_i) -> F!(fold_p(p_i)), the strong monoidality chain
    LMor fbang_chain(const PObjs& ps) const {
        if (ps.empty()) return m_.fbang_m1();
        LMor acc = m_.l_id(m_.fbang_obj(ps[0]));
        PObj folded = ps[0];
        for (size_t i = 1; i < ps.size(); ++i) {
            acc = lc(m_.fbang_m(folded, ps[i]),
                     m_.lt_mor(acc, m_.l_id(m_.fbang_obj(ps[i]))));
            folded = m_.pt(folded, ps[i]);
        }
        return acc;
    }

    LMor fbang_chain_inv(const PObjs& ps) const {
        if (ps.empty()) return m_.fbang_m1_inv();
        LMor acc = m_.l_id(m_.fbang_obj(ps[0]));
        PObj folded = ps[0];
        for (size_t i = 1; i < ps.size(); ++i) {
            acc = lc(m_.lt_mor(acc, m_.l_id(m_.fbang_obj(ps[i]))),
                     m_.fbang_m_inv(folded, ps[i]));
            folded = m_.pt(folded, ps[i]);
        }
        return acc;
    }

    // right-associated tensor fold -> left-associated tensor fold
    LMor r2l(const LObjs& xs) const {
        if (xs.size() <= 1) return m_.l_id(lt_.fold(xs));
        LObjs tail(xs.begin() + 1, xs.end());
        LMor step = m_.lt_mor(m_.l_id(xs[0]), r2l(tail));
        return lc(lt_.merge({xs[0]}, tail), step);
    }

    LMor l2r(const LObjs& xs) const {
        if (xs.size() <= 1) return m_.l_id(lt_.fold(xs));
        LObjs tail(xs.begin() + 1, xs.end());
        LMor step = m_.lt_mor(m_.l_id(xs[0]), l2r(tail));
        return lc(step, lt_.split(xs, 1));
    }

    // neg(pfold(consumers)) -> F!(fold_p(lowered consumers)), built from the
    // componentwise comparison neg(F? c) -> F!(lower c) and the F! chain.
    LMor tau(const Context& delta) const {
        LObjs negs;
        std::vector<LMor> comps;
        PObjs lows;
        negs.reserve(delta.size());
        for (const auto& c : delta) {
            CObj cc = obj_c(c);
            LObj nw = neg_checked(obj_l(c), "involutive negation");
            need(nw == m_.fbang_obj(m_.lower_obj(cc)),
                 "negation matching F! of the lowering");
            negs.push_back(nw);
            comps.push_back(m_.dual_f2(cc));
            lows.push_back(m_.lower_obj(cc));
        }
        return lc(fbang_chain(lows), lt_.fold_map(comps), r2l(negs));
    }

    LMor tau_inv(const Context& delta) const {
        LObjs negs;
        std::vector<LMor> comps;
        PObjs lows;
        for (const auto& c : delta) {
            CObj cc = obj_c(c);
            negs.push_back(neg_checked(obj_l(c), "involutive negation"));
            comps.push_back(m_.dual_f2_inv(cc));
            lows.push_back(m_.lower_obj(cc));
        }
        return lc(l2r(negs), lt_.fold_map(comps), fbang_chain_inv(lows));
    }

    // --- clause bodies ------------------------------------------------------

    LMor mor_l(const Deriv& d) const {
        const Sequent& s = d->conclusion;
        switch (d->rule) {
            case RuleId::Ax:
                return m_.l_id(obj_l(s.left[0]));

            case RuleId::TopR:
            case RuleId::ZeroL: {
                need(M::has_additives, "additive structure");
                return m_.l_zero_mor(lt_.fold(objs_l(s.left)), pp_.pfold(objs_l(s.right)));
            }

            case RuleId::OneR: {
                // |- 1 at either multiplicative mode
                if (s.right[0]->tag == PropTag::OneP) return m_.fbang_m1();
                return m_.l_id(m_.lt_unit());
            }
            case RuleId::BotL: {
                if (s.left[0]->tag == PropTag::BotC) return m_.fwhy_n1();
                return m_.l_id(m_.lp_unit());
            }

            case RuleId::OneL: return one_l(d);
            case RuleId::BotR: return bot_r(d);
            case RuleId::WithL1:
            case RuleId::WithL2: return with_l(d);
            case RuleId::WithR: return with_r(d);
            case RuleId::PlusR1:
            case RuleId::PlusR2: return plus_r(d);
            case RuleId::PlusL: return plus_l(d);
            case RuleId::TensorL: return tensor_l(d);
            case RuleId::TensorR: return tensor_r(d);
            case RuleId::ParL: return par_l(d);
            case RuleId::ParR: return par_r(d);
            case RuleId::FBangL: return fbang_l(d);
            case RuleId::FWhyR: return fwhy_r(d);
            case RuleId::GBangL: return gbang_l(d);
            case RuleId::GWhyR: return gwhy_r(d);
            case RuleId::FBangR: return fbang_r(d);
            case RuleId::FWhyL: return fwhy_l(d);
            case RuleId::WeakL: return weak_l(d);
            case RuleId::WeakR: return weak_r(d);
            case RuleId::ContrL: return contr_l(d);
            case RuleId::ContrR: return contr_r(d);

            case RuleId::CutL:
            case RuleId::CutP:
            case RuleId::CutPPers:
            case RuleId::CutC:
            case RuleId::CutCPers:
                throw unsupported_structure(
                    "interp: derivations must be cut-free; eliminate cuts first");
            default:
                throw std::logic_error(std::string("interp: rule ") + rule_name(d->rule) +
                                       " cannot conclude a linear sequent");
        }
    }

    // conclusion context minus the principal occurrence
    Sequent base_of(const Deriv& d) const {
        const Occurrence& o = d->principal.at(0);
        Sequent b = d->conclusion;
        if (o.side == Side::Left)
            b.left = ctx_without_index(b.left, o.index);
        else
            b.right = ctx_without_index(b.right, o.index);
        return b;
    }

    const Prop& principal(const Deriv& d) const {
        const Occurrence& o = d->principal.at(0);
        return o.side == Side::Left ? d->conclusion.left[o.index]
                                    : d->conclusion.right[o.index];
    }

    LMor one_l(const Deriv& d) const {
        Sequent b = base_of(d);
        LObj g = lt_.fold(objs_l(b.left));
        LMor strip = principal(d)->tag == PropTag::OneP
                         ? lc(m_.lt_rho(g), m_.lt_mor(m_.l_id(g), m_.fbang_m1_inv()))
                         : m_.lt_rho(g);
        return lc(premise_l(d, 0), strip,
                  lt_.extract(objs_l(d->conclusion.left), d->principal[0].index));
    }

    LMor bot_r(const Deriv& d) const {
        Sequent b = base_of(d);
        LObj dr_ = pp_.pfold(objs_l(b.right));
        LMor intro = principal(d)->tag == PropTag::BotC
                         ? lc(m_.lp_mor(m_.fwhy_n1_inv(), m_.l_id(dr_)), m_.lp_lambda_inv(dr_))
                         : m_.lp_lambda_inv(dr_);
        return lc(pp_.par_insert(objs_l(d->conclusion.right), d->principal[0].index),
                  intro, premise_l(d, 0));
    }

    LMor with_l(const Deriv& d) const {
        need(M::has_additives, "additive structure");
        const Prop& x = principal(d);
        bool first = d->rule == RuleId::WithL1;
        LObj a = obj_l(x->a), bb = obj_l(x->b);
        Sequent base = base_of(d);
        auto [prem, j] = with_inserted(base.left, first ? x->a : x->b);
        LObj g = lt_.fold(objs_l(base.left));
        LMor proj = first ? m_.l_proj1(a, bb) : m_.l_proj2(a, bb);
        return lc(lc(premise_l(d, 0), lt_.insert(objs_l(prem), j)),
                  m_.lt_mor(m_.l_id(g), proj),
                  lt_.extract(objs_l(d->conclusion.left), d->principal[0].index));
    }

    LMor with_r(const Deriv& d) const {
        need(M::has_additives, "additive structure");
        const Prop& x = principal(d);
        LObj a = obj_l(x->a), bb = obj_l(x->b);
        Sequent base = base_of(d);
        LObj dr_ = pp_.pfold(objs_l(base.right));
        auto [p0, j0] = with_inserted(base.right, x->a);
        auto [p1, j1] = with_inserted(base.right, x->b);
        LMor f0 = lc(pp_.par_extract(objs_l(p0), j0), premise_l(d, 0));
        LMor f1 = lc(pp_.par_extract(objs_l(p1), j1), premise_l(d, 1));
        LMor dist = m_.l_copair(m_.lp_mor(m_.l_inj1(a, bb), m_.l_id(dr_)),
                                m_.lp_mor(m_.l_inj2(a, bb), m_.l_id(dr_)));
        return lc(pp_.par_insert(objs_l(d->conclusion.right), d->principal[0].index),
                  dist, m_.l_pair(f0, f1));
    }

    LMor plus_r(const Deriv& d) const {
        need(M::has_additives, "additive structure");
        const Prop& x = principal(d);
        bool first = d->rule == RuleId::PlusR1;
        LObj a = obj_l(x->a), bb = obj_l(x->b);
        Sequent base = base_of(d);
        LObj dr_ = pp_.pfold(objs_l(base.right));
        auto [prem, j] = with_inserted(base.right, first ? x->a : x->b);
        LMor inj = first ? m_.l_inj1(a, bb) : m_.l_inj2(a, bb);
        return lc(pp_.par_insert(objs_l(d->conclusion.right), d->principal[0].index),
                  m_.lp_mor(inj, m_.l_id(dr_)),
                  lc(pp_.par_extract(objs_l(prem), j), premise_l(d, 0)));
    }

    LMor plus_l(const Deriv& d) const {
        need(M::has_additives, "additive structure");
        const Prop& x = principal(d);
        LObj a = obj_l(x->a), bb = obj_l(x->b);
        Sequent base = base_of(d);
        LObj g = lt_.fold(objs_l(base.left));
        auto [p0, j0] = with_inserted(base.left, x->a);
        auto [p1, j1] = with_inserted(base.left, x->b);
        LMor f0 = lc(premise_l(d, 0), lt_.insert(objs_l(p0), j0));
        LMor f1 = lc(premise_l(d, 1), lt_.insert(objs_l(p1), j1));
        LMor dist_inv = m_.l_pair(m_.lt_mor(m_.l_id(g), m_.l_proj1(a, bb)),
                                  m_.lt_mor(m_.l_id(g), m_.l_proj2(a, bb)));
        return lc(m_.l_copair(f0, f1), dist_inv,
                  lt_.extract(objs_l(d->conclusion.left), d->principal[0].index));
    }

    LMor tensor_l(const Deriv& d) const {
        const Prop& x = principal(d);
        LObj a = obj_l(x->a), bb = obj_l(x->b);
        Sequent base = base_of(d);
        LObj g = lt_.fold(objs_l(base.left));
        auto [c1, j1] = with_inserted(base.left, x->a);
        auto [c2, j2] = with_inserted(c1, x->b);
        LMor split12 = x->tag == PropTag::TensorP
                           ? m_.fbang_m_inv(obj_p(x->a), obj_p(x->b))
                           : m_.l_id(m_.lt(a, bb));
        return lc(lc(premise_l(d, 0), lt_.insert(objs_l(c2), j2)),
                  lc(m_.lt_mor(lt_.insert(objs_l(c1), j1), m_.l_id(bb)),
                     m_.lt_alpha_inv(g, a, bb)),
                  lc(m_.lt_mor(m_.l_id(g), split12),
                     lt_.extract(objs_l(d->conclusion.left), d->principal[0].index)));
    }

    LMor tensor_r(const Deriv& d) const {
        const Prop& x = principal(d);
        LObj a = obj_l(x->a), bb = obj_l(x->b);
        const Sequent& s = d->conclusion;
        Sequent base = base_of(d);
        const Sequent& q0 = d->premises[0]->conclusion;
        const Sequent& q1 = d->premises[1]->conclusion;
        auto d0 = ctx_subtract(q0.right, {x->a});
        auto d1 = ctx_subtract(q1.right, {x->b});
        if (!d0 || !d1) throw std::logic_error("interp: tensor-r premises malformed");
        Mask mask_l = assign_mask(s.left, q0.left, q1.left);
        Mask mask_r = assign_mask(base.right, *d0, *d1);
        LObj dr0 = pp_.pfold(objs_l(*d0)), dr1 = pp_.pfold(objs_l(*d1));

        size_t j0 = pos_in(q0.right, *d0);
        size_t j1 = pos_in(q1.right, *d1);
        LMor f0 = lc(pp_.par_extract(objs_l(q0.right), j0), premise_l(d, 0));
        LMor f1 = lc(pp_.par_extract(objs_l(q1.right), j1), premise_l(d, 1));

        // (a par d0) (x) (b par d1) -> (a (x) b) par (d0 par d1)
        LMor u1 = m_.delta(m_.lp(a, dr0), bb, dr1);
        LMor v = lc(m_.lp_mor(m_.lt_sigma(bb, a), m_.l_id(dr0)), m_.delta(bb, a, dr0),
                    m_.lt_sigma(m_.lp(a, dr0), bb));
        LMor phi = lc(m_.lp_alpha(m_.lt(a, bb), dr0, dr1),
                      m_.lp_mor(v, m_.l_id(dr1)), u1);

        LMor recomb = x->tag == PropTag::TensorP
                          ? m_.fbang_m(obj_p(x->a), obj_p(x->b))
                          : m_.l_id(m_.lt(a, bb));
        LMor top = m_.lp_mor(recomb, pp_.par_merge_mask(objs_l(base.right), mask_r));
        return lc(lc(pp_.par_insert(objs_l(s.right), d->principal[0].index), top),
                  lc(phi, m_.lt_mor(f0, f1)),
                  lt_.split_mask(objs_l(s.left), mask_l));
    }

    LMor par_l(const Deriv& d) const {
        const Prop& x = principal(d);
        LObj a = obj_l(x->a), bb = obj_l(x->b);
        const Sequent& s = d->conclusion;
        Sequent base = base_of(d);
        const Sequent& q0 = d->premises[0]->conclusion;
        const Sequent& q1 = d->premises[1]->conclusion;
        auto g0 = ctx_subtract(q0.left, {x->a});
        auto g1 = ctx_subtract(q1.left, {x->b});
        if (!g0 || !g1) throw std::logic_error("interp: par-l premises malformed");
        Mask mask_l = assign_mask(base.left, *g0, *g1);
        Mask mask_r = assign_mask(s.right, q0.right, q1.right);
        LObj go0 = lt_.fold(objs_l(*g0)), go1 = lt_.fold(objs_l(*g1));

        size_t j0 = pos_in_left(q0.left, *g0);
        size_t j1 = pos_in_left(q1.left, *g1);
        LMor f0 = lc(premise_l(d, 0), lt_.insert(objs_l(q0.left), j0));
        LMor f1 = lc(premise_l(d, 1), lt_.insert(objs_l(q1.left), j1));

        LMor split12 = x->tag == PropTag::ParC
                           ? m_.fwhy_n(obj_c(x->a), obj_c(x->b))
                           : m_.l_id(m_.lp(a, bb));
        // (g0 (x) g1) (x) (a par b) -> (g0 (x) a) par (g1 (x) b)
        LMor psi = lc(m_.delta(go0, a, m_.lt(go1, bb)),
                      m_.lt_mor(m_.l_id(go0), dl_prime(go1, a, bb)),
                      m_.lt_alpha(go0, go1, m_.lp(a, bb)));
        return lc(pp_.par_merge_mask(objs_l(s.right), mask_r),
                  lc(m_.lp_mor(f0, f1), psi),
                  lc(m_.lt_mor(lt_.split_mask(objs_l(base.left), mask_l), split12),
                     lt_.extract(objs_l(s.left), d->principal[0].index)));
    }

    LMor par_r(const Deriv& d) const {
        const Prop& x = principal(d);
        LObj a = obj_l(x->a), bb = obj_l(x->b);
        Sequent base = base_of(d);
        auto [r1, j1] = with_inserted(base.right, x->a);
        auto [r2, j2] = with_inserted(r1, x->b);
        size_t pos1 = j1 + (j2 <= j1 ? 1 : 0), pos2 = j2;
        Mask ones(r2.size(), false);
        ones[pos1] = ones[pos2] = true;
        LObj dr_ = pp_.pfold(objs_l(base.right));
        // after the split the two components sit in context order
        LMor fix = pos1 < pos2 ? m_.l_id(m_.lp(a, bb)) : m_.lp_sigma(bb, a);
        LMor merge12 = x->tag == PropTag::ParC
                           ? m_.fwhy_n_inv(obj_c(x->a), obj_c(x->b))
                           : m_.l_id(m_.lp(a, bb));
        return lc(pp_.par_insert(objs_l(d->conclusion.right), d->principal[0].index),
                  lc(m_.lp_sigma(dr_, obj_l(x)), m_.lp_mor(m_.l_id(dr_), lc(merge12, fix))),
                  lc(pp_.par_split_mask(objs_l(r2), ones), premise_l(d, 0)));
    }

    LMor fbang_l(const Deriv& d) const {
        const Prop& x = principal(d);
        Sequent base = base_of(d);
        auto [prem, j] = with_inserted(base.left, x->a);
        return lc(premise_l(d, 0), lt_.insert(objs_l(prem), j),
                  lt_.extract(objs_l(d->conclusion.left), d->principal[0].index));
    }

    LMor fwhy_r(const Deriv& d) const {
        const Prop& x = principal(d);
        Sequent base = base_of(d);
        auto [prem, j] = with_inserted(base.right, x->a);
        return lc(pp_.par_insert(objs_l(d->conclusion.right), d->principal[0].index),
                  pp_.par_extract(objs_l(prem), j), premise_l(d, 0));
    }

    LMor gbang_l(const Deriv& d) const {
        const Prop& x = principal(d);
        LObj a = obj_l(x->a);
        Sequent base = base_of(d);
        LObj g = lt_.fold(objs_l(base.left));
        auto [prem, j] = with_inserted(base.left, x->a);
        return lc(lc(premise_l(d, 0), lt_.insert(objs_l(prem), j)),
                  m_.lt_mor(m_.l_id(g), m_.eps_bang(a)),
                  lt_.extract(objs_l(d->conclusion.left), d->principal[0].index));
    }

    LMor gwhy_r(const Deriv& d) const {
        need(M::has_gwhy, "the persistence comonad");
        const Prop& x = principal(d);
        LObj a = obj_l(x->a);
        Sequent base = base_of(d);
        LObj dr_ = pp_.pfold(objs_l(base.right));
        auto [prem, j] = with_inserted(base.right, x->a);
        return lc(pp_.par_insert(objs_l(d->conclusion.right), d->principal[0].index),
                  m_.lp_mor(m_.unit_why(a), m_.l_id(dr_)),
                  lc(pp_.par_extract(objs_l(prem), j), premise_l(d, 0)));
    }

    LMor weak_l(const Deriv& d) const {
        PObj p = obj_p(principal(d));
        Sequent base = base_of(d);
        LObj g = lt_.fold(objs_l(base.left));
        LMor discard = lc(m_.fbang_m1_inv(), m_.fbang_mor(m_.e_p(p)));
        return lc(lc(premise_l(d, 0), m_.lt_rho(g)),
                  m_.lt_mor(m_.l_id(g), discard),
                  lt_.extract(objs_l(d->conclusion.left), d->principal[0].index));
    }

    LMor weak_r(const Deriv& d) const {
        CObj c = obj_c(principal(d));
        Sequent base = base_of(d);
        LObj dr_ = pp_.pfold(objs_l(base.right));
        LMor unit = lc(m_.fwhy_mor(m_.e_c(c)), m_.fwhy_n1_inv());
        return lc(pp_.par_insert(objs_l(d->conclusion.right), d->principal[0].index),
                  lc(m_.lp_mor(unit, m_.l_id(dr_)), m_.lp_lambda_inv(dr_)),
                  premise_l(d, 0));
    }

    LMor contr_l(const Deriv& d) const {
        const Prop& x = principal(d);
        PObj p = obj_p(x);
        LObj xo = obj_l(x);
        Sequent base = base_of(d);
        LObj g = lt_.fold(objs_l(base.left));
        auto [c1, j1] = with_inserted(base.left, x);
        auto [c2, j2] = with_inserted(c1, x);
        LMor dup = lc(m_.fbang_m_inv(p, p), m_.fbang_mor(m_.d_p(p)));
        return lc(lc(premise_l(d, 0), lt_.insert(objs_l(c2), j2)),
                  lc(m_.lt_mor(lt_.insert(objs_l(c1), j1), m_.l_id(xo)),
                     m_.lt_alpha_inv(g, xo, xo)),
                  lc(m_.lt_mor(m_.l_id(g), dup),
                     lt_.extract(objs_l(d->conclusion.left), d->principal[0].index)));
    }

    LMor contr_r(const Deriv& d) const {
        const Prop& x = principal(d);
        CObj c = obj_c(x);
        LObj xo = obj_l(x);
        Sequent base = base_of(d);
        auto [r1, j1] = with_inserted(base.right, x);
        auto [r2, j2] = with_inserted(r1, x);
        size_t pos1 = j1 + (j2 <= j1 ? 1 : 0), pos2 = j2;
        Mask ones(r2.size(), false);
        ones[pos1] = ones[pos2] = true;
        LObj dr_ = pp_.pfold(objs_l(base.right));
        LMor join = lc(m_.fwhy_mor(m_.d_c(c)), m_.fwhy_n_inv(c, c));
        return lc(pp_.par_insert(objs_l(d->conclusion.right), d->principal[0].index),
                  lc(m_.lp_sigma(dr_, xo), m_.lp_mor(m_.l_id(dr_), join)),
                  lc(pp_.par_split_mask(objs_l(r2), ones), premise_l(d, 0)));
    }

    // --- the judgment-crossing rules ---------------------------------------

    // premise G ||- D, P  becomes  G |- D, F! P
    LMor fbang_r(const Deriv& d) const {
        const Sequent& s = d->conclusion;
        Sequent base = base_of(d);
        PersistentDen<M> f = den_p(d->premises[0]);
        LObj fg = m_.fbang_obj(f.dom_left);
        LObj dr_ = pp_.pfold(objs_l(base.right));
        LObj nd = neg_checked(dr_, "involutive negation");
        need(m_.l_neg(nd) == dr_, "involutive negation");

        LMor pi = fbang_chain(pobjs(s.left));
        LMor sprime = lc(m_.fbang_mor(f.mor), m_.fbang_m(f.dom_left, f.dom_right),
                         m_.lt_mor(m_.l_id(fg), tau(base.right)));
        LMor core = lc(m_.lp_mor(sprime, m_.l_id(dr_)), m_.delta(fg, nd, dr_),
                       lc(m_.lt_mor(m_.l_id(fg), m_.gamma_one(nd)), m_.lt_rho_inv(fg)));
        return lc(pp_.par_insert(objs_l(s.right), d->principal[0].index),
                  core, pi);
    }

    // premise G, C ||- D  becomes  G, F? C |- D
    LMor fwhy_l(const Deriv& d) const {
        const Sequent& s = d->conclusion;
        const Prop& x = principal(d);
        CObj c0 = obj_c(x->a);
        LObj w = obj_l(x);
        Sequent base = base_of(d);
        PersistentDen<M> f = den_p(d->premises[0]);
        LObj fg = m_.fbang_obj(f.dom_left);
        LObj dr_ = pp_.pfold(objs_l(s.right));
        LObj nd = neg_checked(dr_, "involutive negation");

        LMor pi = fbang_chain(pobjs(base.left));
        LMor s1 = lc(m_.fbang_mor(f.mor), m_.fbang_m(f.dom_left, f.dom_right));
        LMor u = lc(m_.dual_f2_inv(c0), s1, m_.lt_mor(m_.l_id(fg), tau(s.right)));
        LObj y = m_.lt(fg, w);
        LMor left = lc(m_.gamma_bot(w), m_.lt_mor(u, m_.l_id(w)), rot_last(fg, w, nd));
        LMor core = lc(m_.lp_lambda(dr_), m_.lp_mor(left, m_.l_id(dr_)),
                       lc(m_.delta(y, nd, dr_),
                          lc(m_.lt_mor(m_.l_id(y), m_.gamma_one(nd)), m_.lt_rho_inv(y))));
        return lc(core, m_.lt_mor(pi, m_.l_id(w)),
                  lt_.extract(objs_l(s.left), d->principal[0].index));
    }

    // --- persistent clauses --------------------------------------------------

    PMor mor_p(const Deriv& d, const Context& gamma, const Context& delta,
               const Prop& dp) const {
        switch (d->rule) {
            case RuleId::AxP:
                return m_.pt_rho(obj_p(dp));
            case RuleId::AxC:
                return m_.pt_lambda(m_.lower_obj(obj_c(dp)));
            case RuleId::OnePR:
                return m_.pt_lambda(m_.pt_unit());
            case RuleId::BotCL:
                return pc(m_.lower_m1(), m_.pt_lambda(m_.pt_unit()));

            case RuleId::TensorPL: return tensor_pl(d, gamma, delta);
            case RuleId::OnePL: return one_pl(d, gamma, delta);
            case RuleId::ParCR: return par_cr(d, gamma, delta);
            case RuleId::BotCR: return bot_cr(d, gamma, delta);
            case RuleId::WeakPL: return weak_pl(d, gamma, delta);
            case RuleId::ContrPL: return contr_pl(d, gamma, delta);
            case RuleId::WeakPR: return weak_pr(d, gamma, delta);
            case RuleId::ContrPR: return contr_pr(d, gamma, delta);
            case RuleId::TensorPR: return tensor_pr(d, gamma, delta, dp);
            case RuleId::ParCL: return par_cl(d, gamma, delta, dp);
            case RuleId::GBangR: return gbang_r(d, gamma, delta, dp);
            case RuleId::GWhyL: return gwhy_l(d, gamma, delta, dp);

            case RuleId::CutL:
            case RuleId::CutP:
            case RuleId::CutPPers:
            case RuleId::CutC:
            case RuleId::CutCPers:
                throw unsupported_structure(
                    "interp: derivations must be cut-free; eliminate cuts first");
            default:
                throw std::logic_error(std::string("interp: rule ") + rule_name(d->rule) +
                                       " cannot conclude a persistent sequent");
        }
    }

    // position of the principal occurrence inside the producer (left) or
    // consumer (right) sublist that the persistent folds range over
    size_t sub_index(const Deriv& d) const {
        const Occurrence& o = d->principal.at(0);
        const Context& whole =
            o.side == Side::Left ? d->conclusion.left : d->conclusion.right;
        Mode keep = o.side == Side::Left ? Mode::P : Mode::C;
        size_t k = 0;
        for (size_t i = 0; i < o.index; ++i)
            if (mode_of(whole[i]) == keep) ++k;
        return k;
    }

    // reshape one component of the pt-pair, leaving the other alone
    PMor on_gamma(const PMor& f, const Context& delta) const {
        return m_.pt_mor(f, m_.p_id(pt_.fold(lowobjs(delta))));
    }
    PMor on_delta(const Context& gamma, const PMor& f) const {
        return m_.pt_mor(m_.p_id(pt_.fold(pobjs(gamma))), f);
    }

    PMor tensor_pl(const Deriv& d, const Context& gamma, const Context& delta) const {
        const Prop& x = principal(d);
        PObj a = obj_p(x->a), b = obj_p(x->b);
        Context rest = ctx_without_index_by(gamma, x);
        PObj g = pt_.fold(pobjs(rest));
        auto [c1, j1] = with_inserted(rest, x->a);
        auto [c2, j2] = with_inserted(c1, x->b);
        PMor reassoc =
            pc(pt_.insert(pobjs(c2), j2),
               pc(m_.pt_mor(pt_.insert(pobjs(c1), j1), m_.p_id(b)),
                  pc(m_.pt_alpha_inv(g, a, b), pt_.extract(pobjs(gamma), sub_index(d)))));
        return pc(premise_p(d, 0), on_gamma(reassoc, delta));
    }

    PMor one_pl(const Deriv& d, const Context& gamma, const Context& delta) const {
        Context rest = ctx_without_index_by(gamma, principal(d));
        PObj g = pt_.fold(pobjs(rest));
        PMor kill = pc(m_.pt_rho(g), pt_.extract(pobjs(gamma), sub_index(d)));
        return pc(premise_p(d, 0), on_gamma(kill, delta));
    }

    PMor par_cr(const Deriv& d, const Context& gamma, const Context& delta) const {
        const Prop& x = principal(d);
        CObj ca = obj_c(x->a), cb = obj_c(x->b);
        PObj la = m_.lower_obj(ca), lb = m_.lower_obj(cb);
        need(M::has_lower_comonoidal, "monoidality of the lowering");
        Context rest = ctx_without_index_by(delta, x);
        PObj l = pt_.fold(lowobjs(rest));
        auto [c1, j1] = with_inserted(rest, x->a);
        auto [c2, j2] = with_inserted(c1, x->b);
        PMor reassoc =
            pc(pt_.insert(lowobjs(c2), j2),
               pc(m_.pt_mor(pt_.insert(lowobjs(c1), j1), m_.p_id(lb)),
                  pc(m_.pt_alpha_inv(l, la, lb),
                     pc(m_.pt_mor(m_.p_id(l), m_.lower_m_inv(ca, cb)),
                        pt_.extract(lowobjs(delta), sub_index(d))))));
        return pc(premise_p(d, 0), on_delta(gamma, reassoc));
    }

    PMor bot_cr(const Deriv& d, const Context& gamma, const Context& delta) const {
        Context rest = ctx_without_index_by(delta, principal(d));
        PObj l = pt_.fold(lowobjs(rest));
        PMor kill = pc(m_.pt_rho(l),
                       pc(m_.pt_mor(m_.p_id(l), m_.lower_m1_inv()),
                          pt_.extract(lowobjs(delta), sub_index(d))));
        return pc(premise_p(d, 0), on_delta(gamma, kill));
    }

    PMor weak_pl(const Deriv& d, const Context& gamma, const Context& delta) const {
        PObj p = obj_p(principal(d));
        Context rest = ctx_without_index_by(gamma, principal(d));
        PObj g = pt_.fold(pobjs(rest));
        PMor kill = pc(m_.pt_rho(g), pc(m_.pt_mor(m_.p_id(g), m_.e_p(p)),
                                        pt_.extract(pobjs(gamma), sub_index(d))));
        return pc(premise_p(d, 0), on_gamma(kill, delta));
    }

    PMor contr_pl(const Deriv& d, const Context& gamma, const Context& delta) const {
        const Prop& x = principal(d);
        PObj p = obj_p(x);
        Context rest = ctx_without_index_by(gamma, x);
        PObj g = pt_.fold(pobjs(rest));
        auto [c1, j1] = with_inserted(rest, x);
        auto [c2, j2] = with_inserted(c1, x);
        PMor dup = pc(pt_.insert(pobjs(c2), j2),
                      pc(m_.pt_mor(pt_.insert(pobjs(c1), j1), m_.p_id(p)),
                         pc(m_.pt_alpha_inv(g, p, p),
                            pc(m_.pt_mor(m_.p_id(g), m_.d_p(p)),
                               pt_.extract(pobjs(gamma), sub_index(d))))));
        return pc(premise_p(d, 0), on_gamma(dup, delta));
    }

    PMor weak_pr(const Deriv& d, const Context& gamma, const Context& delta) const {
        CObj c = obj_c(principal(d));
        Context rest = ctx_without_index_by(delta, principal(d));
        PObj l = pt_.fold(lowobjs(rest));
        PMor drop = pc(m_.lower_m1_inv(), m_.lower_mor(m_.e_c(c)));
        PMor kill = pc(m_.pt_rho(l), pc(m_.pt_mor(m_.p_id(l), drop),
                                        pt_.extract(lowobjs(delta), sub_index(d))));
        return pc(premise_p(d, 0), on_delta(gamma, kill));
    }

    PMor contr_pr(const Deriv& d, const Context& gamma, const Context& delta) const {
        const Prop& x = principal(d);
        CObj c = obj_c(x);
        PObj lo = m_.lower_obj(c);
        need(M::has_lower_comonoidal, "monoidality of the lowering");
        Context rest = ctx_without_index_by(delta, x);
        PObj l = pt_.fold(lowobjs(rest));
        auto [c1, j1] = with_inserted(rest, x);
        auto [c2, j2] = with_inserted(c1, x);
        PMor dup = pc(m_.lower_m_inv(c, c), m_.lower_mor(m_.d_c(c)));
        PMor re = pc(pt_.insert(lowobjs(c2), j2),
                     pc(m_.pt_mor(pt_.insert(lowobjs(c1), j1), m_.p_id(lo)),
                        pc(m_.pt_alpha_inv(l, lo, lo),
                           pc(m_.pt_mor(m_.p_id(l), dup),
                              pt_.extract(lowobjs(delta), sub_index(d))))));
        return pc(premise_p(d, 0), on_delta(gamma, re));
    }

    // (a (x) b) (x) (c (x) d) -> (a (x) c) (x) (b (x) d) in P
    PMor interchange_p(PObj a, PObj b, PObj c, PObj d) const {
        PMor start = m_.pt_alpha(a, b, m_.pt(c, d));
        PMor in1 = m_.pt_mor(m_.p_id(a), m_.pt_alpha_inv(b, c, d));
        PMor sw = m_.pt_mor(m_.p_id(a), m_.pt_mor(m_.pt_sigma(b, c), m_.p_id(d)));
        PMor in2 = m_.pt_mor(m_.p_id(a), m_.pt_alpha(c, b, d));
        PMor finish = m_.pt_alpha_inv(a, c, m_.pt(b, d));
        return pc(finish, pc(in2, pc(sw, pc(in1, start))));
    }

    struct PremiseSplit {
        Mask mask_g;
        Mask mask_l;
        PersistentDen<M> f0, f1;
        PMor shuffled;  // pt(g, l) -> pt(f0.dom, f1.dom)
    };

    PremiseSplit split_premises(const Deriv& d, const Context& gamma,
                                const Context& delta) const {
        PremiseSplit out{{}, {}, den_p(d->premises[0]), den_p(d->premises[1]), {}};
        Context g0, g1, l0, l1;
        persistent_parts(d->premises[0]->conclusion, g0, l0);
        persistent_parts(d->premises[1]->conclusion, g1, l1);
        out.mask_g = assign_mask(gamma, g0, g1);
        out.mask_l = assign_mask(delta, l0, l1);
        PMor splits = m_.pt_mor(pt_.split_mask(pobjs(gamma), out.mask_g),
                                pt_.split_mask(lowobjs(delta), out.mask_l));
        PMor inter = interchange_p(out.f0.dom_left, out.f1.dom_left, out.f0.dom_right,
                                   out.f1.dom_right);
        out.shuffled = pc(inter, splits);
        return out;
    }

    PMor tensor_pr(const Deriv& d, const Context& gamma, const Context& delta,
                   const Prop&) const {
        PremiseSplit ps = split_premises(d, gamma, delta);
        return pc(m_.pt_mor(ps.f0.mor, ps.f1.mor), ps.shuffled);
    }

    PMor par_cl(const Deriv& d, const Context& gamma, const Context& delta,
                const Prop& dp) const {
        need(M::has_lower_comonoidal, "monoidality of the lowering");
        PremiseSplit ps = split_premises(d, gamma, delta);
        return pc(m_.lower_m(obj_c(dp->a), obj_c(dp->b)),
                  pc(m_.pt_mor(ps.f0.mor, ps.f1.mor), ps.shuffled));
    }

    // premise G |- D, A  becomes  G ||- D, G! A
    PMor gbang_r(const Deriv& d, const Context& gamma, const Context& delta,
                 const Prop& dp) const {
        LObj a = obj_l(dp->a);
        LinearDen<M> f = den_l(d->premises[0]);
        PObj g = pt_.fold(pobjs(gamma));
        PObj l = pt_.fold(lowobjs(delta));
        LObj fg = m_.fbang_obj(g), fl = m_.fbang_obj(l);
        LObj dr_ = pp_.pfold(objs_l(delta));
        LObj nd = neg_checked(dr_, "involutive negation");

        auto [prem, j] = with_inserted(delta, dp->a);
        LMor fprime = lc(pp_.par_extract(objs_l(prem), j), f.mor,
                         fbang_chain_inv(pobjs(gamma)));
        LMor killd = lc(m_.gamma_bot(dr_), m_.lt_sigma(dr_, nd));
        LMor h = lc(m_.lp_rho(a), m_.lp_mor(m_.l_id(a), killd),
                    lc(dr(a, dr_, nd),
                       m_.lt_mor(fprime, tau_inv(delta))));
        return pc(m_.gbang_mor(h),
                  pc(m_.gbang_m(fg, fl), m_.pt_mor(m_.eta_bang(g), m_.eta_bang(l))));
    }

    // premise G, A |- D  becomes  G, G? A ||- D
    PMor gwhy_l(const Deriv& d, const Context& gamma, const Context& delta,
                const Prop& dp) const {
        need(M::has_gwhy, "the persistence comonad");
        LObj a = obj_l(dp->a);
        LObj na = neg_checked(a, "involutive negation");
        LinearDen<M> f = den_l(d->premises[0]);
        PObj g = pt_.fold(pobjs(gamma));
        PObj l = pt_.fold(lowobjs(delta));
        LObj fg = m_.fbang_obj(g), fl = m_.fbang_obj(l);
        LObj dr_ = pp_.pfold(objs_l(delta));
        LObj nd = neg_checked(dr_, "involutive negation");

        auto [prem, j] = with_inserted(gamma, dp->a);
        LMor f0 = lc(f.mor, lt_.insert(objs_l(prem), j));
        LMor t = lc(f0, m_.lt_mor(fbang_chain_inv(pobjs(gamma)), m_.l_id(a)));
        LMor u = lc(m_.gamma_bot(dr_), m_.lt_sigma(dr_, nd),
                    lc(m_.lt_mor(t, m_.l_id(nd)), rot_last(fg, nd, a),
                       m_.lt_mor(m_.lt_mor(m_.l_id(fg), tau_inv(delta)), m_.l_id(a))));
        LMor h = curry(m_.lt(fg, fl), a, u);
        PMor gq = pc(m_.lower_mor(m_.dual_g_inv(na)), m_.eta_ss(m_.gbang_obj(na)));
        return pc(gq, pc(m_.gbang_mor(h),
                         pc(m_.gbang_m(fg, fl),
                            m_.pt_mor(m_.eta_bang(g), m_.eta_bang(l)))));
    }

    // --- shared premise helpers ----------------------------------------------

    PMor premise_p(const Deriv& d, size_t i) const { return den_p(d->premises[i]).mor; }
    LMor premise_l(const Deriv& d, size_t i) const { return den_l(d->premises[i]).mor; }

    static void persistent_parts(const Sequent& s, Context& gamma, Context& delta) {
        auto disp = displaced(s);
        if (disp.size() != 1)
            throw unsupported_structure(
                "interp: persistent sequent must carry exactly one displaced "
                "proposition: " + print_sequent(s));
        gamma = s.left;
        delta = s.right;
        if (disp[0].side == Side::Left)
            gamma = ctx_without_index(gamma, disp[0].index);
        else
            delta = ctx_without_index(delta, disp[0].index);
    }

    // drop the first occurrence equal to p (the principal within a sublist)
    static Context ctx_without_index_by(const Context& c, const Prop& p) {
        auto idx = ctx_find(c, p);
        if (!idx) throw std::logic_error("interp: principal missing from context");
        return ctx_without_index(c, *idx);
    }

    // where the extracted component sits inside a premise context
    static size_t pos_in(const Context& whole, const Context& rest) {
        // whole = rest + one extra element; find its index
        for (size_t i = 0; i < rest.size(); ++i)
            if (!prop_eq(whole[i], rest[i])) return i;
        return whole.size() - 1;
    }
    static size_t pos_in_left(const Context& whole, const Context& rest) {
        return pos_in(whole, rest);
    }
};

template <class M>
LinearDen<M> interp_linear(const M& m, const Deriv& d) {
    require_checked(d, CheckPolicy{/*allow_cut=*/false});
    if (d->conclusion.kind != Judgment::Linear)
        throw unsupported_structure("interp: expected a linear sequent, got " +
                                    print_sequent(d->conclusion));
    return Interp<M>(m).den_l(d);
}

template <class M>
PersistentDen<M> interp_persistent(const M& m, const Deriv& d) {
    require_checked(d, CheckPolicy{/*allow_cut=*/false});
    if (d->conclusion.kind != Judgment::Persistent)
        throw unsupported_structure("interp: expected a persistent sequent, got " +
                                    print_sequent(d->conclusion));
    return Interp<M>(m).den_p(d);
}

} // namespace lpc::semantics
