#pragma once

#include <stdexcept>
#include <string>

#include "lpc/replicate.hpp"
#include "lpc/search.hpp"

namespace lpc {

// Cut elimination.
//
// The engine reduces one generalized cut at a time: cut(x, n, d1, d2) removes
// n copies of x sitting on the right of d1 / left of d2 (producers and linear
// formulas keep one occurrence on d1's right and the copies on d2's left;
// consumers keep the copies on d1's right and one occurrence on d2's left).
// Each recursive step strictly decreases the pair (size of x, depth of d1 +
// depth of d2) in lexicographic order, which is what the optional trace
// records and what the tests verify.
//
// The procedure is not total. When a persistent derivation ending in gbang-r
// (or gwhy-l) has to be replayed at the linear judgment - this happens when a
// cut meets the linear axiom on a producer or consumer - there is simply no
// |- rule that introduces ! on the right or ? on the left. A bounded proof
// search then tries to derive the required sequent from scratch; when that
// also fails, a cut_gap_error carrying the blocking formula and the
// underivable goal is thrown rather than papering over the hole.

struct GapDiagnosis {
    Prop blocking;    // the ! / ? proposition with no linear introduction
    Sequent goal;     // the linear sequent that could not be derived
    std::string note;
};

class cut_gap_error : public std::runtime_error {
public:
    explicit cut_gap_error(GapDiagnosis d)
        : std::runtime_error("derivation gap at " + print_prop(d.blocking) + ": " +
                             d.note),
          diag_(std::move(d)) {}
    const GapDiagnosis& diagnosis() const { return diag_; }

private:
    GapDiagnosis diag_;
};

struct TraceStep {
    std::string label;
    size_t formula_size = 0;
    size_t depth_sum = 0;
    long parent = -1; // index into the trace, -1 for a top-level cut
};

struct EliminationTrace {
    std::vector<TraceStep> steps;
};

// Every step must be lexicographically smaller than its parent.
inline bool trace_measure_decreases(const EliminationTrace& t) {
    for (const auto& s : t.steps) {
        if (s.parent < 0) continue;
        const auto& p = t.steps[static_cast<size_t>(s.parent)];
        if (s.formula_size < p.formula_size) continue;
        if (s.formula_size == p.formula_size && s.depth_sum < p.depth_sum) continue;
        return false;
    }
    return true;
}

namespace detail {

inline const Prop& occ_prop(const Sequent& s, const Occurrence& o) {
    return o.side == Side::Left ? s.left[o.index] : s.right[o.index];
}

inline const Prop& principal_value(const Deriv& d) {
    return occ_prop(d->conclusion, d->principal.at(0));
}

// Does the root rule of d introduce an occurrence of x on side s? The exact
// leaves carry no recorded principal but do introduce their one proposition,
// and an axiom introduces its formula on both sides at once.
inline bool root_introduces(const Deriv& d, Side s, const Prop& x) {
    switch (d->rule) {
        case RuleId::Ax:
        case RuleId::AxP:
        case RuleId::AxC:
            return prop_eq(s == Side::Left ? d->conclusion.left.at(0)
                                           : d->conclusion.right.at(0),
                           x);
        case RuleId::OneR:
        case RuleId::OnePR:
            return s == Side::Right && prop_eq(d->conclusion.right.at(0), x);
        case RuleId::BotL:
        case RuleId::BotCL:
            return s == Side::Left && prop_eq(d->conclusion.left.at(0), x);
        default:
            if (d->principal.empty()) return false;
            const Occurrence& o = d->principal[0];
            return o.side == s && prop_eq(occ_prop(d->conclusion, o), x);
    }
}

// Re-apply a one-premise rule on a transformed premise. The builders pick the
// linear or persistent rule id from the premise's judgment, which is exactly
// what commuting a step across the judgment boundary needs.
inline Deriv reapply_unary(RuleId r, const Prop& y, Deriv e) {
    switch (r) {
        case RuleId::WithL1: return build::with_l(1, y, std::move(e));
        case RuleId::WithL2: return build::with_l(2, y, std::move(e));
        case RuleId::PlusR1: return build::plus_r(1, y, std::move(e));
        case RuleId::PlusR2: return build::plus_r(2, y, std::move(e));
        case RuleId::TensorL:
        case RuleId::TensorPL: return build::tensor_l(y, std::move(e));
        case RuleId::OneL:
        case RuleId::OnePL: return build::one_l(y, std::move(e));
        case RuleId::ParR:
        case RuleId::ParCR: return build::par_r(y, std::move(e));
        case RuleId::BotR:
        case RuleId::BotCR: return build::bot_r(y, std::move(e));
        case RuleId::FBangL: return build::fbang_l(y, std::move(e));
        case RuleId::FBangR: return build::fbang_r(y, std::move(e));
        case RuleId::FWhyL: return build::fwhy_l(y, std::move(e));
        case RuleId::FWhyR: return build::fwhy_r(y, std::move(e));
        case RuleId::GBangL: return build::gbang_l(y, std::move(e));
        case RuleId::GBangR: return build::gbang_r(y, std::move(e));
        case RuleId::GWhyL: return build::gwhy_l(y, std::move(e));
        case RuleId::GWhyR: return build::gwhy_r(y, std::move(e));
        case RuleId::WeakL:
        case RuleId::WeakPL: return build::weak_l(y, std::move(e));
        case RuleId::WeakR:
        case RuleId::WeakPR: return build::weak_r(y, std::move(e));
        case RuleId::ContrL:
        case RuleId::ContrPL: return build::contr_l(y, std::move(e));
        case RuleId::ContrR:
        case RuleId::ContrPR: return build::contr_r(y, std::move(e));
        default:
            throw std::logic_error(std::string("reapply_unary: ") + rule_name(r));
    }
}

inline SearchBudget gap_budget() { return {10, 1, 20000}; }

inline Deriv gap_fallback(const Prop& blocking, Sequent goal, const char* note) {
    SearchOutcome r = search(goal, gap_budget());
    if (r.deriv) return r.deriv;
    throw cut_gap_error({blocking, std::move(goal), note});
}

// Replay a persistent derivation of Gamma ||- Delta, P at the linear
// judgment. Total except at a gbang-r root, where no |- rule introduces ! on
// the right; bounded search then has the last word.
inline Deriv demote_right(const Deriv& d) {
    switch (d->rule) {
        case RuleId::AxP: return build::ax(d->conclusion.left[0]);
        case RuleId::OnePR: return build::one_r(one_p());
        case RuleId::TensorPR:
            return build::tensor_r(principal_value(d), demote_right(d->premises[0]),
                                   demote_right(d->premises[1]));
        case RuleId::GBangR:
            return gap_fallback(
                principal_value(d),
                Sequent{Judgment::Linear, d->conclusion.left, d->conclusion.right},
                "the derivation promotes with gbang-r, but no linear rule introduces "
                "! on the right and bounded search found no other derivation");
        case RuleId::OnePL:
        case RuleId::TensorPL:
        case RuleId::ParCR:
        case RuleId::BotCR:
        case RuleId::WeakPL:
        case RuleId::WeakPR:
        case RuleId::ContrPL:
        case RuleId::ContrPR:
            return reapply_unary(d->rule, principal_value(d), demote_right(d->premises[0]));
        default:
            throw std::logic_error(std::string("demote_right: ") + rule_name(d->rule));
    }
}

// Mirror image: replay C, Gamma ||- Delta at the linear judgment; the gap
// sits at gwhy-l roots.
inline Deriv demote_left(const Deriv& d) {
    switch (d->rule) {
        case RuleId::AxC: return build::ax(d->conclusion.left[0]);
        case RuleId::BotCL: return build::bot_l(bot_c());
        case RuleId::ParCL:
            return build::par_l(principal_value(d), demote_left(d->premises[0]),
                                demote_left(d->premises[1]));
        case RuleId::GWhyL:
            return gap_fallback(
                principal_value(d),
                Sequent{Judgment::Linear, d->conclusion.left, d->conclusion.right},
                "the derivation promotes with gwhy-l, but no linear rule introduces "
                "? on the left and bounded search found no other derivation");
        case RuleId::OnePL:
        case RuleId::TensorPL:
        case RuleId::ParCR:
        case RuleId::BotCR:
        case RuleId::WeakPL:
        case RuleId::WeakPR:
        case RuleId::ContrPL:
        case RuleId::ContrPR:
            return reapply_unary(d->rule, principal_value(d), demote_left(d->premises[0]));
        default:
            throw std::logic_error(std::string("demote_left: ") + rule_name(d->rule));
    }
}

class Eliminator {
public:
    explicit Eliminator(EliminationTrace* trace) : trace_(trace) {}

    Deriv cut(const Prop& x, size_t n, const Deriv& d1, const Deriv& d2, long parent) {
        const Mode m = mode_of(x);
        if (n == 0) return vanish(x, d1, d2, parent);

        // A structural root acting on a cut copy adjusts n directly.
        if (m == Mode::P) {
            if ((d2->rule == RuleId::WeakL || d2->rule == RuleId::WeakPL) &&
                prop_eq(principal_value(d2), x)) {
                long me = step("weak-copy", x, d1, d2, parent);
                return cut(x, n - 1, d1, d2->premises[0], me);
            }
            if ((d2->rule == RuleId::ContrL || d2->rule == RuleId::ContrPL) &&
                prop_eq(principal_value(d2), x)) {
                long me = step("contr-copy", x, d1, d2, parent);
                return cut(x, n + 1, d1, d2->premises[0], me);
            }
        } else if (m == Mode::C) {
            if ((d1->rule == RuleId::WeakR || d1->rule == RuleId::WeakPR) &&
                prop_eq(principal_value(d1), x)) {
                long me = step("weak-copy", x, d1, d2, parent);
                return cut(x, n - 1, d1->premises[0], d2, me);
            }
            if ((d1->rule == RuleId::ContrR || d1->rule == RuleId::ContrPR) &&
                prop_eq(principal_value(d1), x)) {
                long me = step("contr-copy", x, d1, d2, parent);
                return cut(x, n + 1, d1->premises[0], d2, me);
            }
        }

        // Axiom roots either hand back the other premise, replicate it, or
        // force a derivation across the judgment boundary.
        switch (m) {
            case Mode::L:
                if (d1->rule == RuleId::Ax) {
                    step("ax-left", x, d1, d2, parent);
                    return d2;
                }
                if (d2->rule == RuleId::Ax) {
                    step("ax-right", x, d1, d2, parent);
                    return d1;
                }
                break;
            case Mode::P:
                if (d1->rule == RuleId::AxP) {
                    step("ax-left", x, d1, d2, parent);
                    return replicate(d2, Side::Left, x, n);
                }
                if (d2->rule == RuleId::AxP) {
                    step("ax-right", x, d1, d2, parent);
                    return d1;
                }
                if (d2->rule == RuleId::Ax) {
                    step("ax-demote", x, d1, d2, parent);
                    return demote_right(d1);
                }
                break;
            case Mode::C:
                if (d2->rule == RuleId::AxC) {
                    step("ax-right", x, d1, d2, parent);
                    return replicate(d1, Side::Right, x, n);
                }
                if (d1->rule == RuleId::AxC) {
                    step("ax-left", x, d1, d2, parent);
                    return d2;
                }
                if (d1->rule == RuleId::Ax) {
                    step("ax-demote", x, d1, d2, parent);
                    return demote_left(d2);
                }
                break;
        }

        if (!root_introduces(d2, Side::Left, x)) return commute(x, n, d1, d2, false, parent);
        if (!root_introduces(d1, Side::Right, x)) return commute(x, n, d1, d2, true, parent);
        return principal_pair(x, n, d1, d2, parent);
    }

private:
    long step(const std::string& label, const Prop& x, const Deriv& a, const Deriv& b,
              long parent) {
        if (!trace_) return -1;
        trace_->steps.push_back(
            {label, prop_size(x), deriv_depth(a) + deriv_depth(b), parent});
        return static_cast<long>(trace_->steps.size()) - 1;
    }

    // n reached zero: the copies were never used, so the other premise's
    // contexts are imported by weakening. Only producer and consumer cuts can
    // get here, and their side contexts weaken by construction.
    Deriv vanish(const Prop& x, const Deriv& d1, const Deriv& d2, long parent) {
        step("vanish", x, d1, d2, parent);
        if (mode_of(x) == Mode::P) {
            Deriv out = d2;
            for (const auto& p : d1->conclusion.left) out = build::weak_l(p, out);
            for (const auto& c : *ctx_subtract(d1->conclusion.right, {x}))
                out = build::weak_r(c, out);
            return out;
        }
        Deriv out = d1;
        for (const auto& p : *ctx_subtract(d2->conclusion.left, {x}))
            out = build::weak_l(p, out);
        for (const auto& c : d2->conclusion.right) out = build::weak_r(c, out);
        return out;
    }

    Sequent cut_conclusion(const Prop& x, size_t n, const Deriv& d1, const Deriv& d2) {
        const Mode m = mode_of(x);
        Context copies(m == Mode::L ? 1 : n, x);
        Context single{x};
        const Context& from1 = m == Mode::C ? copies : single;
        const Context& from2 = m == Mode::C ? single : copies;
        Sequent out;
        out.kind = m == Mode::P   ? d2->conclusion.kind
                   : m == Mode::C ? d1->conclusion.kind
                                  : Judgment::Linear;
        out.left = ctx_union(d1->conclusion.left,
                             *ctx_subtract(d2->conclusion.left, from2));
        out.right = ctx_union(*ctx_subtract(d1->conclusion.right, from1),
                              d2->conclusion.right);
        return out;
    }

    // Push the cut through the root of one premise (through d1 when
    // through_d1, else d2) and re-apply that rule on the result.
    Deriv commute(const Prop& x, size_t n, const Deriv& d1, const Deriv& d2,
                  bool through_d1, long parent) {
        const Deriv& d = through_d1 ? d1 : d2;
        long me = step(std::string(through_d1 ? "commute-left:" : "commute-right:") +
                           rule_name(d->rule),
                       x, d1, d2, parent);

        // Inert leaves: the constant survives into the cut conclusion, so the
        // leaf is simply re-instantiated there.
        if (d->rule == RuleId::TopR || d->rule == RuleId::ZeroL) {
            Sequent concl = cut_conclusion(x, n, d1, d2);
            return d->rule == RuleId::TopR
                       ? build::top_r(std::move(concl.left), std::move(concl.right))
                       : build::zero_l(std::move(concl.left), std::move(concl.right));
        }

        const std::vector<Deriv>& ps = d->premises;
        if (ps.size() == 1) {
            Deriv e = through_d1 ? cut(x, n, ps[0], d2, me) : cut(x, n, d1, ps[0], me);
            return reapply_unary(d->rule, principal_value(d), std::move(e));
        }

        // Binary roots. Additive pairs share their contexts, so both premises
        // carry all n copies and nothing gets duplicated.
        const Prop& y = principal_value(d);
        if (d->rule == RuleId::WithR || d->rule == RuleId::PlusL) {
            Deriv e0 = through_d1 ? cut(x, n, ps[0], d2, me) : cut(x, n, d1, ps[0], me);
            Deriv e1 = through_d1 ? cut(x, n, ps[1], d2, me) : cut(x, n, d1, ps[1], me);
            return d->rule == RuleId::WithR ? build::with_r(y, e0, e1)
                                            : build::plus_l(y, e0, e1);
        }

        // Multiplicative splits: the copies are distributed over the premises
        // as the context split left them. A premise's own freshly introduced
        // component can coincide with x; that occurrence is not a cut copy
        // and stays available for the re-application.
        const bool comps_left = d->rule == RuleId::ParL || d->rule == RuleId::ParCL;
        const Side cut_side = through_d1 ? Side::Right : Side::Left;
        size_t avail[2];
        for (int i = 0; i < 2; ++i) {
            const Sequent& c = ps[static_cast<size_t>(i)]->conclusion;
            const Context& ctx = cut_side == Side::Left ? c.left : c.right;
            size_t a = ctx_count(ctx, x);
            const bool comp_on_cut_side = comps_left == (cut_side == Side::Left);
            if (comp_on_cut_side && prop_eq(i == 0 ? y->a : y->b, x)) --a;
            avail[i] = a;
        }
        size_t n0 = std::min(n, avail[0]);
        size_t n1 = n - n0;
        if (n1 > avail[1])
            throw std::logic_error("commute: cut copies exceed the premise split");

        Deriv e0 = ps[0], e1 = ps[1];
        if (n0 > 0) e0 = through_d1 ? cut(x, n0, ps[0], d2, me) : cut(x, n0, d1, ps[0], me);
        if (n1 > 0) e1 = through_d1 ? cut(x, n1, ps[1], d2, me) : cut(x, n1, d1, ps[1], me);

        Deriv out;
        switch (d->rule) {
            case RuleId::TensorR:
            case RuleId::TensorPR: out = build::tensor_r(y, e0, e1); break;
            case RuleId::ParL:
            case RuleId::ParCL: out = build::par_l(y, e0, e1); break;
            default:
                throw std::logic_error(std::string("commute: ") + rule_name(d->rule));
        }

        if (n0 > 0 && n1 > 0) {
            // Both premises absorbed the other side's contexts; contract the
            // duplicates (persistent by the displaced-occurrence discipline).
            const Deriv& o = through_d1 ? d2 : d1;
            Context dup_left = o->conclusion.left;
            Context dup_right = o->conclusion.right;
            if (through_d1)
                dup_left = *ctx_subtract(dup_left, {x});
            else
                dup_right = *ctx_subtract(dup_right, {x});
            for (const auto& p : dup_left) out = build::contr_l(p, out);
            for (const auto& c : dup_right) out = build::contr_r(c, out);
        }
        return out;
    }

    // Both roots introduce the cut formula.
    Deriv principal_pair(const Prop& x, size_t n, const Deriv& d1, const Deriv& d2,
                         long parent) {
        switch (x->tag) {
            case PropTag::OneL:
            case PropTag::OneP: {
                long me = step("principal-one", x, d1, d2, parent);
                const Deriv& f = d2->premises[0];
                return n == 1 ? f : cut(x, n - 1, d1, f, me);
            }
            case PropTag::BotL:
            case PropTag::BotC: {
                long me = step("principal-bot", x, d1, d2, parent);
                const Deriv& f = d1->premises[0];
                return n == 1 ? f : cut(x, n - 1, f, d2, me);
            }
            case PropTag::With: {
                long me = step("principal-with", x, d1, d2, parent);
                size_t k = d2->rule == RuleId::WithL1 ? 0 : 1;
                return cut(k == 0 ? x->a : x->b, 1, d1->premises[k], d2->premises[0], me);
            }
            case PropTag::Plus: {
                long me = step("principal-plus", x, d1, d2, parent);
                size_t k = d1->rule == RuleId::PlusR1 ? 0 : 1;
                return cut(k == 0 ? x->a : x->b, 1, d1->premises[0], d2->premises[k], me);
            }
            case PropTag::TensorL: {
                long me = step("principal-tensor", x, d1, d2, parent);
                Deriv t = cut(x->b, 1, d1->premises[1], d2->premises[0], me);
                return cut(x->a, 1, d1->premises[0], t, me);
            }
            case PropTag::ParL: {
                long me = step("principal-par", x, d1, d2, parent);
                Deriv t = cut(x->b, 1, d1->premises[0], d2->premises[1], me);
                return cut(x->a, 1, t, d2->premises[0], me);
            }
            case PropTag::TensorP: {
                // d1 = tensor-p-r(e1, e2); d2 splits one copy into components.
                long me = step("principal-tensor-p", x, d1, d2, parent);
                Deriv e = cut(x, n - 1, d1, d2->premises[0], me);
                e = cut(x->b, 1, d1->premises[1], e, me);
                e = cut(x->a, 1, d1->premises[0], e, me);
                for (const auto& p : d1->conclusion.left) e = build::contr_l(p, e);
                for (const auto& c : *ctx_subtract(d1->conclusion.right, {x}))
                    e = build::contr_r(c, e);
                return e;
            }
            case PropTag::ParC: {
                long me = step("principal-par-c", x, d1, d2, parent);
                Deriv e = cut(x, n - 1, d1->premises[0], d2, me);
                e = cut(x->b, 1, e, d2->premises[1], me);
                e = cut(x->a, 1, e, d2->premises[0], me);
                for (const auto& p : *ctx_subtract(d2->conclusion.left, {x}))
                    e = build::contr_l(p, e);
                for (const auto& c : d2->conclusion.right) e = build::contr_r(c, e);
                return e;
            }
            case PropTag::FBang: {
                long me = step("principal-fbang", x, d1, d2, parent);
                return cut(x->a, 1, d1->premises[0], d2->premises[0], me);
            }
            case PropTag::FWhy: {
                long me = step("principal-fwhy", x, d1, d2, parent);
                return cut(x->a, 1, d1->premises[0], d2->premises[0], me);
            }
            case PropTag::GBang: {
                // d1 = gbang-r(g); d2 = gbang-l on one copy (linear only).
                long me = step("principal-gbang", x, d1, d2, parent);
                Deriv e = cut(x, n - 1, d1, d2->premises[0], me);
                e = cut(x->a, 1, d1->premises[0], e, me);
                for (const auto& p : d1->conclusion.left) e = build::contr_l(p, e);
                for (const auto& c : *ctx_subtract(d1->conclusion.right, {x}))
                    e = build::contr_r(c, e);
                return e;
            }
            case PropTag::GWhy: {
                long me = step("principal-gwhy", x, d1, d2, parent);
                Deriv e = cut(x, n - 1, d1->premises[0], d2, me);
                e = cut(x->a, 1, e, d2->premises[0], me);
                for (const auto& p : *ctx_subtract(d2->conclusion.left, {x}))
                    e = build::contr_l(p, e);
                for (const auto& c : d2->conclusion.right) e = build::contr_r(c, e);
                return e;
            }
            default:
                throw std::logic_error("principal cut on an inert constant");
        }
    }

    EliminationTrace* trace_;
};

// The stored cut formula is determined by the premises and conclusion.
inline Prop cut_formula_of(const Deriv& d) {
    Context r = ctx_union(d->premises[0]->conclusion.right,
                          d->premises[1]->conclusion.right);
    auto x = ctx_subtract(r, d->conclusion.right);
    if (!x || x->size() != 1)
        throw std::logic_error("cut node does not determine its formula");
    return (*x)[0];
}

inline Deriv eliminate_rec(const Deriv& d, Eliminator& e) {
    std::vector<Deriv> prems;
    prems.reserve(d->premises.size());
    bool changed = false;
    for (const auto& p : d->premises) {
        Deriv q = eliminate_rec(p, e);
        changed = changed || q != p;
        prems.push_back(std::move(q));
    }
    if (!is_cut(d->rule)) {
        if (!changed) return d;
        return mk_deriv(d->rule, d->conclusion, d->principal, std::move(prems));
    }
    Prop x = cut_formula_of(d);
    return e.cut(x, 1, prems[0], prems[1], -1);
}

} // namespace detail

struct EliminationResult {
    Deriv deriv;
    EliminationTrace trace;
};

// Remove every cut in d, innermost first. Conclusions are preserved exactly.
inline EliminationResult eliminate_all(const Deriv& d, bool with_trace = false) {
    require_checked(d);
    EliminationResult out;
    detail::Eliminator e(with_trace ? &out.trace : nullptr);
    out.deriv = detail::eliminate_rec(d, e);
    return out;
}

inline Deriv eliminate(const Deriv& d) { return eliminate_all(d).deriv; }

// A generalized cut: remove `copies` occurrences of `formula` at once.
struct CutSpec {
    Prop formula;
    size_t copies = 1;
};

inline EliminationResult eliminate_cut_plus(const Deriv& d1, const Deriv& d2,
                                            const CutSpec& spec, bool with_trace = true) {
    require_checked(d1);
    require_checked(d2);
    const Prop& x = spec.formula;
    const Sequent& a = d1->conclusion;
    const Sequent& b = d2->conclusion;
    auto fail = [](const std::string& m) { throw std::invalid_argument("cut+: " + m); };
    switch (mode_of(x)) {
        case Mode::L:
            if (spec.copies != 1) fail("a linear formula admits exactly one copy");
            if (a.kind != Judgment::Linear || b.kind != Judgment::Linear)
                fail("linear cut premises must be linear sequents");
            if (ctx_count(a.right, x) < 1 || ctx_count(b.left, x) < 1)
                fail("premises do not exhibit the cut formula");
            break;
        case Mode::P:
            if (a.kind != Judgment::Persistent) fail("first premise must be persistent");
            if (ctx_count(a.right, x) != 1)
                fail("first premise must conclude the producer once");
            if (ctx_count(b.left, x) < spec.copies)
                fail("second premise lacks the requested copies");
            break;
        case Mode::C:
            if (b.kind != Judgment::Persistent) fail("second premise must be persistent");
            if (ctx_count(b.left, x) != 1)
                fail("second premise must consume the consumer once");
            if (ctx_count(a.right, x) < spec.copies)
                fail("first premise lacks the requested copies");
            break;
    }
    EliminationResult out;
    detail::Eliminator e(with_trace ? &out.trace : nullptr);
    Deriv p1 = detail::eliminate_rec(d1, e);
    Deriv p2 = detail::eliminate_rec(d2, e);
    out.deriv = e.cut(x, spec.copies, p1, p2, -1);
    return out;
}

} // namespace lpc
