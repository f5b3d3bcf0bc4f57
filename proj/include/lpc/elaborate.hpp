#pragma once

#include "lpc/dual_axioms.hpp"

namespace lpc {

// Duality admissibility, executably: given a derivation whose conclusion
// carries an occurrence of x on one side, produce a derivation of the sequent
// with that occurrence removed and dual(x) inserted on the other side. The
// input is made cut-free first; the output is cut-free.
//
// The transport is a single recursion on (size of x, size of the derivation).
// When the root introduces the tracked occurrence, the dual introduction on
// the other side is reconstructed from the transported premises - each
// connective's left and right rules are exact mirrors, so this is uniform:
// with becomes plus, tensor becomes par, the adjunction rules swap F! with F?
// and G! with G?, weakening and contraction dualize to their opposite-side
// forms, and an axiom becomes the closed duality witness from
// dual_axioms.hpp. Every other root commutes past the transport.
//
// Structural rules force the same bookkeeping as in cut elimination: moving
// an occurrence through a contraction means moving n occurrences at once, so
// the worker tracks a count (the public entry point moves one). Counts above
// one only ever arise for producers on the left and consumers on the right,
// the two contractible positions.
//
// Like cut elimination this is not total: a producer or consumer met at a
// *linear* axiom leaf needs the linear cancellation sequent, whose only
// derivations promote through gbang-r / gwhy-l - the same hole, surfaced as
// the same cut_gap_error.

namespace detail {

// The conclusion of the transport: n occurrences of x leave `from`, n duals
// join the other side.
inline Sequent moved_sequent(const Sequent& s, Side from, const Prop& x, size_t n) {
    Sequent out = s;
    Context& src = from == Side::Left ? out.left : out.right;
    Context& dst = from == Side::Left ? out.right : out.left;
    auto rest = ctx_subtract(src, Context(n, x));
    if (!rest) throw std::logic_error("move: occurrences missing from the sequent");
    src = *rest;
    Prop dx = dual(x);
    for (size_t i = 0; i < n; ++i) ctx_insert(dst, dx);
    return out;
}

inline Deriv move_dual(const Deriv& d, Side from, const Prop& x, size_t n);

inline Deriv move_principal(const Deriv& d, Side from, const Prop& x, size_t n) {
    const std::vector<Deriv>& ps = d->premises;
    switch (d->rule) {
        // Axiom leaves become closed duality witnesses. For a persistent
        // formula the linear cancellation sequent only exists through the
        // persistent witness replayed at the linear judgment, which is where
        // the gap can surface.
        case RuleId::Ax:
            switch (mode_of(x)) {
                case Mode::L:
                    return from == Side::Right ? lin_dual_left(x) : lin_dual_right(x);
                case Mode::P:
                    return from == Side::Left ? demote_right(prod_dual_right(x))
                                              : demote_left(prod_dual_left(x));
                case Mode::C:
                    return from == Side::Right ? demote_left(prod_dual_left(dual(x)))
                                               : demote_right(prod_dual_right(dual(x)));
            }
            throw std::logic_error("move: bad mode");
        case RuleId::AxP:
            return from == Side::Left ? prod_dual_right(x) : prod_dual_left(x);
        case RuleId::AxC:
            return from == Side::Right ? prod_dual_left(dual(x)) : prod_dual_right(dual(x));

        // Inert constants flip into their dual leaf at the moved sequent.
        case RuleId::TopR: {
            Sequent s = moved_sequent(d->conclusion, from, x, n);
            return build::zero_l(std::move(s.left), std::move(s.right));
        }
        case RuleId::ZeroL: {
            Sequent s = moved_sequent(d->conclusion, from, x, n);
            return build::top_r(std::move(s.left), std::move(s.right));
        }

        // Units.
        case RuleId::OneR: return build::bot_l(dual(x));
        case RuleId::OnePR: return build::bot_c_l();
        case RuleId::BotL: return build::one_r(dual(x));
        case RuleId::BotCL: return build::one_p_r();
        case RuleId::OneL:
        case RuleId::OnePL:
            return build::bot_r(dual(x), move_dual(ps[0], from, x, n - 1));
        case RuleId::BotR:
        case RuleId::BotCR:
            return build::one_l(dual(x), move_dual(ps[0], from, x, n - 1));

        // Additives.
        case RuleId::WithR:
            return build::plus_l(dual(x), move_dual(ps[0], Side::Right, x->a, 1),
                                 move_dual(ps[1], Side::Right, x->b, 1));
        case RuleId::PlusL:
            return build::with_r(dual(x), move_dual(ps[0], Side::Left, x->a, 1),
                                 move_dual(ps[1], Side::Left, x->b, 1));
        case RuleId::WithL1:
            return build::plus_r(1, dual(x), move_dual(ps[0], Side::Left, x->a, 1));
        case RuleId::WithL2:
            return build::plus_r(2, dual(x), move_dual(ps[0], Side::Left, x->b, 1));
        case RuleId::PlusR1:
            return build::with_l(1, dual(x), move_dual(ps[0], Side::Right, x->a, 1));
        case RuleId::PlusR2:
            return build::with_l(2, dual(x), move_dual(ps[0], Side::Right, x->b, 1));

        // Multiplicatives. The unary ones first move any remaining copies of
        // x itself out of the premise, then the two components.
        case RuleId::TensorR:
        case RuleId::TensorPR:
            return build::par_l(dual(x), move_dual(ps[0], Side::Right, x->a, 1),
                                move_dual(ps[1], Side::Right, x->b, 1));
        case RuleId::ParL:
        case RuleId::ParCL:
            return build::tensor_r(dual(x), move_dual(ps[0], Side::Left, x->a, 1),
                                   move_dual(ps[1], Side::Left, x->b, 1));
        case RuleId::TensorL:
        case RuleId::TensorPL: {
            Deriv e = move_dual(ps[0], from, x, n - 1);
            e = move_dual(e, Side::Left, x->a, 1);
            e = move_dual(e, Side::Left, x->b, 1);
            return build::par_r(dual(x), std::move(e));
        }
        case RuleId::ParR:
        case RuleId::ParCR: {
            Deriv e = move_dual(ps[0], from, x, n - 1);
            e = move_dual(e, Side::Right, x->a, 1);
            e = move_dual(e, Side::Right, x->b, 1);
            return build::tensor_l(dual(x), std::move(e));
        }

        // Adjunction rules pair off: F! with F?, G! with G?. The transported
        // operand switches the recursion to the other judgment or mode, and
        // the paired rule lands exactly on the dual.
        case RuleId::FBangL:
            return build::fwhy_r(dual(x), move_dual(ps[0], Side::Left, x->a, 1));
        case RuleId::FBangR:
            return build::fwhy_l(dual(x), move_dual(ps[0], Side::Right, x->a, 1));
        case RuleId::FWhyL:
            return build::fbang_r(dual(x), move_dual(ps[0], Side::Left, x->a, 1));
        case RuleId::FWhyR:
            return build::fbang_l(dual(x), move_dual(ps[0], Side::Right, x->a, 1));
        case RuleId::GBangR:
            return build::gwhy_l(dual(x), move_dual(ps[0], Side::Right, x->a, 1));
        case RuleId::GWhyL:
            return build::gbang_r(dual(x), move_dual(ps[0], Side::Left, x->a, 1));
        case RuleId::GBangL: {
            Deriv e = move_dual(ps[0], from, x, n - 1);
            e = move_dual(e, Side::Left, x->a, 1);
            return build::gwhy_r(dual(x), std::move(e));
        }
        case RuleId::GWhyR: {
            Deriv e = move_dual(ps[0], from, x, n - 1);
            e = move_dual(e, Side::Right, x->a, 1);
            return build::gbang_l(dual(x), std::move(e));
        }

        // Structural rules dualize to the opposite side, adjusting the count.
        case RuleId::WeakL:
        case RuleId::WeakPL:
            return build::weak_r(dual(x), move_dual(ps[0], from, x, n - 1));
        case RuleId::WeakR:
        case RuleId::WeakPR:
            return build::weak_l(dual(x), move_dual(ps[0], from, x, n - 1));
        case RuleId::ContrL:
        case RuleId::ContrPL:
            return build::contr_r(dual(x), move_dual(ps[0], from, x, n + 1));
        case RuleId::ContrR:
        case RuleId::ContrPR:
            return build::contr_l(dual(x), move_dual(ps[0], from, x, n + 1));

        default:
            throw std::logic_error(std::string("move: principal ") + rule_name(d->rule));
    }
}

inline Deriv move_commute(const Deriv& d, Side from, const Prop& x, size_t n) {
    const std::vector<Deriv>& ps = d->premises;
    if (d->rule == RuleId::TopR || d->rule == RuleId::ZeroL) {
        Sequent s = moved_sequent(d->conclusion, from, x, n);
        return d->rule == RuleId::TopR
                   ? build::top_r(std::move(s.left), std::move(s.right))
                   : build::zero_l(std::move(s.left), std::move(s.right));
    }
    if (ps.empty()) throw std::logic_error("move: occurrence not present at a leaf");

    if (ps.size() == 1)
        return reapply_unary(d->rule, principal_value(d), move_dual(ps[0], from, x, n));

    const Prop& y = principal_value(d);
    if (d->rule == RuleId::WithR || d->rule == RuleId::PlusL) {
        // Additive premises share their context, so both carry all n copies.
        Deriv e0 = move_dual(ps[0], from, x, n);
        Deriv e1 = move_dual(ps[1], from, x, n);
        return d->rule == RuleId::WithR ? build::with_r(y, std::move(e0), std::move(e1))
                                        : build::plus_l(y, std::move(e0), std::move(e1));
    }

    // Multiplicative splits: the copies are distributed as the context split
    // left them; a premise's freshly introduced component is not one of them.
    const bool comps_left = d->rule == RuleId::ParL || d->rule == RuleId::ParCL;
    size_t avail[2];
    for (int i = 0; i < 2; ++i) {
        const Sequent& c = ps[static_cast<size_t>(i)]->conclusion;
        const Context& ctx = from == Side::Left ? c.left : c.right;
        size_t a = ctx_count(ctx, x);
        if (comps_left == (from == Side::Left) && prop_eq(i == 0 ? y->a : y->b, x)) --a;
        avail[i] = a;
    }
    size_t n0 = std::min(n, avail[0]);
    size_t n1 = n - n0;
    if (n1 > avail[1])
        throw std::logic_error("move: occurrences exceed the premise split");
    Deriv e0 = n0 > 0 ? move_dual(ps[0], from, x, n0) : ps[0];
    Deriv e1 = n1 > 0 ? move_dual(ps[1], from, x, n1) : ps[1];
    switch (d->rule) {
        case RuleId::TensorR:
        case RuleId::TensorPR: return build::tensor_r(y, std::move(e0), std::move(e1));
        case RuleId::ParL:
        case RuleId::ParCL: return build::par_l(y, std::move(e0), std::move(e1));
        default:
            throw std::logic_error(std::string("move: commute ") + rule_name(d->rule));
    }
}

inline Deriv move_dual(const Deriv& d, Side from, const Prop& x, size_t n) {
    if (n == 0) return d;
    if (root_introduces(d, from, x)) return move_principal(d, from, x, n);
    return move_commute(d, from, x, n);
}

} // namespace detail

// The sequent elaborate_dual derives from a derivation of s.
inline Sequent elaborated_conclusion(const Sequent& s, Side from, const Prop& x) {
    return detail::moved_sequent(s, from, x, 1);
}

inline Deriv elaborate_dual(const Deriv& d, Side from, const Prop& x) {
    require_checked(d);
    const Context& ctx = from == Side::Left ? d->conclusion.left : d->conclusion.right;
    if (ctx_count(ctx, x) == 0)
        throw std::invalid_argument("elaborate_dual: " + print_prop(x) +
                                    " does not occur on that side");
    return detail::move_dual(eliminate(d), from, x, 1);
}

inline Deriv elaborate_dual(const Deriv& d, const Occurrence& o) {
    return elaborate_dual(d, o.side, detail::occ_prop(d->conclusion, o));
}

} // namespace lpc
