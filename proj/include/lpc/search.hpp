#pragma once

#include <cstdint>

#include "lpc/build.hpp"
#include "lpc/check.hpp"

namespace lpc {

// Bounded backtracking proof search over the cut-free rules.
//
// Rule applications are tried in a fixed order, so the result is fully
// deterministic for a given goal and budget. Failure never refutes the goal;
// it only means the budget ran out. max_depth bounds rule applications along
// any branch, contractions bounds contraction steps per branch, max_nodes
// bounds the total number of goals expanded across the whole search.
struct SearchBudget {
    size_t max_depth = 8;
    size_t contractions = 0;
    size_t max_nodes = 200000;
};

struct SearchOutcome {
    Deriv deriv;             // null when no derivation was found
    size_t nodes = 0;        // goals expanded
    bool node_limit = false; // true when max_nodes (or a huge split) stopped us
    explicit operator bool() const { return deriv != nullptr; }
};

namespace detail {

class Searcher {
public:
    explicit Searcher(const SearchBudget& b) : budget_(b) {}

    // Attempt order: closing leaves; invertible unaries; additive pairs;
    // the judgment-crossing unaries; context splits; left/right choices;
    // the lossy counit steps; weakening; contraction. Order affects which
    // derivation is found first, never whether one is found: nothing is
    // pruned, every rule is retried at every position on backtracking.
    Deriv prove(const Sequent& g, size_t depth, size_t contr) {
        if (aborted_) return nullptr;
        if (++nodes_ > budget_.max_nodes) {
            aborted_ = true;
            return nullptr;
        }
        if (depth == 0) return nullptr;
        // Derivable persistent sequents have exactly one displaced
        // proposition, so goals violating that are dead ends.
        if (g.kind == Judgment::Persistent && displaced(g).size() != 1) return nullptr;
        if (Deriv d = close(g)) return d;
        if (depth == 1) return nullptr;
        const size_t sub = depth - 1;
        const bool lin = g.kind == Judgment::Linear;

        // Invertible unaries, left then right.
        for (size_t i = 0; i < g.left.size(); ++i) {
            if (i > 0 && prop_eq(g.left[i], g.left[i - 1])) continue;
            const Prop& x = g.left[i];
            switch (x->tag) {
                case PropTag::TensorL:
                case PropTag::TensorP: {
                    Sequent p{g.kind, ctx_without_index(g.left, i), g.right};
                    ctx_insert(p.left, x->a);
                    ctx_insert(p.left, x->b);
                    if (Deriv d = prove(p, sub, contr)) return build::tensor_l(x, d);
                    break;
                }
                case PropTag::OneL:
                case PropTag::OneP: {
                    Sequent p{g.kind, ctx_without_index(g.left, i), g.right};
                    if (Deriv d = prove(p, sub, contr)) return build::one_l(x, d);
                    break;
                }
                case PropTag::FBang: {
                    Sequent p{Judgment::Linear, ctx_without_index(g.left, i), g.right};
                    ctx_insert(p.left, x->a);
                    if (Deriv d = prove(p, sub, contr)) return build::fbang_l(x, d);
                    break;
                }
                default:
                    break;
            }
        }
        for (size_t i = 0; i < g.right.size(); ++i) {
            if (i > 0 && prop_eq(g.right[i], g.right[i - 1])) continue;
            const Prop& x = g.right[i];
            switch (x->tag) {
                case PropTag::ParL:
                case PropTag::ParC: {
                    Sequent p{g.kind, g.left, ctx_without_index(g.right, i)};
                    ctx_insert(p.right, x->a);
                    ctx_insert(p.right, x->b);
                    if (Deriv d = prove(p, sub, contr)) return build::par_r(x, d);
                    break;
                }
                case PropTag::BotL:
                case PropTag::BotC: {
                    Sequent p{g.kind, g.left, ctx_without_index(g.right, i)};
                    if (Deriv d = prove(p, sub, contr)) return build::bot_r(x, d);
                    break;
                }
                case PropTag::FWhy: {
                    Sequent p{Judgment::Linear, g.left, ctx_without_index(g.right, i)};
                    ctx_insert(p.right, x->a);
                    if (Deriv d = prove(p, sub, contr)) return build::fwhy_r(x, d);
                    break;
                }
                default:
                    break;
            }
        }

        // Additive pairs.
        for (size_t i = 0; i < g.left.size(); ++i) {
            if (i > 0 && prop_eq(g.left[i], g.left[i - 1])) continue;
            const Prop& x = g.left[i];
            if (x->tag != PropTag::Plus) continue;
            Sequent pa{g.kind, ctx_without_index(g.left, i), g.right};
            Sequent pb = pa;
            ctx_insert(pa.left, x->a);
            ctx_insert(pb.left, x->b);
            if (Deriv da = prove(pa, sub, contr))
                if (Deriv db = prove(pb, sub, contr)) return build::plus_l(x, da, db);
        }
        for (size_t i = 0; i < g.right.size(); ++i) {
            if (i > 0 && prop_eq(g.right[i], g.right[i - 1])) continue;
            const Prop& x = g.right[i];
            if (x->tag != PropTag::With) continue;
            Sequent pa{g.kind, g.left, ctx_without_index(g.right, i)};
            Sequent pb = pa;
            ctx_insert(pa.right, x->a);
            ctx_insert(pb.right, x->b);
            if (Deriv da = prove(pa, sub, contr))
                if (Deriv db = prove(pb, sub, contr)) return build::with_r(x, da, db);
        }

        // Judgment-crossing unaries.
        if (lin) {
            for (size_t i = 0; i < g.right.size(); ++i) {
                if (i > 0 && prop_eq(g.right[i], g.right[i - 1])) continue;
                const Prop& x = g.right[i];
                if (x->tag != PropTag::FBang) continue;
                Context rest = ctx_without_index(g.right, i);
                if (!all_producer(g.left) || !all_consumer(rest)) continue;
                Sequent p{Judgment::Persistent, g.left, std::move(rest)};
                ctx_insert(p.right, x->a);
                if (Deriv d = prove(p, sub, contr)) return build::fbang_r(x, d);
            }
            for (size_t i = 0; i < g.left.size(); ++i) {
                if (i > 0 && prop_eq(g.left[i], g.left[i - 1])) continue;
                const Prop& x = g.left[i];
                if (x->tag != PropTag::FWhy) continue;
                Context rest = ctx_without_index(g.left, i);
                if (!all_producer(rest) || !all_consumer(g.right)) continue;
                Sequent p{Judgment::Persistent, std::move(rest), g.right};
                ctx_insert(p.left, x->a);
                if (Deriv d = prove(p, sub, contr)) return build::fwhy_l(x, d);
            }
        } else {
            for (size_t i = 0; i < g.right.size(); ++i) {
                if (i > 0 && prop_eq(g.right[i], g.right[i - 1])) continue;
                const Prop& x = g.right[i];
                if (x->tag != PropTag::GBang) continue;
                Context rest = ctx_without_index(g.right, i);
                if (!all_producer(g.left) || !all_consumer(rest)) continue;
                Sequent p{Judgment::Linear, g.left, std::move(rest)};
                ctx_insert(p.right, x->a);
                if (Deriv d = prove(p, sub, contr)) return build::gbang_r(x, d);
            }
            for (size_t i = 0; i < g.left.size(); ++i) {
                if (i > 0 && prop_eq(g.left[i], g.left[i - 1])) continue;
                const Prop& x = g.left[i];
                if (x->tag != PropTag::GWhy) continue;
                Context rest = ctx_without_index(g.left, i);
                if (!all_producer(rest) || !all_consumer(g.right)) continue;
                Sequent p{Judgment::Linear, std::move(rest), g.right};
                ctx_insert(p.left, x->a);
                if (Deriv d = prove(p, sub, contr)) return build::gwhy_l(x, d);
            }
        }

        // Context splits. Subsequences of a sorted context stay sorted, so
        // the partitions are assembled by simple appends.
        for (size_t i = 0; i < g.right.size(); ++i) {
            if (i > 0 && prop_eq(g.right[i], g.right[i - 1])) continue;
            const Prop& x = g.right[i];
            if (x->tag != PropTag::TensorL && x->tag != PropTag::TensorP) continue;
            Context rest = ctx_without_index(g.right, i);
            if (Deriv d = split(g, x, g.left, rest, Side::Right, sub, contr)) return d;
        }
        for (size_t i = 0; i < g.left.size(); ++i) {
            if (i > 0 && prop_eq(g.left[i], g.left[i - 1])) continue;
            const Prop& x = g.left[i];
            if (x->tag != PropTag::ParL && x->tag != PropTag::ParC) continue;
            Context rest = ctx_without_index(g.left, i);
            if (Deriv d = split(g, x, rest, g.right, Side::Left, sub, contr)) return d;
        }

        // Choices.
        for (size_t i = 0; i < g.left.size(); ++i) {
            if (i > 0 && prop_eq(g.left[i], g.left[i - 1])) continue;
            const Prop& x = g.left[i];
            if (x->tag != PropTag::With) continue;
            for (int k = 1; k <= 2; ++k) {
                Sequent p{g.kind, ctx_without_index(g.left, i), g.right};
                ctx_insert(p.left, k == 1 ? x->a : x->b);
                if (Deriv d = prove(p, sub, contr)) return build::with_l(k, x, d);
            }
        }
        for (size_t i = 0; i < g.right.size(); ++i) {
            if (i > 0 && prop_eq(g.right[i], g.right[i - 1])) continue;
            const Prop& x = g.right[i];
            if (x->tag != PropTag::Plus) continue;
            for (int k = 1; k <= 2; ++k) {
                Sequent p{g.kind, g.left, ctx_without_index(g.right, i)};
                ctx_insert(p.right, k == 1 ? x->a : x->b);
                if (Deriv d = prove(p, sub, contr)) return build::plus_r(k, x, d);
            }
        }

        // Lossy counit steps, last among the logical rules.
        if (lin) {
            for (size_t i = 0; i < g.left.size(); ++i) {
                if (i > 0 && prop_eq(g.left[i], g.left[i - 1])) continue;
                const Prop& x = g.left[i];
                if (x->tag != PropTag::GBang) continue;
                Sequent p{Judgment::Linear, ctx_without_index(g.left, i), g.right};
                ctx_insert(p.left, x->a);
                if (Deriv d = prove(p, sub, contr)) return build::gbang_l(x, d);
            }
            for (size_t i = 0; i < g.right.size(); ++i) {
                if (i > 0 && prop_eq(g.right[i], g.right[i - 1])) continue;
                const Prop& x = g.right[i];
                if (x->tag != PropTag::GWhy) continue;
                Sequent p{Judgment::Linear, g.left, ctx_without_index(g.right, i)};
                ctx_insert(p.right, x->a);
                if (Deriv d = prove(p, sub, contr)) return build::gwhy_r(x, d);
            }
        }

        // Weakening.
        for (size_t i = 0; i < g.left.size(); ++i) {
            if (i > 0 && prop_eq(g.left[i], g.left[i - 1])) continue;
            if (mode_of(g.left[i]) != Mode::P) continue;
            Sequent p{g.kind, ctx_without_index(g.left, i), g.right};
            if (Deriv d = prove(p, sub, contr)) return build::weak_l(g.left[i], d);
        }
        for (size_t i = 0; i < g.right.size(); ++i) {
            if (i > 0 && prop_eq(g.right[i], g.right[i - 1])) continue;
            if (mode_of(g.right[i]) != Mode::C) continue;
            Sequent p{g.kind, g.left, ctx_without_index(g.right, i)};
            if (Deriv d = prove(p, sub, contr)) return build::weak_r(g.right[i], d);
        }

        // Contraction, gated per branch.
        if (contr > 0) {
            for (size_t i = 0; i < g.left.size(); ++i) {
                if (i > 0 && prop_eq(g.left[i], g.left[i - 1])) continue;
                if (mode_of(g.left[i]) != Mode::P) continue;
                Sequent p{g.kind, ctx_with(g.left, g.left[i]), g.right};
                if (Deriv d = prove(p, sub, contr - 1)) return build::contr_l(g.left[i], d);
            }
            for (size_t i = 0; i < g.right.size(); ++i) {
                if (i > 0 && prop_eq(g.right[i], g.right[i - 1])) continue;
                if (mode_of(g.right[i]) != Mode::C) continue;
                Sequent p{g.kind, g.left, ctx_with(g.right, g.right[i])};
                if (Deriv d = prove(p, sub, contr - 1)) return build::contr_r(g.right[i], d);
            }
        }
        return nullptr;
    }

    size_t nodes() const { return nodes_; }
    bool aborted() const { return aborted_; }

private:
    Deriv close(const Sequent& g) {
        const bool lin = g.kind == Judgment::Linear;
        if (g.left.size() == 1 && g.right.size() == 1 && prop_eq(g.left[0], g.right[0])) {
            if (lin) return build::ax(g.left[0]);
            return mode_of(g.left[0]) == Mode::P ? build::ax_p(g.left[0])
                                                 : build::ax_c(g.left[0]);
        }
        if (lin && g.left.empty() && g.right.size() == 1 &&
            (g.right[0]->tag == PropTag::OneL || g.right[0]->tag == PropTag::OneP))
            return build::one_r(g.right[0]);
        if (lin && g.right.empty() && g.left.size() == 1 &&
            (g.left[0]->tag == PropTag::BotL || g.left[0]->tag == PropTag::BotC))
            return build::bot_l(g.left[0]);
        if (!lin && g.left.empty() && g.right.size() == 1 &&
            g.right[0]->tag == PropTag::OneP)
            return build::one_p_r();
        if (!lin && g.right.empty() && g.left.size() == 1 &&
            g.left[0]->tag == PropTag::BotC)
            return build::bot_c_l();
        if (lin && ctx_find(g.right, top())) return build::top_r(g.left, g.right);
        if (lin && ctx_find(g.left, zero())) return build::zero_l(g.left, g.right);
        return nullptr;
    }

    // Two-premise split for a tensor on the right / par on the left. la/ra are
    // the contexts to distribute (the principal already removed); the first
    // premise also receives component a on `comp_side`, the second component b.
    Deriv split(const Sequent& g, const Prop& x, const Context& la, const Context& ra,
                Side comp_side, size_t sub, size_t contr) {
        const size_t nl = la.size(), nr = ra.size();
        if (nl + nr > 24) { // a split this wide will not fit any sane budget
            aborted_ = true;
            return nullptr;
        }
        for (uint64_t ml = 0; ml < (uint64_t{1} << nl); ++ml) {
            for (uint64_t mr = 0; mr < (uint64_t{1} << nr); ++mr) {
                if (aborted_) return nullptr;
                Sequent p0{g.kind, {}, {}}, p1{g.kind, {}, {}};
                for (size_t j = 0; j < nl; ++j)
                    ((ml >> j) & 1 ? p0 : p1).left.push_back(la[j]);
                for (size_t j = 0; j < nr; ++j)
                    ((mr >> j) & 1 ? p0 : p1).right.push_back(ra[j]);
                if (comp_side == Side::Right) {
                    ctx_insert(p0.right, x->a);
                    ctx_insert(p1.right, x->b);
                } else {
                    ctx_insert(p0.left, x->a);
                    ctx_insert(p1.left, x->b);
                }
                Deriv d0 = prove(p0, sub, contr);
                if (!d0) continue;
                Deriv d1 = prove(p1, sub, contr);
                if (!d1) continue;
                return comp_side == Side::Right ? build::tensor_r(x, d0, d1)
                                                : build::par_l(x, d0, d1);
            }
        }
        return nullptr;
    }

    SearchBudget budget_;
    size_t nodes_ = 0;
    bool aborted_ = false;
};

} // namespace detail

inline SearchOutcome search(const Sequent& goal, const SearchBudget& budget = {}) {
    detail::Searcher s(budget);
    SearchOutcome out;
    out.deriv = s.prove(goal, budget.max_depth, budget.contractions);
    out.nodes = s.nodes();
    out.node_limit = s.aborted();
    return out;
}

// Every goal with at most two propositions drawn from the propositions of
// size <= max_prop_size, searched under the given budget; returns the goals a
// derivation was found for, in enumeration order. Deterministic, so the
// result (and in particular its cardinality) is a stable regression value.
struct ProvableEntry {
    Sequent goal;
    Deriv deriv;
};

inline std::vector<ProvableEntry> enumerate_provable(uint32_t max_prop_size,
                                                     const SearchBudget& budget) {
    std::vector<Prop> props = enumerate_props_by_size(max_prop_size);
    std::vector<Prop> pers;
    for (const auto& p : props)
        if (is_persistent(p)) pers.push_back(p);

    std::vector<Sequent> goals;
    auto add_shapes = [&](Judgment k, const std::vector<Prop>& u) {
        for (const auto& p : u) goals.push_back({k, make_ctx({p}), {}});
        for (const auto& p : u) goals.push_back({k, {}, make_ctx({p})});
        for (size_t i = 0; i < u.size(); ++i)
            for (size_t j = i; j < u.size(); ++j)
                goals.push_back({k, make_ctx({u[i], u[j]}), {}});
        for (const auto& p : u)
            for (const auto& q : u)
                goals.push_back({k, make_ctx({p}), make_ctx({q})});
        for (size_t i = 0; i < u.size(); ++i)
            for (size_t j = i; j < u.size(); ++j)
                goals.push_back({k, {}, make_ctx({u[i], u[j]})});
    };
    add_shapes(Judgment::Linear, props);
    add_shapes(Judgment::Persistent, pers);

    std::vector<ProvableEntry> out;
    for (const auto& g : goals) {
        SearchOutcome r = search(g, budget);
        if (r.deriv) out.push_back({g, r.deriv});
    }
    return out;
}

} // namespace lpc
