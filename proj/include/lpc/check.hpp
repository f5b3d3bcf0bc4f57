#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "lpc/derivation.hpp"

namespace lpc {

// Why a derivation was rejected. The first failing node (root-first,
// premises left to right) determines the report.
enum class CheckCause {
    None,
    Arity,              // wrong number of premises / principal entries
    JudgmentKind,       // |- vs ||- mismatch on conclusion or premise
    ModeRestriction,    // mode side condition violated
    PrincipalMismatch,  // principal occurrence absent or of the wrong shape
    ContextMismatch,    // premise contexts do not match the rule scheme
    CutForbidden,       // cut node under a no-cut policy
};

inline const char* cause_name(CheckCause c) {
    switch (c) {
        case CheckCause::None: return "ok";
        case CheckCause::Arity: return "arity";
        case CheckCause::JudgmentKind: return "judgment-kind";
        case CheckCause::ModeRestriction: return "mode-restriction";
        case CheckCause::PrincipalMismatch: return "principal-mismatch";
        case CheckCause::ContextMismatch: return "context-mismatch";
        case CheckCause::CutForbidden: return "cut-forbidden";
    }
    return "?";
}

struct CheckReport {
    bool ok = true;
    CheckCause cause = CheckCause::None;
    std::vector<size_t> path;  // premise indices from the root to the failing node
    std::string message;

    std::string path_string() const {
        std::string s = "root";
        for (size_t i : path) {
            s += '.';
            s += std::to_string(i);
        }
        return s;
    }
};

struct CheckPolicy {
    bool allow_cut = true;
};

namespace detail {

class Checker {
public:
    explicit Checker(CheckPolicy p) : policy_(p) {}

    CheckReport run(const Deriv& d) {
        report_ = CheckReport{};
        path_.clear();
        visit(d);
        return report_;
    }

private:
    CheckPolicy policy_;
    CheckReport report_;
    std::vector<size_t> path_;

    bool fail(CheckCause cause, const std::string& msg) {
        if (report_.ok) {
            report_.ok = false;
            report_.cause = cause;
            report_.path = path_;
            report_.message = msg;
        }
        return false;
    }

    void visit(const Deriv& d) {
        if (!report_.ok) return;
        if (!node(d)) return;
        for (size_t i = 0; i < d->premises.size(); ++i) {
            path_.push_back(i);
            visit(d->premises[i]);
            path_.pop_back();
            if (!report_.ok) return;
        }
    }

    // --- helpers --------------------------------------------------------

    static std::string seq_str(const Sequent& s) { return print_sequent(s); }

    bool expect_kind(const Sequent& s, Judgment k, const char* what) {
        if (s.kind != k)
            return fail(CheckCause::JudgmentKind,
                        std::string(what) + " must be a " +
                            (k == Judgment::Linear ? "linear" : "persistent") + " sequent");
        return true;
    }

    bool expect_premise(const Deriv& d, size_t i, const Sequent& want) {
        const Sequent& got = d->premises[i]->conclusion;
        if (got.kind != want.kind)
            return fail(CheckCause::JudgmentKind,
                        "premise " + std::to_string(i) + " has the wrong judgment");
        if (!ctx_eq(got.left, want.left) || !ctx_eq(got.right, want.right))
            return fail(CheckCause::ContextMismatch,
                        "premise " + std::to_string(i) + " should conclude " + seq_str(want) +
                            " but concludes " + seq_str(got));
        return true;
    }

    const Context& side_ctx(const Sequent& s, Side sd) {
        return sd == Side::Left ? s.left : s.right;
    }

    // Validate the recorded principal occurrence and return its proposition.
    Prop principal_prop(const Deriv& d, Side want_side, bool* ok) {
        *ok = false;
        const Occurrence& o = d->principal[0];
        if (o.side != want_side) {
            fail(CheckCause::PrincipalMismatch,
                 std::string("principal occurrence must be on the ") +
                     (want_side == Side::Left ? "left" : "right"));
            return nullptr;
        }
        const Context& c = side_ctx(d->conclusion, o.side);
        if (o.index >= c.size()) {
            fail(CheckCause::PrincipalMismatch, "principal index out of range");
            return nullptr;
        }
        *ok = true;
        return c[o.index];
    }

    bool expect_tag(const Prop& p, std::initializer_list<PropTag> tags, const char* rule) {
        for (PropTag t : tags)
            if (p->tag == t) return true;
        return fail(CheckCause::PrincipalMismatch,
                    std::string(rule) + ": principal proposition " + print_prop(p) +
                        " has the wrong shape");
    }

    Sequent drop_principal(const Deriv& d) {
        const Occurrence& o = d->principal[0];
        Sequent s = d->conclusion;
        if (o.side == Side::Left)
            s.left = ctx_without_index(s.left, o.index);
        else
            s.right = ctx_without_index(s.right, o.index);
        return s;
    }

    // --- node dispatch -----------------------------------------------------

    bool node(const Deriv& d) {
        const Sequent& s = d->conclusion;
        if (!sequent_modes_ok(s))
            return fail(CheckCause::ModeRestriction,
                        "persistent sequent contains a linear proposition: " + seq_str(s));
        if (d->premises.size() != rule_arity(d->rule))
            return fail(CheckCause::Arity,
                        std::string(rule_name(d->rule)) + " takes " +
                            std::to_string(rule_arity(d->rule)) + " premise(s), got " +
                            std::to_string(d->premises.size()));
        if (d->principal.size() != rule_principal_count(d->rule))
            return fail(CheckCause::Arity,
                        std::string(rule_name(d->rule)) + " records " +
                            std::to_string(rule_principal_count(d->rule)) +
                            " principal occurrence(s)");
        if (s.kind != rule_conclusion_kind(d->rule))
            return fail(CheckCause::JudgmentKind,
                        std::string(rule_name(d->rule)) + " concludes a " +
                            (rule_conclusion_kind(d->rule) == Judgment::Linear ? "linear"
                                                                               : "persistent") +
                            " sequent");

        switch (d->rule) {
            case RuleId::Ax: {
                if (s.left.size() != 1 || s.right.size() != 1 ||
                    !prop_eq(s.left[0], s.right[0]))
                    return fail(CheckCause::ContextMismatch,
                                "axiom must conclude X |- X, got " + seq_str(s));
                return true;
            }
            case RuleId::AxP:
            case RuleId::AxC: {
                Mode want = d->rule == RuleId::AxP ? Mode::P : Mode::C;
                if (s.left.size() != 1 || s.right.size() != 1 ||
                    !prop_eq(s.left[0], s.right[0]))
                    return fail(CheckCause::ContextMismatch,
                                "persistent axiom must conclude X ||- X, got " + seq_str(s));
                if (mode_of(s.left[0]) != want)
                    return fail(CheckCause::ModeRestriction,
                                std::string(rule_name(d->rule)) + " wants a " +
                                    mode_name(want) + " proposition");
                return true;
            }
            case RuleId::TopR:
            case RuleId::ZeroL: {
                Side sd = d->rule == RuleId::TopR ? Side::Right : Side::Left;
                bool ok = false;
                Prop p = principal_prop(d, sd, &ok);
                if (!ok) return false;
                return expect_tag(p, {d->rule == RuleId::TopR ? PropTag::Top : PropTag::Zero},
                                  rule_name(d->rule));
            }
            case RuleId::OneR:
                if (!s.left.empty() || s.right.size() != 1)
                    return fail(CheckCause::ContextMismatch,
                                "one-r concludes exactly |- 1, got " + seq_str(s));
                if (s.right[0]->tag != PropTag::OneL && s.right[0]->tag != PropTag::OneP)
                    return fail(CheckCause::PrincipalMismatch,
                                "one-r proves a multiplicative unit");
                return true;
            case RuleId::BotL:
                if (s.left.size() != 1 || !s.right.empty())
                    return fail(CheckCause::ContextMismatch,
                                "bot-l concludes exactly B |-, got " + seq_str(s));
                if (s.left[0]->tag != PropTag::BotL && s.left[0]->tag != PropTag::BotC)
                    return fail(CheckCause::PrincipalMismatch,
                                "bot-l consumes a multiplicative falsity");
                return true;
            case RuleId::OnePR:
                if (!s.left.empty() || s.right.size() != 1 ||
                    s.right[0]->tag != PropTag::OneP)
                    return fail(CheckCause::ContextMismatch,
                                "one-p-r concludes exactly ||- 1p, got " + seq_str(s));
                return true;
            case RuleId::BotCL:
                if (s.left.size() != 1 || !s.right.empty() ||
                    s.left[0]->tag != PropTag::BotC)
                    return fail(CheckCause::ContextMismatch,
                                "bot-c-l concludes exactly Bc ||-, got " + seq_str(s));
                return true;

            case RuleId::WithL1:
            case RuleId::WithL2: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Left, &ok);
                if (!ok) return false;
                if (!expect_tag(p, {PropTag::With}, rule_name(d->rule))) return false;
                Sequent want = drop_principal(d);
                ctx_insert(want.left, d->rule == RuleId::WithL1 ? p->a : p->b);
                return expect_premise(d, 0, want);
            }
            case RuleId::WithR: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Right, &ok);
                if (!ok) return false;
                if (!expect_tag(p, {PropTag::With}, "with-r")) return false;
                Sequent base = drop_principal(d);
                Sequent w0 = base, w1 = base;
                ctx_insert(w0.right, p->a);
                ctx_insert(w1.right, p->b);
                return expect_premise(d, 0, w0) && expect_premise(d, 1, w1);
            }
            case RuleId::PlusR1:
            case RuleId::PlusR2: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Right, &ok);
                if (!ok) return false;
                if (!expect_tag(p, {PropTag::Plus}, rule_name(d->rule))) return false;
                Sequent want = drop_principal(d);
                ctx_insert(want.right, d->rule == RuleId::PlusR1 ? p->a : p->b);
                return expect_premise(d, 0, want);
            }
            case RuleId::PlusL: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Left, &ok);
                if (!ok) return false;
                if (!expect_tag(p, {PropTag::Plus}, "plus-l")) return false;
                Sequent base = drop_principal(d);
                Sequent w0 = base, w1 = base;
                ctx_insert(w0.left, p->a);
                ctx_insert(w1.left, p->b);
                return expect_premise(d, 0, w0) && expect_premise(d, 1, w1);
            }

            case RuleId::TensorL:
            case RuleId::TensorPL: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Left, &ok);
                if (!ok) return false;
                bool generic = d->rule == RuleId::TensorL;
                if (!expect_tag(p,
                                generic ? std::initializer_list<PropTag>{PropTag::TensorL,
                                                                         PropTag::TensorP}
                                        : std::initializer_list<PropTag>{PropTag::TensorP},
                                rule_name(d->rule)))
                    return false;
                Sequent want = drop_principal(d);
                ctx_insert(want.left, p->a);
                ctx_insert(want.left, p->b);
                return expect_premise(d, 0, want);
            }
            case RuleId::ParR:
            case RuleId::ParCR: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Right, &ok);
                if (!ok) return false;
                bool generic = d->rule == RuleId::ParR;
                if (!expect_tag(p,
                                generic ? std::initializer_list<PropTag>{PropTag::ParL,
                                                                         PropTag::ParC}
                                        : std::initializer_list<PropTag>{PropTag::ParC},
                                rule_name(d->rule)))
                    return false;
                Sequent want = drop_principal(d);
                ctx_insert(want.right, p->a);
                ctx_insert(want.right, p->b);
                return expect_premise(d, 0, want);
            }
            case RuleId::OneL:
            case RuleId::OnePL: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Left, &ok);
                if (!ok) return false;
                bool generic = d->rule == RuleId::OneL;
                if (!expect_tag(p,
                                generic ? std::initializer_list<PropTag>{PropTag::OneL,
                                                                         PropTag::OneP}
                                        : std::initializer_list<PropTag>{PropTag::OneP},
                                rule_name(d->rule)))
                    return false;
                return expect_premise(d, 0, drop_principal(d));
            }
            case RuleId::BotR:
            case RuleId::BotCR: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Right, &ok);
                if (!ok) return false;
                bool generic = d->rule == RuleId::BotR;
                if (!expect_tag(p,
                                generic ? std::initializer_list<PropTag>{PropTag::BotL,
                                                                         PropTag::BotC}
                                        : std::initializer_list<PropTag>{PropTag::BotC},
                                rule_name(d->rule)))
                    return false;
                return expect_premise(d, 0, drop_principal(d));
            }

            case RuleId::TensorR: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Right, &ok);
                if (!ok) return false;
                if (!expect_tag(p, {PropTag::TensorL, PropTag::TensorP}, "tensor-r"))
                    return false;
                return split_right(d, p);
            }
            case RuleId::TensorPR: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Right, &ok);
                if (!ok) return false;
                if (!expect_tag(p, {PropTag::TensorP}, "tensor-p-r")) return false;
                if (!split_right(d, p)) return false;
                // Each premise must be producers |- consumers beside its component.
                for (size_t i = 0; i < 2; ++i) {
                    const Sequent& ps = d->premises[i]->conclusion;
                    Prop comp = i == 0 ? p->a : p->b;
                    auto rest = ctx_subtract(ps.right, {comp});
                    if (!rest) return true;  // split_right already validated containment
                    if (!all_producer(ps.left) || !all_consumer(*rest))
                        return fail(CheckCause::ModeRestriction,
                                    "tensor-p-r premise " + std::to_string(i) +
                                        " must have a producer left and consumer right context");
                }
                return true;
            }
            case RuleId::ParL: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Left, &ok);
                if (!ok) return false;
                if (!expect_tag(p, {PropTag::ParL, PropTag::ParC}, "par-l")) return false;
                return split_left(d, p);
            }
            case RuleId::ParCL: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Left, &ok);
                if (!ok) return false;
                if (!expect_tag(p, {PropTag::ParC}, "par-c-l")) return false;
                if (!split_left(d, p)) return false;
                for (size_t i = 0; i < 2; ++i) {
                    const Sequent& ps = d->premises[i]->conclusion;
                    Prop comp = i == 0 ? p->a : p->b;
                    auto rest = ctx_subtract(ps.left, {comp});
                    if (!rest) return true;
                    if (!all_producer(*rest) || !all_consumer(ps.right))
                        return fail(CheckCause::ModeRestriction,
                                    "par-c-l premise " + std::to_string(i) +
                                        " must have a producer left and consumer right context");
                }
                return true;
            }

            case RuleId::FBangL:
            case RuleId::GBangL: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Left, &ok);
                if (!ok) return false;
                PropTag want = d->rule == RuleId::FBangL ? PropTag::FBang : PropTag::GBang;
                if (!expect_tag(p, {want}, rule_name(d->rule))) return false;
                Sequent prem = drop_principal(d);
                ctx_insert(prem.left, p->a);
                return expect_premise(d, 0, prem);
            }
            case RuleId::FWhyR:
            case RuleId::GWhyR: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Right, &ok);
                if (!ok) return false;
                PropTag want = d->rule == RuleId::FWhyR ? PropTag::FWhy : PropTag::GWhy;
                if (!expect_tag(p, {want}, rule_name(d->rule))) return false;
                Sequent prem = drop_principal(d);
                ctx_insert(prem.right, p->a);
                return expect_premise(d, 0, prem);
            }
            case RuleId::FBangR:
            case RuleId::GBangR: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Right, &ok);
                if (!ok) return false;
                PropTag want = d->rule == RuleId::FBangR ? PropTag::FBang : PropTag::GBang;
                if (!expect_tag(p, {want}, rule_name(d->rule))) return false;
                Sequent prem = drop_principal(d);
                if (!all_producer(prem.left) || !all_consumer(prem.right))
                    return fail(CheckCause::ModeRestriction,
                                std::string(rule_name(d->rule)) +
                                    " needs a producer left and consumer right context");
                ctx_insert(prem.right, p->a);
                prem.kind = d->rule == RuleId::FBangR ? Judgment::Persistent : Judgment::Linear;
                return expect_premise(d, 0, prem);
            }
            case RuleId::FWhyL:
            case RuleId::GWhyL: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Left, &ok);
                if (!ok) return false;
                PropTag want = d->rule == RuleId::FWhyL ? PropTag::FWhy : PropTag::GWhy;
                if (!expect_tag(p, {want}, rule_name(d->rule))) return false;
                Sequent prem = drop_principal(d);
                if (!all_producer(prem.left) || !all_consumer(prem.right))
                    return fail(CheckCause::ModeRestriction,
                                std::string(rule_name(d->rule)) +
                                    " needs a producer left and consumer right context");
                ctx_insert(prem.left, p->a);
                prem.kind = d->rule == RuleId::FWhyL ? Judgment::Persistent : Judgment::Linear;
                return expect_premise(d, 0, prem);
            }

            case RuleId::WeakL:
            case RuleId::WeakPL: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Left, &ok);
                if (!ok) return false;
                if (mode_of(p) != Mode::P)
                    return fail(CheckCause::ModeRestriction,
                                "only producers are weakened on the left");
                return expect_premise(d, 0, drop_principal(d));
            }
            case RuleId::WeakR:
            case RuleId::WeakPR: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Right, &ok);
                if (!ok) return false;
                if (mode_of(p) != Mode::C)
                    return fail(CheckCause::ModeRestriction,
                                "only consumers are weakened on the right");
                return expect_premise(d, 0, drop_principal(d));
            }
            case RuleId::ContrL:
            case RuleId::ContrPL: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Left, &ok);
                if (!ok) return false;
                if (mode_of(p) != Mode::P)
                    return fail(CheckCause::ModeRestriction,
                                "only producers are contracted on the left");
                Sequent prem = d->conclusion;
                ctx_insert(prem.left, p);
                return expect_premise(d, 0, prem);
            }
            case RuleId::ContrR:
            case RuleId::ContrPR: {
                bool ok = false;
                Prop p = principal_prop(d, Side::Right, &ok);
                if (!ok) return false;
                if (mode_of(p) != Mode::C)
                    return fail(CheckCause::ModeRestriction,
                                "only consumers are contracted on the right");
                Sequent prem = d->conclusion;
                ctx_insert(prem.right, p);
                return expect_premise(d, 0, prem);
            }

            case RuleId::CutL:
            case RuleId::CutP:
            case RuleId::CutPPers:
            case RuleId::CutC:
            case RuleId::CutCPers:
                return cut_node(d);
        }
        return fail(CheckCause::Arity, "unhandled rule");
    }

    // Multiplicative right split: premise i contains component i of p on the
    // right; residues and lefts recombine to the conclusion.
    bool split_right(const Deriv& d, const Prop& p) {
        const Sequent& s = d->conclusion;
        const Sequent& p0 = d->premises[0]->conclusion;
        const Sequent& p1 = d->premises[1]->conclusion;
        if (p0.kind != s.kind || p1.kind != s.kind)
            return fail(CheckCause::JudgmentKind, "split premises share the conclusion judgment");
        auto d0 = ctx_subtract(p0.right, {p->a});
        if (!d0)
            return fail(CheckCause::ContextMismatch,
                        "first premise must prove the left component");
        auto d1 = ctx_subtract(p1.right, {p->b});
        if (!d1)
            return fail(CheckCause::ContextMismatch,
                        "second premise must prove the right component");
        Sequent base = drop_principal(d);
        if (!ctx_eq(ctx_union(*d0, *d1), base.right) ||
            !ctx_eq(ctx_union(p0.left, p1.left), base.left))
            return fail(CheckCause::ContextMismatch,
                        "premise contexts do not recombine to the conclusion");
        return true;
    }

    // Multiplicative left split: premise i consumes component i on the left.
    bool split_left(const Deriv& d, const Prop& p) {
        const Sequent& s = d->conclusion;
        const Sequent& p0 = d->premises[0]->conclusion;
        const Sequent& p1 = d->premises[1]->conclusion;
        if (p0.kind != s.kind || p1.kind != s.kind)
            return fail(CheckCause::JudgmentKind, "split premises share the conclusion judgment");
        auto g0 = ctx_subtract(p0.left, {p->a});
        if (!g0)
            return fail(CheckCause::ContextMismatch,
                        "first premise must consume the left component");
        auto g1 = ctx_subtract(p1.left, {p->b});
        if (!g1)
            return fail(CheckCause::ContextMismatch,
                        "second premise must consume the right component");
        Sequent base = drop_principal(d);
        if (!ctx_eq(ctx_union(*g0, *g1), base.left) ||
            !ctx_eq(ctx_union(p0.right, p1.right), base.right))
            return fail(CheckCause::ContextMismatch,
                        "premise contexts do not recombine to the conclusion");
        return true;
    }

    bool cut_node(const Deriv& d) {
        if (!policy_.allow_cut)
            return fail(CheckCause::CutForbidden, "cut is not permitted here");
        const Sequent& s = d->conclusion;
        const Sequent& p0 = d->premises[0]->conclusion;
        const Sequent& p1 = d->premises[1]->conclusion;

        Judgment k0, k1;
        Mode want_mode;
        switch (d->rule) {
            case RuleId::CutL:
                k0 = Judgment::Linear; k1 = Judgment::Linear; want_mode = Mode::L; break;
            case RuleId::CutP:
                k0 = Judgment::Persistent; k1 = Judgment::Linear; want_mode = Mode::P; break;
            case RuleId::CutPPers:
                k0 = Judgment::Persistent; k1 = Judgment::Persistent; want_mode = Mode::P; break;
            case RuleId::CutC:
                k0 = Judgment::Linear; k1 = Judgment::Persistent; want_mode = Mode::C; break;
            default:  // CutCPers
                k0 = Judgment::Persistent; k1 = Judgment::Persistent; want_mode = Mode::C; break;
        }
        if (p0.kind != k0 || p1.kind != k1)
            return fail(CheckCause::JudgmentKind,
                        std::string(rule_name(d->rule)) + " premises have the wrong judgments");

        // Recover the cut proposition: it is the one occurrence on the first
        // premise's right and the second premise's left that the conclusion
        // does not absorb.
        auto extra_r = ctx_subtract(ctx_union(p0.right, p1.right), s.right);
        if (!extra_r || extra_r->size() != 1)
            return fail(CheckCause::ContextMismatch,
                        "cut conclusion right context does not match the premises");
        auto extra_l = ctx_subtract(ctx_union(p0.left, p1.left), s.left);
        if (!extra_l || extra_l->size() != 1 || !prop_eq((*extra_l)[0], (*extra_r)[0]))
            return fail(CheckCause::ContextMismatch,
                        "cut conclusion left context does not match the premises");
        Prop x = (*extra_r)[0];
        if (!ctx_find(p0.right, x) || !ctx_find(p1.left, x))
            return fail(CheckCause::ContextMismatch,
                        "cut proposition must appear right of the first premise and left of the second");
        if (mode_of(x) != want_mode)
            return fail(CheckCause::ModeRestriction,
                        std::string(rule_name(d->rule)) + " cuts a " + mode_name(want_mode) +
                            " proposition, got " + print_prop(x));

        // Persistent cut premises carry producer/consumer context conditions.
        if (d->rule == RuleId::CutP || d->rule == RuleId::CutPPers) {
            auto rest = ctx_subtract(p0.right, {x});
            if (!all_producer(p0.left) || !all_consumer(*rest))
                return fail(CheckCause::ModeRestriction,
                            "producer cut premise must be producers ||- consumers, P");
        }
        if (d->rule == RuleId::CutC || d->rule == RuleId::CutCPers) {
            auto rest = ctx_subtract(p1.left, {x});
            if (!all_producer(*rest) || !all_consumer(p1.right))
                return fail(CheckCause::ModeRestriction,
                            "consumer cut premise must be producers, C ||- consumers");
        }
        return true;
    }
};

} // namespace detail

inline CheckReport check(const Deriv& d, CheckPolicy policy = {}) {
    return detail::Checker(policy).run(d);
}

inline bool check_ok(const Deriv& d, CheckPolicy policy = {}) {
    return check(d, policy).ok;
}

// Throwing variant used internally where a bad tree is a programming error.
inline void require_checked(const Deriv& d, CheckPolicy policy = {}) {
    CheckReport r = check(d, policy);
    if (!r.ok)
        throw std::logic_error("internal derivation failed to check: " + r.message + " at " +
                               r.path_string() + " [" + cause_name(r.cause) + "]");
}

} // namespace lpc
