// End-to-end acceptance harness. Each numbered block below checks one
// shipping requirement of the workbench and prints a single [PASS]/[FAIL]
// verdict line; the exit status is the number of failed blocks. Run with
// the corpus directory as the only argument.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lpc/build.hpp"
#include "lpc/check.hpp"
#include "lpc/cutelim.hpp"
#include "lpc/derivation.hpp"
#include "lpc/elaborate.hpp"
#include "lpc/errors.hpp"
#include "lpc/models/boolalg.hpp"
#include "lpc/models/finvect.hpp"
#include "lpc/models/rel.hpp"
#include "lpc/search.hpp"
#include "lpc/semantics/interp.hpp"
#include "lpc/semantics/laws.hpp"
#include "lpc/sequent.hpp"
#include "lpc/sexpr.hpp"
#include "lpc/syntax.hpp"

using namespace lpc;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double secs_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failures = 0;

void verdict(int id, const char* name, bool ok, const std::string& detail,
             double sec) {
    if (!ok) ++g_failures;
    std::printf("[%s] %d %s: %s (%.2fs)\n", ok ? "PASS" : "FAIL", id, name,
                detail.c_str(), sec);
}

void note(const std::string& line) { std::printf("       %s\n", line.c_str()); }

// --- shared fixtures ---------------------------------------------------------

std::vector<std::pair<std::string, Deriv>> load_corpus(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".lpc") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    std::vector<std::pair<std::string, Deriv>> out;
    for (const auto& f : files) {
        std::ifstream in(f);
        std::ostringstream ss;
        ss << in.rdbuf();
        for (const SExpr& e : parse_sexprs(ss.str()))
            out.emplace_back(f.filename().string(), deriv_from_sexpr(e));
    }
    return out;
}

// size of the object a proposition denotes in the shipped interpreting
// models, computed without the interpreter: products for the
// multiplicatives, sums for the additives, base^n for the modalities
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

uint64_t ctx_osize(const Context& c, uint64_t base) {
    uint64_t s = 1;
    for (const auto& p : c) s *= osize(p, base);
    return s;
}

// --- 1: rule coverage and mutation rejection -----------------------------------

int alias_class(RuleId x) {
    // introducing a persistent unit is the same premise scheme as weakening
    // by it, on both sides of both judgments; those flips are legal
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
}

void c1_rule_coverage(const std::vector<std::pair<std::string, Deriv>>& corpus) {
    auto t0 = Clock::now();
    std::string why;
    bool ok = corpus.size() >= 35;
    if (!ok) why = "corpus too small";

    std::set<RuleId> covered;
    for (const auto& [name, d] : corpus) {
        CheckReport r = check(d);
        if (!r.ok) {
            ok = false;
            why = name + " rejected: " + r.message;
            break;
        }
        deriv_visit(d, [&](const Deriv& n) { covered.insert(n->rule); });
    }
    if (ok && covered.size() != size_t(kRuleCount)) {
        ok = false;
        why = "rule coverage " + std::to_string(covered.size()) + "/" +
              std::to_string(kRuleCount);
    }

    // scheme confusion: flipping a root's rule id to any other rule of the
    // same arity and principal count must be rejected
    size_t flips = 0;
    for (const auto& [name, d] : corpus) {
        if (!ok) break;
        if (deriv_has_cut(d)) continue; // the five cut ids share one scheme
        for (int i = 0; i < kRuleCount; ++i) {
            RuleId alt = static_cast<RuleId>(i);
            if (alt == d->rule || is_cut(alt)) continue;
            if (rule_arity(alt) != d->premises.size()) continue;
            if (rule_principal_count(alt) != d->principal.size()) continue;
            if (alias_class(alt) != 0 && alias_class(alt) == alias_class(d->rule))
                continue;
            Deriv m = mk_deriv(alt, d->conclusion, d->principal, d->premises);
            ++flips;
            if (check_ok(m)) {
                ok = false;
                why = name + ": flip to " + rule_name(alt) + " not rejected";
            }
        }
    }

    // one targeted mutation per rule: principal-bearing rules get an
    // out-of-range principal, the rest get a foreign formula spliced into
    // the conclusion so the context no longer balances
    size_t targeted = 0;
    if (ok) {
        std::map<RuleId, Deriv> first;
        for (const auto& [name, d] : corpus)
            deriv_visit(d, [&](const Deriv& n) { first.emplace(n->rule, n); });
        for (const auto& [rule, n] : first) {
            Deriv mutant;
            bool want_principal = !n->principal.empty();
            if (want_principal) {
                auto pr = n->principal;
                pr[0].index = 1000000;
                mutant = mk_deriv(rule, n->conclusion, pr, n->premises);
            } else {
                Sequent s = n->conclusion;
                ctx_insert(s.left, top());
                mutant = mk_deriv(rule, s, n->principal, n->premises);
            }
            CheckReport r = check(mutant);
            ++targeted;
            if (r.ok) {
                ok = false;
                why = std::string("mutated ") + rule_name(rule) + " not rejected";
                break;
            }
            if (r.cause == CheckCause::None) {
                ok = false;
                why = std::string("mutated ") + rule_name(rule) + " lacks a cause";
                break;
            }
            if (want_principal && r.cause != CheckCause::PrincipalMismatch) {
                ok = false;
                why = std::string("mutated ") + rule_name(rule) + " got cause " +
                      cause_name(r.cause) + ", wanted principal-mismatch";
                break;
            }
        }
        // a mode violation: the persistent axiom applied to a linear formula
        if (ok) {
            Sequent s{Judgment::Persistent, make_ctx({top()}), make_ctx({top()})};
            CheckReport r = check(mk_deriv(RuleId::AxP, s, {}, {}));
            if (r.ok || r.cause == CheckCause::None) {
                ok = false;
                why = "persistent axiom on a linear formula not rejected";
            }
        }
        // a judgment flip: the linear axiom under the persistent turnstile
        if (ok) {
            Prop p = gbang(top());
            Sequent s{Judgment::Persistent, make_ctx({p}), make_ctx({p})};
            CheckReport r = check(mk_deriv(RuleId::Ax, s, {}, {}));
            if (r.ok || r.cause == CheckCause::None) {
                ok = false;
                why = "linear axiom under the persistent turnstile not rejected";
            }
        }
    }

    double dt = secs_since(t0);
    if (ok && dt >= 5.0) {
        ok = false;
        why = "too slow";
    }
    std::string detail = ok ? std::to_string(corpus.size()) + " derivations, " +
                                  std::to_string(covered.size()) + "/" +
                                  std::to_string(kRuleCount) + " rules, " +
                                  std::to_string(flips) + " scheme flips and " +
                                  std::to_string(targeted) +
                                  " targeted mutations rejected"
                            : why;
    verdict(1, "rule coverage", ok, detail, dt);
}

// --- 2: duality involution ------------------------------------------------------

void c2_involution() {
    auto t0 = Clock::now();
    PropUniverse u = enumerate_props(3);
    size_t total = u.linear.size() + u.producer.size() + u.consumer.size();
    bool ok = total == 19830; // regression constant, recorded on first run
    std::string why = ok ? "" : "enumeration count drifted to " + std::to_string(total);

    auto check_list = [&](const std::vector<Prop>& ps, Mode m, Mode flipped) {
        for (const auto& p : ps) {
            if (!(dual(dual(p)) == p)) {
                ok = false;
                why = "dual not involutive on " + print_prop(p);
                return;
            }
            if (mode_of(p) != m || mode_of(dual(p)) != flipped) {
                ok = false;
                why = "mode flip failed on " + print_prop(p);
                return;
            }
        }
    };
    if (ok) check_list(u.linear, Mode::L, Mode::L);
    if (ok) check_list(u.producer, Mode::P, Mode::C);
    if (ok) check_list(u.consumer, Mode::C, Mode::P);

    double dt = secs_since(t0);
    if (ok && dt >= 30.0) {
        ok = false;
        why = "too slow";
    }
    verdict(2, "duality involution", ok,
            ok ? std::to_string(total) + " propositions, dual o dual = id, modes flip"
               : why,
            dt);
}

// --- 3: exactly one displaced proposition ----------------------------------------

void c3_displacement() {
    auto t0 = Clock::now();
    SearchBudget budget;
    budget.max_depth = 5;
    auto entries = enumerate_provable(4, budget);
    size_t persistents = 0, violations = 0;
    std::string witness;
    for (const auto& e : entries)
        deriv_visit(e.deriv, [&](const Deriv& n) {
            if (n->conclusion.kind != Judgment::Persistent) return;
            ++persistents;
            if (displaced(n->conclusion).size() != 1) {
                ++violations;
                if (witness.empty()) witness = print_sequent(n->conclusion);
            }
        });
    bool ok = violations == 0 && !entries.empty();
    verdict(3, "displacement", ok,
            ok ? std::to_string(entries.size()) + " derivations, " +
                     std::to_string(persistents) +
                     " persistent sequents, each with exactly one displaced entry"
               : std::to_string(violations) + " violations, first: " + witness,
            secs_since(t0));
}

// --- 4: cut elimination over assembled instances ---------------------------------

struct CutInstance {
    Deriv cut;
    RuleId rule;
};

std::vector<CutInstance> assemble_cuts(const std::vector<ProvableEntry>& entries,
                                       size_t per_rule_cap) {
    // index every entry by the propositions in its left context
    std::map<std::string, std::vector<size_t>> by_left;
    for (size_t i = 0; i < entries.size(); ++i)
        for (const auto& p : entries[i].goal.left)
            by_left[print_prop(p)].push_back(i);

    std::map<RuleId, size_t> tally;
    std::vector<CutInstance> out;
    for (const auto& e1 : entries) {
        std::set<std::string> seen;
        for (const auto& x : e1.goal.right) {
            std::string key = print_prop(x);
            if (!seen.insert(key).second) continue;
            auto it = by_left.find(key);
            if (it == by_left.end()) continue;
            for (size_t j : it->second) {
                Deriv c;
                try {
                    c = build::make_cut(x, e1.deriv, entries[j].deriv);
                } catch (const std::logic_error&) {
                    continue; // judgment shapes this pair cannot cut over
                }
                if (tally[c->rule] >= per_rule_cap) continue;
                ++tally[c->rule];
                out.push_back({c, c->rule});
            }
        }
    }
    return out;
}

void c4_cut_elimination(const std::vector<ProvableEntry>& entries3) {
    auto t0 = Clock::now();
    auto cuts = assemble_cuts(entries3, 120);

    std::map<RuleId, size_t> per_rule;
    size_t eliminated = 0, gapped = 0, violations = 0;
    double worst = 0;
    std::string why;
    for (const auto& inst : cuts) {
        ++per_rule[inst.rule];
        auto s0 = Clock::now();
        EliminationResult res;
        try {
            res = eliminate_all(inst.cut, /*with_trace=*/true);
        } catch (const cut_gap_error& e) {
            ++gapped;
            const GapDiagnosis& g = e.diagnosis();
            if (g.note.empty() || !g.blocking) {
                ++violations;
                why = "gap without a diagnosis";
            }
            continue;
        }
        double dt = secs_since(s0);
        worst = std::max(worst, dt);
        ++eliminated;
        if (!trace_measure_decreases(res.trace)) {
            ++violations;
            why = "measure increased under " + std::string(rule_name(inst.rule));
        } else if (deriv_has_cut(res.deriv) ||
                   !check_ok(res.deriv, CheckPolicy{/*allow_cut=*/false})) {
            ++violations;
            why = "output not cut-free-checkable";
        } else if (!sequent_eq(res.deriv->conclusion, inst.cut->conclusion)) {
            ++violations;
            why = "conclusion changed";
        } else if (dt >= 1.0) {
            ++violations;
            why = "one instance took " + std::to_string(dt) + "s";
        }
    }

    bool ok = violations == 0 && cuts.size() >= 200 && per_rule.size() == 5;
    std::ostringstream d;
    if (ok) {
        d << cuts.size() << " instances (";
        bool fst = true;
        for (const auto& [r, n] : per_rule) {
            if (!fst) d << ", ";
            fst = false;
            d << rule_name(r) << " " << n;
        }
        d << "), " << eliminated << " eliminated, worst " << std::fixed
          << std::setprecision(3) << worst << "s";
        if (gapped)
            d << "; " << gapped
              << " hit the documented bare-exponential gap, each with a diagnosis";
    } else {
        d << (why.empty() ? std::string("only ") + std::to_string(cuts.size()) +
                                " instances over " + std::to_string(per_rule.size()) +
                                " cut rules"
                          : why);
    }
    verdict(4, "cut elimination", ok, d.str(), secs_since(t0));
}

// --- 5: duality transport ---------------------------------------------------------

void c5_duality_transport(const std::vector<ProvableEntry>& entries3) {
    auto t0 = Clock::now();
    size_t moved = 0, gapped = 0, structural = 0;
    std::string first_gap, why;
    for (const auto& e : entries3) {
        if (e.goal.kind != Judgment::Linear || e.goal.right.empty()) continue;
        std::set<std::string> seen;
        for (const auto& x : e.goal.right) {
            if (!seen.insert(print_prop(x)).second) continue;
            try {
                Deriv m = elaborate_dual(e.deriv, Side::Right, x);
                Sequent want = elaborated_conclusion(e.goal, Side::Right, x);
                if (deriv_has_cut(m) || !check_ok(m, CheckPolicy{false}) ||
                    !sequent_eq(m->conclusion, want)) {
                    ++structural;
                    why = "bad transport of " + print_prop(x) + " in " +
                          print_sequent(e.goal);
                } else {
                    ++moved;
                }
            } catch (const cut_gap_error& g) {
                ++gapped;
                if (first_gap.empty())
                    first_gap = print_prop(x) + " in " + print_sequent(e.goal) +
                                " -- " + g.what();
            }
        }
    }
    bool ok = structural == 0 && gapped == 0 && moved > 0;
    std::ostringstream d;
    d << moved << " occurrences transported cut-free, " << gapped << " gapped, "
      << structural << " malformed";
    verdict(5, "duality transport", ok, d.str(), secs_since(t0));
    if (gapped) {
        note("first gap: " + first_gap);
        note("a consumer met at a linear axiom has no cut-free closed duality "
             "witness, so its transport cannot be elaborated; the gap is "
             "diagnosed, not hidden (see README)");
    }
}

// --- 6: consistency at desk scale ---------------------------------------------------

void c6_consistency() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string why;

    SearchBudget deep{8, 2, 2000000};
    SearchOutcome zero = search(parse_sequent("(|- () (0))"), deep);
    if (zero.deriv || zero.node_limit) {
        ok = false;
        why = zero.deriv ? "found a proof of the empty disjunction"
                         : "search for 0 hit the node budget";
    }

    size_t provable = 0, inconclusive = 0;
    if (ok) {
        SearchBudget b{6, 2, 500000};
        PropUniverse u = enumerate_props(2);
        for (const auto& a : u.linear) {
            SearchOutcome pa = search(Sequent{Judgment::Linear, {}, make_ctx({a})}, b);
            if (pa.node_limit) ++inconclusive;
            if (!pa.deriv) continue;
            ++provable;
            SearchOutcome na =
                search(Sequent{Judgment::Linear, {}, make_ctx({neg(a)})}, b);
            if (na.node_limit) ++inconclusive;
            if (na.deriv) {
                ok = false;
                why = "both " + print_prop(a) + " and its negation are provable";
                break;
            }
        }
    }

    double dt = secs_since(t0);
    if (ok && dt >= 120.0) {
        ok = false;
        why = "too slow";
    }
    std::ostringstream d;
    if (ok) {
        d << "0 is exhausted at depth 8; no proposition proves together with its "
             "negation ("
          << provable << " provable of 70";
        if (inconclusive) d << ", " << inconclusive << " searches hit the node cap";
        d << ")";
    } else {
        d << why;
    }
    verdict(6, "consistency", ok, d.str(), dt);
}

// --- 7: model laws -----------------------------------------------------------------

struct LawSummary {
    bool ok = false;
    size_t families = 0, failures = 0, skipped = 0, defects = 0;
};

template <class M>
LawSummary run_laws(const M& m, uint32_t max_size) {
    semantics::LawOptions opt;
    opt.max_size = max_size;
    semantics::LawReport rep = semantics::check_laws(m, opt);
    LawSummary s;
    s.ok = rep.ok();
    s.families = rep.results.size();
    s.defects = rep.defects();
    for (const auto& r : rep.results) {
        s.failures += r.failures;
        s.skipped += r.skipped;
    }
    return s;
}

void c7_model_laws() {
    auto t0 = Clock::now();
    LawSummary fv = run_laws(models::FinVectModel{2}, 2);
    LawSummary rl = run_laws(models::RelModel{}, 3);
    LawSummary ba = run_laws(models::BoolAlgModel{}, 3);
    bool ok = fv.ok && rl.ok && ba.ok && ba.defects == 3;
    double dt = secs_since(t0);
    if (ok && dt >= 180.0) ok = false;
    std::ostringstream d;
    d << "finvect " << (fv.ok ? "ok" : "FAIL") << " (" << fv.families
      << " families), rel " << (rl.ok ? "ok" : "FAIL") << " (" << rl.families
      << " families, " << rl.skipped << " skips at the carrier bound), boolalg "
      << (ba.ok ? "ok" : "FAIL") << " (" << ba.families << " families, "
      << ba.defects << " documented defects observed, " << ba.failures
      << " law failures inside them)";
    verdict(7, "model laws", ok, d.str(), dt);
}

// --- 8: interpretation boundaries ----------------------------------------------------

template <class M>
bool boundary_ok(const M& m, uint64_t base, const Deriv& d, std::string& why) {
    const Sequent& s = d->conclusion;
    if (s.kind == Judgment::Linear) {
        auto den = semantics::interp_linear(m, d);
        if (den.dom != ctx_osize(s.left, base) ||
            den.cod != ctx_osize(s.right, base)) {
            why = "boundary mismatch at " + print_sequent(s);
            return false;
        }
        return true;
    }
    auto disp = displaced(s);
    if (disp.size() != 1) {
        why = "displacement broke at " + print_sequent(s);
        return false;
    }
    const Prop& dp =
        disp[0].side == Side::Left ? s.left[disp[0].index] : s.right[disp[0].index];
    uint64_t left = 1, right = 1;
    for (size_t i = 0; i < s.left.size(); ++i)
        if (!(disp[0].side == Side::Left && i == disp[0].index))
            left *= osize(s.left[i], base);
    for (size_t i = 0; i < s.right.size(); ++i)
        if (!(disp[0].side == Side::Right && i == disp[0].index))
            right *= osize(s.right[i], base);
    auto den = semantics::interp_persistent(m, d);
    if (den.dom_left != left || den.dom_right != right ||
        den.dom != left * right || den.cod != osize(dp, base)) {
        why = "boundary mismatch at " + print_sequent(s);
        return false;
    }
    return true;
}

void c8_interpretation(const std::vector<std::pair<std::string, Deriv>>& corpus) {
    auto t0 = Clock::now();
    models::RelModel rel;
    models::FinVectModel vec{2};
    size_t checked = 0;
    bool ok = true;
    std::string why;
    for (const auto& [name, d0] : corpus) {
        Deriv d = deriv_has_cut(d0) ? eliminate(d0) : d0;
        std::string w;
        if (!boundary_ok(rel, 2, d, w) || !boundary_ok(vec, 2, d, w)) {
            ok = false;
            why = name + ": " + w;
            break;
        }
        ++checked;
    }
    verdict(8, "interpretation boundaries", ok,
            ok ? std::to_string(checked) +
                     " corpus derivations interpreted in rel and finvect, "
                     "dom/cod as stated"
               : why,
            secs_since(t0));
}

// --- 9: denotation stability report ---------------------------------------------------

void c9_stability(const std::vector<ProvableEntry>& entries3) {
    auto t0 = Clock::now();
    auto cuts = assemble_cuts(entries3, 120);
    models::RelModel rel;

    size_t interpreted = 0, idempotent = 0, skipped = 0;
    std::map<std::string, models::BRel> first_lin;
    std::map<std::string, models::Fn> first_pers;
    size_t shared_total = 0, shared_equal = 0;
    bool ok = true;
    std::string why;

    for (const auto& inst : cuts) {
        Deriv e1;
        try {
            e1 = eliminate(inst.cut);
        } catch (const cut_gap_error&) {
            continue; // counted under the cut-elimination block
        }
        Deriv e2 = eliminate(e1); // already cut-free: must be a fixed point
        try {
            const Sequent& s = e1->conclusion;
            std::string key = print_sequent(s);
            if (s.kind == Judgment::Linear) {
                auto d1 = semantics::interp_linear(rel, e1);
                auto d2 = semantics::interp_linear(rel, e2);
                ++interpreted;
                if (d1.mor == d2.mor) ++idempotent;
                auto [it, fresh] = first_lin.emplace(key, d1.mor);
                if (!fresh) {
                    ++shared_total;
                    if (it->second == d1.mor) ++shared_equal;
                }
            } else {
                auto d1 = semantics::interp_persistent(rel, e1);
                auto d2 = semantics::interp_persistent(rel, e2);
                ++interpreted;
                if (d1.mor == d2.mor) ++idempotent;
                auto [it, fresh] = first_pers.emplace(key, d1.mor);
                if (!fresh) {
                    ++shared_total;
                    if (it->second == d1.mor) ++shared_equal;
                }
            }
        } catch (const domain_too_large&) {
            ++skipped;
        }
    }

    if (interpreted == 0) {
        ok = false;
        why = "nothing interpreted";
    } else if (idempotent != interpreted) {
        ok = false;
        why = std::to_string(interpreted - idempotent) +
              " denotations changed under re-elimination";
    }

    std::ostringstream d;
    if (ok) {
        d << interpreted << " eliminated cuts interpreted in rel, re-elimination "
             "preserved every denotation";
        if (skipped) d << " (" << skipped << " beyond the carrier bound)";
    } else {
        d << why;
    }
    verdict(9, "denotation stability", ok, d.str(), secs_since(t0));
    if (shared_total) {
        double frac = double(shared_equal) / double(shared_total);
        std::ostringstream n;
        n << "report only: " << shared_equal << "/" << shared_total << " ("
          << std::fixed << std::setprecision(1) << 100 * frac
          << "%) of independently assembled derivations of the same sequent "
             "share a denotation; no theorem promises more";
        note(n.str());
    }
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: lpc_acceptance <corpus-dir>\n";
        return 64;
    }
    auto corpus = load_corpus(argv[1]);

    SearchBudget b3;
    b3.max_depth = 5;
    auto entries3 = enumerate_provable(3, b3);

    c1_rule_coverage(corpus);
    c2_involution();
    c3_displacement();
    c4_cut_elimination(entries3);
    c5_duality_transport(entries3);
    c6_consistency();
    c7_model_laws();
    c8_interpretation(corpus);
    c9_stability(entries3);

    if (g_failures)
        std::printf("%d of 9 criteria failed\n", g_failures);
    else
        std::printf("all 9 criteria passed\n");
    return g_failures;
}
