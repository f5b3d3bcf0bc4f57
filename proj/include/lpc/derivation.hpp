#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lpc/rules.hpp"
#include "lpc/sequent.hpp"

namespace lpc {

// Derivations are immutable trees. Each node records the rule used, its
// full conclusion, the principal occurrence(s) in that conclusion, and the
// premise subtrees. Checking re-derives everything else from this data.
struct Derivation;
using Deriv = std::shared_ptr<const Derivation>;

struct Derivation {
    RuleId rule;
    Sequent conclusion;
    std::vector<Occurrence> principal;
    std::vector<Deriv> premises;
};

inline Deriv mk_deriv(RuleId rule, Sequent conclusion, std::vector<Occurrence> principal,
                      std::vector<Deriv> premises) {
    auto d = std::make_shared<Derivation>();
    d->rule = rule;
    d->conclusion = std::move(conclusion);
    d->principal = std::move(principal);
    d->premises = std::move(premises);
    return d;
}

inline size_t deriv_depth(const Deriv& d) {
    size_t m = 0;
    for (const auto& p : d->premises) m = std::max(m, deriv_depth(p));
    return m + 1;
}

inline size_t deriv_nodes(const Deriv& d) {
    size_t n = 1;
    for (const auto& p : d->premises) n += deriv_nodes(p);
    return n;
}

inline bool deriv_has_cut(const Deriv& d) {
    if (is_cut(d->rule)) return true;
    for (const auto& p : d->premises)
        if (deriv_has_cut(p)) return true;
    return false;
}

// Visit every node (root first).
template <class F>
inline void deriv_visit(const Deriv& d, F&& f) {
    f(d);
    for (const auto& p : d->premises) deriv_visit(p, f);
}

// --- derivation scripts -----------------------------------------------------
//
//   (rule <name> <sequent> (principal [left|right <index>]*) <premise>*)
//
// Principal entries are side/index pairs into the sorted conclusion contexts.

inline SExpr deriv_to_sexpr(const Deriv& d) {
    std::vector<SExpr> items;
    items.push_back(sx_atom("rule"));
    items.push_back(sx_atom(rule_name(d->rule)));
    items.push_back(sequent_to_sexpr(d->conclusion));
    std::vector<SExpr> prin;
    prin.push_back(sx_atom("principal"));
    for (const auto& o : d->principal) {
        prin.push_back(sx_atom(o.side == Side::Left ? "left" : "right"));
        prin.push_back(sx_atom(std::to_string(o.index)));
    }
    items.push_back(sx_list(std::move(prin)));
    for (const auto& p : d->premises) items.push_back(deriv_to_sexpr(p));
    return sx_list(std::move(items));
}

inline std::string print_deriv(const Deriv& d) { return to_string(deriv_to_sexpr(d)); }

// Pretty multi-line form (one node per line, premises indented).
inline void print_deriv_tree(const Deriv& d, std::string& out, int indent = 0) {
    out.append(static_cast<size_t>(indent) * 2, ' ');
    out += rule_name(d->rule);
    out += "  ";
    out += print_sequent(d->conclusion);
    out.push_back('\n');
    for (const auto& p : d->premises) print_deriv_tree(p, out, indent + 1);
}

inline Deriv deriv_from_sexpr(const SExpr& e) {
    if (!e.is_list() || e.size() < 4 || !e[0].is_atom("rule"))
        throw parse_error("expected (rule <name> <sequent> (principal ...) premises...)",
                          e.line, e.col);
    if (!e[1].is_atom()) throw parse_error("expected a rule name", e[1].line, e[1].col);
    auto rid = rule_from_name(e[1].atom);
    if (!rid) throw parse_error("unknown rule '" + e[1].atom + "'", e[1].line, e[1].col);
    Sequent concl = sequent_from_sexpr(e[2]);
    const SExpr& pr = e[3];
    if (!pr.is_list() || pr.size() < 1 || !pr[0].is_atom("principal"))
        throw parse_error("expected (principal ...)", pr.line, pr.col);
    if ((pr.size() - 1) % 2 != 0)
        throw parse_error("principal entries are side/index pairs", pr.line, pr.col);
    std::vector<Occurrence> prin;
    for (size_t i = 1; i + 1 < pr.size() + 0; i += 2) {
        const SExpr& sd = pr[i];
        const SExpr& ix = pr[i + 1];
        if (!sd.is_atom() || (sd.atom != "left" && sd.atom != "right"))
            throw parse_error("expected 'left' or 'right'", sd.line, sd.col);
        if (!ix.is_atom())
            throw parse_error("expected an index", ix.line, ix.col);
        size_t idx = 0;
        try {
            idx = static_cast<size_t>(std::stoul(ix.atom));
        } catch (...) {
            throw parse_error("bad principal index '" + ix.atom + "'", ix.line, ix.col);
        }
        prin.push_back({sd.atom == "left" ? Side::Left : Side::Right, idx});
    }
    std::vector<Deriv> prem;
    for (size_t i = 4; i < e.size(); ++i) prem.push_back(deriv_from_sexpr(e[i]));
    return mk_deriv(*rid, std::move(concl), std::move(prin), std::move(prem));
}

inline Deriv parse_deriv(const std::string& s) { return deriv_from_sexpr(parse_sexpr(s)); }

} // namespace lpc
