#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lpc/errors.hpp"
#include "lpc/sexpr.hpp"

namespace lpc {

// Propositions come in three modes: linear (L), producer (P), consumer (C).
// Producers and consumers are jointly "persistent".
enum class Mode : uint8_t { L, P, C };

inline const char* mode_name(Mode m) {
    switch (m) {
        case Mode::L: return "linear";
        case Mode::P: return "producer";
        case Mode::C: return "consumer";
    }
    return "?";
}

// The grammar is atom-free: every proposition is built from the mode-indexed
// units and connectives below. Tensor/par exist at two modes each; the
// concrete syntax spells both the same and infers the mode from operands.
enum class PropTag : uint8_t {
    // linear
    Top,      // additive truth
    Zero,     // additive falsity
    With,     // A & B
    Plus,     // A + B
    OneL,     // multiplicative unit 1
    BotL,     // multiplicative falsity B
    TensorL,  // A (x) B
    ParL,     // A (+) B, written (par ...)
    FBang,    // F! P   (from producers)
    FWhy,     // F? C   (from consumers)
    // producer
    OneP,     // 1p
    TensorP,  // P (x) Q
    GBang,    // ! A
    // consumer
    BotC,     // Bc
    ParC,     // C (+) D
    GWhy,     // ? A
};

struct PropNode;
using Prop = std::shared_ptr<const PropNode>;

struct PropNode {
    PropTag tag;
    Prop a;  // first operand (unary connectives use only this)
    Prop b;  // second operand
    uint32_t size = 1;  // number of grammar nodes, cached
};

inline Mode mode_of(PropTag t) {
    switch (t) {
        case PropTag::Top:
        case PropTag::Zero:
        case PropTag::With:
        case PropTag::Plus:
        case PropTag::OneL:
        case PropTag::BotL:
        case PropTag::TensorL:
        case PropTag::ParL:
        case PropTag::FBang:
        case PropTag::FWhy:
            return Mode::L;
        case PropTag::OneP:
        case PropTag::TensorP:
        case PropTag::GBang:
            return Mode::P;
        case PropTag::BotC:
        case PropTag::ParC:
        case PropTag::GWhy:
            return Mode::C;
    }
    return Mode::L;
}

inline Mode mode_of(const Prop& p) { return mode_of(p->tag); }
inline bool is_persistent(const Prop& p) { return mode_of(p) != Mode::L; }
inline uint32_t prop_size(const Prop& p) { return p->size; }

namespace detail {

inline Prop mk0(PropTag t) {
    auto n = std::make_shared<PropNode>();
    n->tag = t;
    return n;
}

inline Prop mk1(PropTag t, Prop a) {
    auto n = std::make_shared<PropNode>();
    n->tag = t;
    n->size = 1 + a->size;
    n->a = std::move(a);
    return n;
}

inline Prop mk2(PropTag t, Prop a, Prop b) {
    auto n = std::make_shared<PropNode>();
    n->tag = t;
    n->size = 1 + a->size + b->size;
    n->a = std::move(a);
    n->b = std::move(b);
    return n;
}

inline void require_mode(const Prop& p, Mode m, const char* what) {
    if (mode_of(p) != m)
        throw mode_error(std::string(what) + " expects a " + mode_name(m) +
                         " operand, got a " + mode_name(mode_of(p)) + " one");
}

} // namespace detail

// --- constructors -----------------------------------------------------

inline Prop top() { static Prop p = detail::mk0(PropTag::Top); return p; }
inline Prop zero() { static Prop p = detail::mk0(PropTag::Zero); return p; }
inline Prop one_l() { static Prop p = detail::mk0(PropTag::OneL); return p; }
inline Prop bot_l() { static Prop p = detail::mk0(PropTag::BotL); return p; }
inline Prop one_p() { static Prop p = detail::mk0(PropTag::OneP); return p; }
inline Prop bot_c() { static Prop p = detail::mk0(PropTag::BotC); return p; }

inline Prop with(Prop a, Prop b) {
    detail::require_mode(a, Mode::L, "&");
    detail::require_mode(b, Mode::L, "&");
    return detail::mk2(PropTag::With, std::move(a), std::move(b));
}

inline Prop plus(Prop a, Prop b) {
    detail::require_mode(a, Mode::L, "+");
    detail::require_mode(b, Mode::L, "+");
    return detail::mk2(PropTag::Plus, std::move(a), std::move(b));
}

// Mode-homogeneous: linear*linear or producer*producer.
inline Prop tensor(Prop a, Prop b) {
    Mode m = mode_of(a);
    if (m != mode_of(b) || m == Mode::C)
        throw mode_error("tensor expects two linear or two producer operands");
    return detail::mk2(m == Mode::L ? PropTag::TensorL : PropTag::TensorP,
                       std::move(a), std::move(b));
}

// Mode-homogeneous: linear*linear or consumer*consumer.
inline Prop par(Prop a, Prop b) {
    Mode m = mode_of(a);
    if (m != mode_of(b) || m == Mode::P)
        throw mode_error("par expects two linear or two consumer operands");
    return detail::mk2(m == Mode::L ? PropTag::ParL : PropTag::ParC,
                       std::move(a), std::move(b));
}

inline Prop fbang(Prop p) {
    detail::require_mode(p, Mode::P, "F!");
    return detail::mk1(PropTag::FBang, std::move(p));
}

inline Prop fwhy(Prop c) {
    detail::require_mode(c, Mode::C, "F?");
    return detail::mk1(PropTag::FWhy, std::move(c));
}

inline Prop gbang(Prop a) {
    detail::require_mode(a, Mode::L, "!");
    return detail::mk1(PropTag::GBang, std::move(a));
}

inline Prop gwhy(Prop a) {
    detail::require_mode(a, Mode::L, "?");
    return detail::mk1(PropTag::GWhy, std::move(a));
}

// --- duality -----------------------------------------------------------
//
// One involution covering all three modes: linear propositions go to linear
// ones, producers to consumers and back. De Morgan on every connective;
// the adjoint modalities swap F!/F? and !/? with the operand dualised.

inline Prop dual(const Prop& p) {
    switch (p->tag) {
        case PropTag::Top: return zero();
        case PropTag::Zero: return top();
        case PropTag::With: return plus(dual(p->a), dual(p->b));
        case PropTag::Plus: return with(dual(p->a), dual(p->b));
        case PropTag::OneL: return bot_l();
        case PropTag::BotL: return one_l();
        case PropTag::TensorL: return par(dual(p->a), dual(p->b));
        case PropTag::ParL: return tensor(dual(p->a), dual(p->b));
        case PropTag::FBang: return fwhy(dual(p->a));
        case PropTag::FWhy: return fbang(dual(p->a));
        case PropTag::OneP: return bot_c();
        case PropTag::TensorP: return par(dual(p->a), dual(p->b));
        case PropTag::GBang: return gwhy(dual(p->a));
        case PropTag::BotC: return one_p();
        case PropTag::ParC: return tensor(dual(p->a), dual(p->b));
        case PropTag::GWhy: return gbang(dual(p->a));
    }
    throw std::logic_error("dual: bad tag");
}

// Intuitionistic-style negation: not A := A^dual (+) 0.
inline Prop neg(const Prop& a) {
    detail::require_mode(a, Mode::L, "neg");
    return par(dual(a), zero());
}

// --- structural total order --------------------------------------------

inline int prop_cmp(const Prop& x, const Prop& y) {
    if (x.get() == y.get()) return 0;
    if (x->tag != y->tag) return x->tag < y->tag ? -1 : 1;
    bool ux = x->a != nullptr, uy = y->a != nullptr;
    if (ux != uy) return ux < uy ? -1 : 1;  // unreachable for equal tags, kept defensive
    if (ux) {
        int c = prop_cmp(x->a, y->a);
        if (c) return c;
    }
    bool bx = x->b != nullptr, by = y->b != nullptr;
    if (bx != by) return bx < by ? -1 : 1;
    if (bx) return prop_cmp(x->b, y->b);
    return 0;
}

inline bool prop_eq(const Prop& x, const Prop& y) { return prop_cmp(x, y) == 0; }
inline bool prop_lt(const Prop& x, const Prop& y) { return prop_cmp(x, y) < 0; }

// --- concrete syntax ----------------------------------------------------

inline SExpr prop_to_sexpr(const Prop& p) {
    switch (p->tag) {
        case PropTag::Top: return sx_atom("T");
        case PropTag::Zero: return sx_atom("0");
        case PropTag::OneL: return sx_atom("1");
        case PropTag::BotL: return sx_atom("B");
        case PropTag::OneP: return sx_atom("1p");
        case PropTag::BotC: return sx_atom("Bc");
        case PropTag::With:
            return sx_list({sx_atom("&"), prop_to_sexpr(p->a), prop_to_sexpr(p->b)});
        case PropTag::Plus:
            return sx_list({sx_atom("+"), prop_to_sexpr(p->a), prop_to_sexpr(p->b)});
        case PropTag::TensorL:
        case PropTag::TensorP:
            return sx_list({sx_atom("tensor"), prop_to_sexpr(p->a), prop_to_sexpr(p->b)});
        case PropTag::ParL:
        case PropTag::ParC:
            return sx_list({sx_atom("par"), prop_to_sexpr(p->a), prop_to_sexpr(p->b)});
        case PropTag::FBang:
            return sx_list({sx_atom("F!"), prop_to_sexpr(p->a)});
        case PropTag::FWhy:
            return sx_list({sx_atom("F?"), prop_to_sexpr(p->a)});
        case PropTag::GBang:
            return sx_list({sx_atom("!"), prop_to_sexpr(p->a)});
        case PropTag::GWhy:
            return sx_list({sx_atom("?"), prop_to_sexpr(p->a)});
    }
    throw std::logic_error("prop_to_sexpr: bad tag");
}

inline std::string print_prop(const Prop& p) { return to_string(prop_to_sexpr(p)); }

inline Prop prop_from_sexpr(const SExpr& e) {
    if (e.is_atom()) {
        if (e.atom == "T") return top();
        if (e.atom == "0") return zero();
        if (e.atom == "1") return one_l();
        if (e.atom == "B") return bot_l();
        if (e.atom == "1p") return one_p();
        if (e.atom == "Bc") return bot_c();
        throw parse_error("unknown proposition constant '" + e.atom + "'", e.line, e.col);
    }
    if (e.size() == 0 || !e[0].is_atom())
        throw parse_error("expected a proposition", e.line, e.col);
    const std::string& h = e[0].atom;
    auto want = [&](size_t n) {
        if (e.size() != n + 1)
            throw parse_error("'" + h + "' takes " + std::to_string(n) + " operand(s)",
                              e.line, e.col);
    };
    try {
        if (h == "&") { want(2); return with(prop_from_sexpr(e[1]), prop_from_sexpr(e[2])); }
        if (h == "+") { want(2); return plus(prop_from_sexpr(e[1]), prop_from_sexpr(e[2])); }
        if (h == "tensor") { want(2); return tensor(prop_from_sexpr(e[1]), prop_from_sexpr(e[2])); }
        if (h == "par") { want(2); return par(prop_from_sexpr(e[1]), prop_from_sexpr(e[2])); }
        if (h == "F!") { want(1); return fbang(prop_from_sexpr(e[1])); }
        if (h == "F?") { want(1); return fwhy(prop_from_sexpr(e[1])); }
        if (h == "!") { want(1); return gbang(prop_from_sexpr(e[1])); }
        if (h == "?") { want(1); return gwhy(prop_from_sexpr(e[1])); }
    } catch (const mode_error& me) {
        throw parse_error(me.what(), e.line, e.col);
    }
    throw parse_error("unknown connective '" + h + "'", e.line, e.col);
}

inline Prop parse_prop(const std::string& s) { return prop_from_sexpr(parse_sexpr(s)); }

// --- enumeration ---------------------------------------------------------
//
// All propositions of each mode with at most `levels` levels of nesting
// (a constant is one level). Deterministic order: by level, then by the
// construction order below. Used by the involution sweeps and the corpus.

struct PropUniverse {
    std::vector<Prop> linear, producer, consumer;
};

inline PropUniverse enumerate_props(uint32_t levels) {
    PropUniverse u;
    if (levels == 0) return u;
    std::vector<Prop> L = {top(), zero(), one_l(), bot_l()};
    std::vector<Prop> P = {one_p()};
    std::vector<Prop> C = {bot_c()};
    u.linear = L;
    u.producer = P;
    u.consumer = C;
    for (uint32_t lvl = 2; lvl <= levels; ++lvl) {
        std::vector<Prop> L2 = {top(), zero(), one_l(), bot_l()};
        std::vector<Prop> P2 = {one_p()};
        std::vector<Prop> C2 = {bot_c()};
        for (const auto& a : L)
            for (const auto& b : L) {
                L2.push_back(with(a, b));
                L2.push_back(plus(a, b));
                L2.push_back(tensor(a, b));
                L2.push_back(par(a, b));
            }
        for (const auto& p : P) L2.push_back(fbang(p));
        for (const auto& c : C) L2.push_back(fwhy(c));
        for (const auto& a : P)
            for (const auto& b : P) P2.push_back(tensor(a, b));
        for (const auto& a : L) P2.push_back(gbang(a));
        for (const auto& a : C)
            for (const auto& b : C) C2.push_back(par(a, b));
        for (const auto& a : L) C2.push_back(gwhy(a));
        L = std::move(L2);
        P = std::move(P2);
        C = std::move(C2);
        u.linear = L;
        u.producer = P;
        u.consumer = C;
    }
    return u;
}

// All propositions (any mode) with at most `max_size` grammar nodes,
// smallest first; deterministic. Used by the search corpus.
inline std::vector<Prop> enumerate_props_by_size(uint32_t max_size) {
    // by_size[s][mode] lists propositions of exactly s nodes
    std::vector<std::vector<Prop>> by_size_L(max_size + 1), by_size_P(max_size + 1),
        by_size_C(max_size + 1);
    if (max_size >= 1) {
        by_size_L[1] = {top(), zero(), one_l(), bot_l()};
        by_size_P[1] = {one_p()};
        by_size_C[1] = {bot_c()};
    }
    for (uint32_t s = 2; s <= max_size; ++s) {
        for (const auto& p : by_size_P[s - 1]) by_size_L[s].push_back(fbang(p));
        for (const auto& c : by_size_C[s - 1]) by_size_L[s].push_back(fwhy(c));
        for (const auto& a : by_size_L[s - 1]) by_size_P[s].push_back(gbang(a));
        for (const auto& a : by_size_L[s - 1]) by_size_C[s].push_back(gwhy(a));
        for (uint32_t k = 1; k + 1 < s; ++k) {
            uint32_t r = s - 1 - k;
            for (const auto& a : by_size_L[k])
                for (const auto& b : by_size_L[r]) {
                    by_size_L[s].push_back(with(a, b));
                    by_size_L[s].push_back(plus(a, b));
                    by_size_L[s].push_back(tensor(a, b));
                    by_size_L[s].push_back(par(a, b));
                }
            for (const auto& a : by_size_P[k])
                for (const auto& b : by_size_P[r]) by_size_P[s].push_back(tensor(a, b));
            for (const auto& a : by_size_C[k])
                for (const auto& b : by_size_C[r]) by_size_C[s].push_back(par(a, b));
        }
    }
    std::vector<Prop> out;
    for (uint32_t s = 1; s <= max_size; ++s) {
        for (const auto& p : by_size_L[s]) out.push_back(p);
        for (const auto& p : by_size_P[s]) out.push_back(p);
        for (const auto& p : by_size_C[s]) out.push_back(p);
    }
    return out;
}

} // namespace lpc
