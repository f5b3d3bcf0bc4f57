#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpc/syntax.hpp"

namespace lpc {

// Contexts are multisets of propositions kept as canonically sorted vectors
// (the structural order from syntax.hpp). All indices below refer to
// positions in the sorted vector.
using Context = std::vector<Prop>;

inline void ctx_sort(Context& c) { std::sort(c.begin(), c.end(), prop_lt); }

inline Context make_ctx(std::vector<Prop> v) {
    ctx_sort(v);
    return v;
}

inline bool ctx_eq(const Context& a, const Context& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!prop_eq(a[i], b[i])) return false;
    return true;
}

// Insert, keeping order; returns the index the element landed at.
inline size_t ctx_insert(Context& c, const Prop& p) {
    auto it = std::lower_bound(c.begin(), c.end(), p, prop_lt);
    size_t idx = static_cast<size_t>(it - c.begin());
    c.insert(it, p);
    return idx;
}

inline Context ctx_with(const Context& c, const Prop& p) {
    Context out = c;
    ctx_insert(out, p);
    return out;
}

inline Context ctx_without_index(const Context& c, size_t i) {
    Context out = c;
    out.erase(out.begin() + static_cast<long>(i));
    return out;
}

// Index of some occurrence of p, if present.
inline std::optional<size_t> ctx_find(const Context& c, const Prop& p) {
    auto it = std::lower_bound(c.begin(), c.end(), p, prop_lt);
    if (it != c.end() && prop_eq(*it, p)) return static_cast<size_t>(it - c.begin());
    return std::nullopt;
}

inline size_t ctx_count(const Context& c, const Prop& p) {
    auto lo = std::lower_bound(c.begin(), c.end(), p, prop_lt);
    auto hi = std::upper_bound(c.begin(), c.end(), p, prop_lt);
    return static_cast<size_t>(hi - lo);
}

// Multiset difference whole - part; nullopt if part is not contained.
inline std::optional<Context> ctx_subtract(const Context& whole, const Context& part) {
    Context out = whole;
    for (const auto& p : part) {
        auto it = std::lower_bound(out.begin(), out.end(), p, prop_lt);
        if (it == out.end() || !prop_eq(*it, p)) return std::nullopt;
        out.erase(it);
    }
    return out;
}

inline Context ctx_union(const Context& a, const Context& b) {
    Context out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), prop_lt);
    return out;
}

inline bool all_producer(const Context& c) {
    return std::all_of(c.begin(), c.end(), [](const Prop& p) { return mode_of(p) == Mode::P; });
}

inline bool all_consumer(const Context& c) {
    return std::all_of(c.begin(), c.end(), [](const Prop& p) { return mode_of(p) == Mode::C; });
}

inline bool all_persistent(const Context& c) {
    return std::all_of(c.begin(), c.end(), is_persistent);
}

// --- sequents -------------------------------------------------------------

// Linear sequents (|-) may mention any mode. Persistent sequents (||-)
// mention only producers and consumers.
enum class Judgment : uint8_t { Linear, Persistent };

enum class Side : uint8_t { Left, Right };

struct Sequent {
    Judgment kind = Judgment::Linear;
    Context left, right;
};

inline bool sequent_eq(const Sequent& a, const Sequent& b) {
    return a.kind == b.kind && ctx_eq(a.left, b.left) && ctx_eq(a.right, b.right);
}

inline bool sequent_modes_ok(const Sequent& s) {
    if (s.kind == Judgment::Linear) return true;
    return all_persistent(s.left) && all_persistent(s.right);
}

struct Occurrence {
    Side side;
    size_t index;
};

// Displaced occurrences of a persistent sequent: producers on the right,
// consumers on the left. (Derivable persistent sequents have exactly one;
// that is a theorem about the rules, not an invariant of the data type.)
inline std::vector<Occurrence> displaced(const Sequent& s) {
    std::vector<Occurrence> out;
    if (s.kind != Judgment::Persistent) return out;
    for (size_t i = 0; i < s.left.size(); ++i)
        if (mode_of(s.left[i]) == Mode::C) out.push_back({Side::Left, i});
    for (size_t i = 0; i < s.right.size(); ++i)
        if (mode_of(s.right[i]) == Mode::P) out.push_back({Side::Right, i});
    return out;
}

// --- concrete syntax --------------------------------------------------------

inline SExpr ctx_to_sexpr(const Context& c) {
    std::vector<SExpr> items;
    items.reserve(c.size());
    for (const auto& p : c) items.push_back(prop_to_sexpr(p));
    return sx_list(std::move(items));
}

inline SExpr sequent_to_sexpr(const Sequent& s) {
    return sx_list({sx_atom(s.kind == Judgment::Linear ? "|-" : "||-"),
                    ctx_to_sexpr(s.left), ctx_to_sexpr(s.right)});
}

inline std::string print_sequent(const Sequent& s) { return to_string(sequent_to_sexpr(s)); }

inline Context ctx_from_sexpr(const SExpr& e) {
    if (!e.is_list()) throw parse_error("expected a context (...)", e.line, e.col);
    Context c;
    c.reserve(e.size());
    for (const auto& item : e.items) c.push_back(prop_from_sexpr(item));
    ctx_sort(c);
    return c;
}

inline Sequent sequent_from_sexpr(const SExpr& e) {
    if (!e.is_list() || e.size() != 3 || !e[0].is_atom())
        throw parse_error("expected (|- (...) (...)) or (||- (...) (...))", e.line, e.col);
    Sequent s;
    if (e[0].atom == "|-") s.kind = Judgment::Linear;
    else if (e[0].atom == "||-") s.kind = Judgment::Persistent;
    else throw parse_error("expected '|-' or '||-'", e[0].line, e[0].col);
    s.left = ctx_from_sexpr(e[1]);
    s.right = ctx_from_sexpr(e[2]);
    if (!sequent_modes_ok(s))
        throw parse_error("persistent sequents may only contain producers and consumers",
                          e.line, e.col);
    return s;
}

inline Sequent parse_sequent(const std::string& s) {
    return sequent_from_sexpr(parse_sexpr(s));
}

} // namespace lpc
