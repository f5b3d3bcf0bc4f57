#pragma once

#include <memory>
#include <string>
#include <vector>

#include "lpc/errors.hpp"

namespace lpc {

// Minimal s-expression reader: atoms and parenthesised lists, whitespace
// separated, ';' comments to end of line. This is the only concrete syntax
// the tool suite uses (propositions, sequents, derivation scripts).
struct SExpr {
    enum class Kind { Atom, List };
    Kind kind = Kind::Atom;
    std::string atom;          // Kind::Atom
    std::vector<SExpr> items;  // Kind::List
    int line = 0;              // position of the opening token
    int col = 0;

    bool is_atom() const { return kind == Kind::Atom; }
    bool is_list() const { return kind == Kind::List; }
    bool is_atom(const std::string& s) const { return is_atom() && atom == s; }
    size_t size() const { return items.size(); }
    const SExpr& operator[](size_t i) const { return items[i]; }
};

namespace detail {

struct SexprLexer {
    const std::string& src;
    size_t pos = 0;
    int line = 1;
    int col = 1;

    explicit SexprLexer(const std::string& s) : src(s) {}

    void advance() {
        if (pos < src.size() && src[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }

    void skip_space() {
        while (pos < src.size()) {
            char c = src[pos];
            if (c == ';') {
                while (pos < src.size() && src[pos] != '\n') advance();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_space();
        return pos >= src.size();
    }

    SExpr next() {
        skip_space();
        if (pos >= src.size()) throw parse_error("unexpected end of input", line, col);
        char c = src[pos];
        int l = line, co = col;
        if (c == '(') {
            advance();
            SExpr e;
            e.kind = SExpr::Kind::List;
            e.line = l;
            e.col = co;
            for (;;) {
                skip_space();
                if (pos >= src.size()) throw parse_error("missing ')'", l, co);
                if (src[pos] == ')') {
                    advance();
                    return e;
                }
                e.items.push_back(next());
            }
        }
        if (c == ')') throw parse_error("unexpected ')'", l, co);
        SExpr e;
        e.kind = SExpr::Kind::Atom;
        e.line = l;
        e.col = co;
        while (pos < src.size()) {
            char d = src[pos];
            if (d == '(' || d == ')' || d == ';' || d == ' ' || d == '\t' || d == '\r' || d == '\n')
                break;
            e.atom.push_back(d);
            advance();
        }
        return e;
    }
};

} // namespace detail

// Parse exactly one s-expression; trailing garbage is an error.
inline SExpr parse_sexpr(const std::string& src) {
    detail::SexprLexer lx(src);
    SExpr e = lx.next();
    if (!lx.eof()) throw parse_error("trailing input after expression", lx.line, lx.col);
    return e;
}

// Parse a whole file worth of s-expressions.
inline std::vector<SExpr> parse_sexprs(const std::string& src) {
    detail::SexprLexer lx(src);
    std::vector<SExpr> out;
    while (!lx.eof()) out.push_back(lx.next());
    return out;
}

inline void print_sexpr(const SExpr& e, std::string& out) {
    if (e.is_atom()) {
        out += e.atom;
        return;
    }
    out.push_back('(');
    for (size_t i = 0; i < e.items.size(); ++i) {
        if (i) out.push_back(' ');
        print_sexpr(e.items[i], out);
    }
    out.push_back(')');
}

inline std::string to_string(const SExpr& e) {
    std::string s;
    print_sexpr(e, s);
    return s;
}

// Convenience builders used by the printers.
inline SExpr sx_atom(std::string s) {
    SExpr e;
    e.kind = SExpr::Kind::Atom;
    e.atom = std::move(s);
    return e;
}

inline SExpr sx_list(std::vector<SExpr> items) {
    SExpr e;
    e.kind = SExpr::Kind::List;
    e.items = std::move(items);
    return e;
}

} // namespace lpc
