#pragma once

#include <cstdint>
#include <vector>

#include "lpc/errors.hpp"

namespace lpc::models {

// Finite sets with canonical carriers {0..n-1}. Products flatten row-major:
// (x, y) in X x Y sits at index x*|Y| + y. With that convention the
// associator and both unitors are identity tables and only the symmetry is a
// real permutation, which keeps every structural isomorphism cheap and
// byte-comparable.

struct Fn {
    uint32_t dom = 0, cod = 0;
    std::vector<uint32_t> tab; // tab.size() == dom

    bool operator==(const Fn&) const = default;
};

inline Fn fn_id(uint32_t n) {
    Fn f{n, n, {}};
    f.tab.resize(n);
    for (uint32_t i = 0; i < n; ++i) f.tab[i] = i;
    return f;
}

inline Fn fn_comp(const Fn& g, const Fn& f) {
    if (f.cod != g.dom) throw std::logic_error("fn_comp: domain mismatch");
    Fn h{f.dom, g.cod, {}};
    h.tab.reserve(f.dom);
    for (uint32_t x : f.tab) h.tab.push_back(g.tab[x]);
    return h;
}

inline Fn fn_const(uint32_t dom, uint32_t cod, uint32_t v) {
    Fn f{dom, cod, {}};
    f.tab.assign(dom, v);
    return f;
}

// (x, y) |-> (f x, g y)
inline Fn fn_prod(const Fn& f, const Fn& g) {
    Fn h{f.dom * g.dom, f.cod * g.cod, {}};
    h.tab.reserve(h.dom);
    for (uint32_t x = 0; x < f.dom; ++x)
        for (uint32_t y = 0; y < g.dom; ++y)
            h.tab.push_back(f.tab[x] * g.cod + g.tab[y]);
    return h;
}

inline Fn fn_sigma(uint32_t a, uint32_t b) {
    Fn f{a * b, b * a, {}};
    f.tab.resize(f.dom);
    for (uint32_t x = 0; x < a; ++x)
        for (uint32_t y = 0; y < b; ++y) f.tab[x * b + y] = y * a + x;
    return f;
}

inline Fn fn_diag(uint32_t n) {
    Fn f{n, n * n, {}};
    f.tab.resize(n);
    for (uint32_t i = 0; i < n; ++i) f.tab[i] = i * n + i;
    return f;
}

// The producer category shared by the vector-space and relational models:
// finite sets and functions, cartesian monoidal, every object a comonoid via
// diagonal and terminal map.
struct FinSetCat {
    using Obj = uint32_t;
    using Mor = Fn;

    static Mor id(Obj n) { return fn_id(n); }
    static Mor comp(const Mor& g, const Mor& f) { return fn_comp(g, f); }
    static bool eq(const Mor& a, const Mor& b) { return a == b; }

    static Obj tens(Obj a, Obj b) { return a * b; }
    static Obj unit() { return 1; }
    static Mor tens_mor(const Mor& f, const Mor& g) { return fn_prod(f, g); }
    static Mor alpha(Obj a, Obj b, Obj c) { return fn_id(a * b * c); }
    static Mor alpha_inv(Obj a, Obj b, Obj c) { return fn_id(a * b * c); }
    static Mor lambda(Obj a) { return fn_id(a); }
    static Mor lambda_inv(Obj a) { return fn_id(a); }
    static Mor rho(Obj a) { return fn_id(a); }
    static Mor rho_inv(Obj a) { return fn_id(a); }
    static Mor sigma(Obj a, Obj b) { return fn_sigma(a, b); }

    static Mor e(Obj n) { return fn_const(n, 1, 0); }
    static Mor d(Obj n) { return fn_diag(n); }
};

// The consumer category for those models: the formal opposite. A morphism
// C1 -> C2 is carried by a function on carriers going the other way.
struct OpFn {
    uint32_t dom = 0, cod = 0; // as objects of C
    Fn back;                   // back: carrier(cod) -> carrier(dom)

    bool operator==(const OpFn&) const = default;
};

inline OpFn op_of(uint32_t dom, uint32_t cod, Fn back) {
    if (back.dom != cod || back.cod != dom)
        throw std::logic_error("op_of: carrier mismatch");
    return OpFn{dom, cod, std::move(back)};
}

struct FinSetOpCat {
    using Obj = uint32_t;
    using Mor = OpFn;

    static Mor id(Obj n) { return {n, n, fn_id(n)}; }
    static Mor comp(const Mor& g, const Mor& f) {
        if (f.cod != g.dom) throw std::logic_error("op comp: mismatch");
        return {f.dom, g.cod, fn_comp(f.back, g.back)};
    }
    static bool eq(const Mor& a, const Mor& b) { return a == b; }

    static Obj tens(Obj a, Obj b) { return a * b; }
    static Obj unit() { return 1; }
    static Mor tens_mor(const Mor& f, const Mor& g) {
        return {f.dom * g.dom, f.cod * g.cod, fn_prod(f.back, g.back)};
    }
    static Mor alpha(Obj a, Obj b, Obj c) { return id(a * b * c); }
    static Mor alpha_inv(Obj a, Obj b, Obj c) { return id(a * b * c); }
    static Mor lambda(Obj a) { return id(a); }
    static Mor lambda_inv(Obj a) { return id(a); }
    static Mor rho(Obj a) { return id(a); }
    static Mor rho_inv(Obj a) { return id(a); }
    static Mor sigma(Obj a, Obj b) { return {a * b, b * a, fn_sigma(b, a)}; }

    // Monoid on every object: the duals of the comonoid components.
    static Mor e(Obj n) { return {1, n, fn_const(n, 1, 0)}; }
    static Mor d(Obj n) { return {n * n, n, fn_diag(n)}; }
};

// splitmix64; used to derive deterministic pseudo-random morphisms from a key
inline uint64_t mix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline Fn fn_sample(uint32_t dom, uint32_t cod, uint64_t key) {
    if (cod == 0 && dom != 0)
        throw std::logic_error("fn_sample: no functions into the empty set");
    Fn f{dom, cod, {}};
    f.tab.reserve(dom);
    for (uint32_t i = 0; i < dom; ++i)
        f.tab.push_back(uint32_t(mix64(key ^ (uint64_t(i) << 32)) % cod));
    return f;
}

} // namespace lpc::models
