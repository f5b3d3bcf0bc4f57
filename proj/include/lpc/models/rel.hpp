#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpc/errors.hpp"
#include "lpc/models/finset.hpp"

namespace lpc::models {

// Sets and relations. An object is a carrier size; a morphism is a bit
// matrix, one row per domain element, each row a mask over the codomain.
// Tensor and par are both cartesian product with the same row-major
// flattening used everywhere else, negation is the identity on objects, and
// the exponential side is powerset (as a direct-image function) against the
// forgetful inclusion of functions into relations.

struct BRel {
    uint32_t rows = 0, cols = 0;
    uint32_t w = 0; // 64-bit words per row
    std::vector<uint64_t> bits;

    bool operator==(const BRel&) const = default;
    bool get(uint32_t r, uint32_t c) const {
        return (bits[size_t(r) * w + c / 64] >> (c % 64)) & 1;
    }
    void set(uint32_t r, uint32_t c) {
        bits[size_t(r) * w + c / 64] |= uint64_t(1) << (c % 64);
    }
};

inline BRel brel_zero(uint32_t rows, uint32_t cols) {
    BRel r{rows, cols, (cols + 63) / 64, {}};
    r.bits.assign(size_t(rows) * r.w, 0);
    return r;
}

inline BRel brel_id(uint32_t n) {
    BRel r = brel_zero(n, n);
    for (uint32_t i = 0; i < n; ++i) r.set(i, i);
    return r;
}

inline BRel brel_comp(const BRel& g, const BRel& f) {
    if (f.cols != g.rows) throw std::logic_error("brel_comp: shape mismatch");
    BRel r = brel_zero(f.rows, g.cols);
    for (uint32_t x = 0; x < f.rows; ++x)
        for (uint32_t b = 0; b < f.cols; ++b)
            if (f.get(x, b))
                for (uint32_t k = 0; k < r.w; ++k)
                    r.bits[size_t(x) * r.w + k] |= g.bits[size_t(b) * g.w + k];
    return r;
}

inline BRel brel_union(const BRel& a, const BRel& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw std::logic_error("brel_union: shape mismatch");
    BRel r = a;
    for (size_t i = 0; i < r.bits.size(); ++i) r.bits[i] |= b.bits[i];
    return r;
}

inline BRel brel_transpose(const BRel& f) {
    BRel r = brel_zero(f.cols, f.rows);
    for (uint32_t x = 0; x < f.rows; ++x)
        for (uint32_t y = 0; y < f.cols; ++y)
            if (f.get(x, y)) r.set(y, x);
    return r;
}

inline BRel brel_tens(const BRel& f, const BRel& g) {
    BRel r = brel_zero(f.rows * g.rows, f.cols * g.cols);
    for (uint32_t x1 = 0; x1 < f.rows; ++x1)
        for (uint32_t y1 = 0; y1 < f.cols; ++y1) {
            if (!f.get(x1, y1)) continue;
            for (uint32_t x2 = 0; x2 < g.rows; ++x2)
                for (uint32_t y2 = 0; y2 < g.cols; ++y2)
                    if (g.get(x2, y2))
                        r.set(x1 * g.rows + x2, y1 * g.cols + y2);
        }
    return r;
}

inline BRel brel_graph(const Fn& f) {
    BRel r = brel_zero(f.dom, f.cod);
    for (uint32_t x = 0; x < f.dom; ++x) r.set(x, f.tab[x]);
    return r;
}

struct RelModel {
    using LObj = uint32_t;
    using LMor = BRel;
    using PObj = FinSetCat::Obj;
    using PMor = FinSetCat::Mor;
    using CObj = FinSetOpCat::Obj;
    using CMor = FinSetOpCat::Mor;

    static constexpr bool has_negation = true;
    static constexpr bool has_additives = true;
    static constexpr bool has_gwhy = true;
    static constexpr bool has_fbang_monoidal = true;
    static constexpr bool has_fwhy_comonoidal = true;
    static constexpr bool has_lower_comonoidal = true;
    static constexpr bool has_interp = true;

    uint32_t limit;

    explicit RelModel(uint32_t limit_ = 4096) : limit(limit_) {}

    std::string name() const { return "rel"; }

    uint32_t guard(uint64_t n, const char* what) const {
        if (n > limit)
            throw domain_too_large(std::string(what) + " of size " +
                                   std::to_string(n) + " exceeds limit " +
                                   std::to_string(limit));
        return uint32_t(n);
    }

    // --- L: relations -----------------------------------------------------
    LMor l_id(LObj n) const { return brel_id(n); }
    LMor l_comp(const LMor& g, const LMor& f) const { return brel_comp(g, f); }
    bool l_eq(const LMor& a, const LMor& b) const { return a == b; }
    LObj l_dom(const LMor& f) const { return f.rows; }
    LObj l_cod(const LMor& f) const { return f.cols; }

    LObj lt(LObj a, LObj b) const { return guard(uint64_t(a) * b, "tensor"); }
    LObj lt_unit() const { return 1; }
    LMor lt_mor(const LMor& f, const LMor& g) const { return brel_tens(f, g); }
    LMor lt_alpha(LObj a, LObj b, LObj c) const { return brel_id(a * b * c); }
    LMor lt_alpha_inv(LObj a, LObj b, LObj c) const { return brel_id(a * b * c); }
    LMor lt_lambda(LObj a) const { return brel_id(a); }
    LMor lt_lambda_inv(LObj a) const { return brel_id(a); }
    LMor lt_rho(LObj a) const { return brel_id(a); }
    LMor lt_rho_inv(LObj a) const { return brel_id(a); }
    LMor lt_sigma(LObj a, LObj b) const { return brel_graph(fn_sigma(a, b)); }

    LObj lp(LObj a, LObj b) const { return lt(a, b); }
    LObj lp_unit() const { return 1; }
    LMor lp_mor(const LMor& f, const LMor& g) const { return brel_tens(f, g); }
    LMor lp_alpha(LObj a, LObj b, LObj c) const { return brel_id(a * b * c); }
    LMor lp_alpha_inv(LObj a, LObj b, LObj c) const { return brel_id(a * b * c); }
    LMor lp_lambda(LObj a) const { return brel_id(a); }
    LMor lp_lambda_inv(LObj a) const { return brel_id(a); }
    LMor lp_rho(LObj a) const { return brel_id(a); }
    LMor lp_rho_inv(LObj a) const { return brel_id(a); }
    LMor lp_sigma(LObj a, LObj b) const { return lt_sigma(a, b); }

    LMor delta(LObj a, LObj b, LObj c) const { return brel_id(a * b * c); }

    LObj l_neg(LObj a) const { return a; }
    LMor gamma_bot(LObj a) const {
        BRel r = brel_zero(a * a, 1);
        for (uint32_t v = 0; v < a; ++v) r.set(v * a + v, 0);
        return r;
    }
    LMor gamma_one(LObj a) const {
        BRel r = brel_zero(1, a * a);
        for (uint32_t v = 0; v < a; ++v) r.set(0, v * a + v);
        return r;
    }

    LObj l_add(LObj a, LObj b) const { return guard(uint64_t(a) + b, "sum"); }
    LObj l_zero() const { return 0; }
    LMor l_zero_mor(LObj a, LObj b) const { return brel_zero(a, b); }
    LMor l_inj1(LObj a, LObj b) const {
        BRel r = brel_zero(a, a + b);
        for (uint32_t i = 0; i < a; ++i) r.set(i, i);
        return r;
    }
    LMor l_inj2(LObj a, LObj b) const {
        BRel r = brel_zero(b, a + b);
        for (uint32_t i = 0; i < b; ++i) r.set(i, a + i);
        return r;
    }
    LMor l_proj1(LObj a, LObj b) const { return brel_transpose(l_inj1(a, b)); }
    LMor l_proj2(LObj a, LObj b) const { return brel_transpose(l_inj2(a, b)); }
    LMor l_pair(const LMor& f, const LMor& g) const {
        LObj a = f.cols, b = g.cols;
        return brel_union(brel_comp(l_inj1(a, b), f), brel_comp(l_inj2(a, b), g));
    }
    LMor l_copair(const LMor& f, const LMor& g) const {
        LObj a = f.rows, b = g.rows;
        return brel_union(brel_comp(f, l_proj1(a, b)), brel_comp(g, l_proj2(a, b)));
    }

    // --- P and C: finite sets and their opposite ---------------------------
    PMor p_id(PObj n) const { return FinSetCat::id(n); }
    PMor p_comp(const PMor& g, const PMor& f) const { return FinSetCat::comp(g, f); }
    bool p_eq(const PMor& a, const PMor& b) const { return a == b; }
    PObj pt(PObj a, PObj b) const { return guard(uint64_t(a) * b, "P tensor"); }
    PObj pt_unit() const { return 1; }
    PMor pt_mor(const PMor& f, const PMor& g) const { return FinSetCat::tens_mor(f, g); }
    PMor pt_alpha(PObj a, PObj b, PObj c) const { return FinSetCat::alpha(a, b, c); }
    PMor pt_alpha_inv(PObj a, PObj b, PObj c) const { return FinSetCat::alpha(a, b, c); }
    PMor pt_lambda(PObj a) const { return FinSetCat::lambda(a); }
    PMor pt_lambda_inv(PObj a) const { return FinSetCat::lambda(a); }
    PMor pt_rho(PObj a) const { return FinSetCat::rho(a); }
    PMor pt_rho_inv(PObj a) const { return FinSetCat::rho(a); }
    PMor pt_sigma(PObj a, PObj b) const { return FinSetCat::sigma(a, b); }
    PMor e_p(PObj n) const { return FinSetCat::e(n); }
    PMor d_p(PObj n) const { return FinSetCat::d(n); }

    CMor c_id(CObj n) const { return FinSetOpCat::id(n); }
    CMor c_comp(const CMor& g, const CMor& f) const { return FinSetOpCat::comp(g, f); }
    bool c_eq(const CMor& a, const CMor& b) const { return a == b; }
    CObj cp(CObj a, CObj b) const { return guard(uint64_t(a) * b, "C par"); }
    CObj cp_unit() const { return 1; }
    CMor cp_mor(const CMor& f, const CMor& g) const { return FinSetOpCat::tens_mor(f, g); }
    CMor cp_alpha(CObj a, CObj b, CObj c) const { return FinSetOpCat::alpha(a, b, c); }
    CMor cp_alpha_inv(CObj a, CObj b, CObj c) const { return FinSetOpCat::alpha(a, b, c); }
    CMor cp_lambda(CObj a) const { return FinSetOpCat::lambda(a); }
    CMor cp_lambda_inv(CObj a) const { return FinSetOpCat::lambda(a); }
    CMor cp_rho(CObj a) const { return FinSetOpCat::rho(a); }
    CMor cp_rho_inv(CObj a) const { return FinSetOpCat::rho(a); }
    CMor cp_sigma(CObj a, CObj b) const { return FinSetOpCat::sigma(a, b); }
    CMor e_c(CObj n) const { return FinSetOpCat::e(n); }
    CMor d_c(CObj n) const { return FinSetOpCat::d(n); }

    // --- duality ------------------------------------------------------------
    CObj star_obj(PObj p) const { return p; }
    CMor star_mor(const PMor& f) const { return op_of(f.cod, f.dom, f); }
    PObj lower_obj(CObj c) const { return c; }
    PMor lower_mor(const CMor& g) const { return g.back; }
    PMor eta_ss(PObj p) const { return fn_id(p); }
    PMor eta_ss_inv(PObj p) const { return fn_id(p); }
    CMor eps_ss(CObj c) const { return FinSetOpCat::id(c); }
    CMor eps_ss_inv(CObj c) const { return FinSetOpCat::id(c); }
    PMor lower_m(CObj c, CObj d) const { return fn_id(c * d); }
    PMor lower_m_inv(CObj c, CObj d) const { return fn_id(c * d); }
    PMor lower_m1() const { return fn_id(1); }
    PMor lower_m1_inv() const { return fn_id(1); }
    CMor star_m(PObj p, PObj r) const { return FinSetOpCat::id(p * r); }
    CMor star_m1() const { return FinSetOpCat::id(1); }

    // --- powerset bookkeeping ------------------------------------------------
    // A subset of {0..n-1} is indexed by its bitmask, so the carrier of a
    // powerset is 2^n and the ordering is the usual mask order.
    uint32_t carrier(LObj n) const {
        if (n > 20 || (uint64_t(1) << n) > limit)
            throw domain_too_large("powerset 2^" + std::to_string(n) +
                                   " exceeds limit " + std::to_string(limit));
        return uint32_t(1) << n;
    }
    uint32_t image_mask(const LMor& f, uint32_t mask) const {
        uint32_t out = 0;
        for (uint32_t x = 0; x < f.rows; ++x)
            if ((mask >> x) & 1)
                for (uint32_t y = 0; y < f.cols; ++y)
                    if (f.get(x, y)) out |= uint32_t(1) << y;
        return out;
    }

    // --- functors --------------------------------------------------------------
    PObj gbang_obj(LObj a) const { return carrier(a); }
    PMor gbang_mor(const LMor& f) const {
        Fn t{carrier(f.rows), carrier(f.cols), {}};
        t.tab.reserve(t.dom);
        for (uint32_t m = 0; m < t.dom; ++m) t.tab.push_back(image_mask(f, m));
        return t;
    }
    PMor gbang_m(LObj a, LObj b) const {
        uint32_t ca = carrier(a), cb = carrier(b);
        Fn t{ca * cb, carrier(lt(a, b)), {}};
        t.tab.resize(t.dom);
        for (uint32_t x = 0; x < ca; ++x)
            for (uint32_t y = 0; y < cb; ++y) {
                uint32_t prod = 0;
                for (uint32_t i = 0; i < a; ++i)
                    if ((x >> i) & 1)
                        for (uint32_t j = 0; j < b; ++j)
                            if ((y >> j) & 1) prod |= uint32_t(1) << (i * b + j);
                t.tab[x * cb + y] = prod;
            }
        return t;
    }
    PMor gbang_m1() const {
        Fn t{1, 2, {}};
        t.tab = {1}; // the full singleton subset, not the empty one
        return t;
    }

    LObj fbang_obj(PObj p) const { return guard(p, "carrier"); }
    LMor fbang_mor(const PMor& f) const { return brel_graph(f); }
    LMor fbang_m(PObj p, PObj r) const { return brel_id(p * r); }
    LMor fbang_m_inv(PObj p, PObj r) const { return brel_id(p * r); }
    LMor fbang_m1() const { return brel_id(1); }
    LMor fbang_m1_inv() const { return brel_id(1); }

    CObj gwhy_obj(LObj a) const { return carrier(a); }
    CMor gwhy_mor(const LMor& f) const {
        BRel ft = brel_transpose(f);
        Fn back{carrier(f.cols), carrier(f.rows), {}};
        back.tab.reserve(back.dom);
        for (uint32_t m = 0; m < back.dom; ++m) back.tab.push_back(image_mask(ft, m));
        return op_of(carrier(f.rows), carrier(f.cols), std::move(back));
    }
    CMor gwhy_n(LObj a, LObj b) const {
        PMor m = gbang_m(a, b);
        return op_of(m.cod, m.dom, m);
    }
    CMor gwhy_n1() const {
        PMor m = gbang_m1();
        return op_of(m.cod, m.dom, m);
    }

    LObj fwhy_obj(CObj c) const { return guard(c, "carrier"); }
    LMor fwhy_mor(const CMor& g) const { return brel_transpose(brel_graph(g.back)); }
    LMor fwhy_n(CObj c, CObj d) const { return brel_id(c * d); }
    LMor fwhy_n_inv(CObj c, CObj d) const { return brel_id(c * d); }
    LMor fwhy_n1() const { return brel_id(1); }
    LMor fwhy_n1_inv() const { return brel_id(1); }

    // --- adjunction components -----------------------------------------------
    LMor eps_bang(LObj a) const {
        uint32_t c = carrier(a);
        BRel r = brel_zero(c, a);
        for (uint32_t m = 0; m < c; ++m)
            for (uint32_t x = 0; x < a; ++x)
                if ((m >> x) & 1) r.set(m, x);
        return r;
    }
    PMor eta_bang(PObj p) const {
        Fn t{p, carrier(fbang_obj(p)), {}};
        t.tab.resize(p);
        for (uint32_t x = 0; x < p; ++x) t.tab[x] = uint32_t(1) << x;
        return t;
    }
    LMor unit_why(LObj a) const { return brel_transpose(eps_bang(a)); }
    CMor counit_why(CObj c) const {
        Fn back{c, carrier(fwhy_obj(c)), {}};
        back.tab.resize(c);
        for (uint32_t x = 0; x < c; ++x) back.tab[x] = uint32_t(1) << x;
        return op_of(carrier(fwhy_obj(c)), c, std::move(back));
    }

    // --- duality-respect isomorphisms (all identities here) --------------------
    LMor dual_f(PObj p) const { return brel_id(p); }
    LMor dual_f_inv(PObj p) const { return brel_id(p); }
    LMor dual_f2(CObj c) const { return brel_id(c); }
    LMor dual_f2_inv(CObj c) const { return brel_id(c); }
    CMor dual_g(LObj a) const { return FinSetOpCat::id(carrier(a)); }
    CMor dual_g_inv(LObj a) const { return FinSetOpCat::id(carrier(a)); }

    // --- law-check support: object enumeration and keyed morphism sampling ----
    // P and C exclude the empty carrier so hom sampling is always possible.
    std::vector<LObj> l_objects(uint32_t max_size) const {
        std::vector<LObj> out;
        for (uint32_t n = 0; n <= max_size; ++n) out.push_back(n);
        return out;
    }
    std::vector<PObj> p_objects(uint32_t max_size) const {
        std::vector<PObj> out;
        for (uint32_t n = 1; n <= max_size; ++n) out.push_back(n);
        return out;
    }
    std::vector<CObj> c_objects(uint32_t max_size) const { return p_objects(max_size); }

    LMor l_sample(LObj a, LObj b, uint64_t key) const {
        BRel r = brel_zero(a, b);
        for (uint32_t x = 0; x < a; ++x)
            for (uint32_t y = 0; y < b; ++y)
                if (mix64(key ^ (uint64_t(x) * 0x10001ULL + y)) & 1) r.set(x, y);
        return r;
    }
    PMor p_sample(PObj a, PObj b, uint64_t key) const { return fn_sample(a, b, key); }
    CMor c_sample(CObj a, CObj b, uint64_t key) const {
        return op_of(a, b, fn_sample(b, a, key));
    }
};

} // namespace lpc::models
