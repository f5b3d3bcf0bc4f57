#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lpc/errors.hpp"
#include "lpc/models/finset.hpp"

namespace lpc::models {

// Finite-dimensional vector spaces over a prime field GF(q). An object is
// just a dimension; a morphism is a dense matrix (rows = codomain) with
// entries reduced mod q. Tensor is Kronecker product with row-major
// flattening — basis (i, j) of V (x) W sits at index i*dim(W) + j — so the
// associator and unitors are identity matrices and par coincides with
// tensor on the nose. Duals are identified with their primal spaces
// basis-wise, which makes every "respects duality" isomorphism an identity
// matrix as well.

struct Mat {
    uint32_t rows = 0, cols = 0;
    std::vector<uint8_t> a; // row-major, a[r*cols + c]

    bool operator==(const Mat&) const = default;
    uint8_t at(uint32_t r, uint32_t c) const { return a[size_t(r) * cols + c]; }
    uint8_t& at(uint32_t r, uint32_t c) { return a[size_t(r) * cols + c]; }
};

inline Mat mat_zero(uint32_t rows, uint32_t cols) {
    Mat m{rows, cols, {}};
    m.a.assign(size_t(rows) * cols, 0);
    return m;
}

inline Mat mat_id(uint32_t n) {
    Mat m = mat_zero(n, n);
    for (uint32_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

inline Mat mat_mul(const Mat& g, const Mat& f, uint32_t q) {
    if (g.cols != f.rows) throw std::logic_error("mat_mul: shape mismatch");
    Mat m = mat_zero(g.rows, f.cols);
    for (uint32_t i = 0; i < g.rows; ++i)
        for (uint32_t k = 0; k < g.cols; ++k) {
            uint32_t gik = g.at(i, k);
            if (!gik) continue;
            for (uint32_t j = 0; j < f.cols; ++j)
                m.at(i, j) = uint8_t((m.at(i, j) + gik * f.at(k, j)) % q);
        }
    return m;
}

inline Mat mat_kron(const Mat& f, const Mat& g, uint32_t q) {
    Mat m = mat_zero(f.rows * g.rows, f.cols * g.cols);
    for (uint32_t i1 = 0; i1 < f.rows; ++i1)
        for (uint32_t j1 = 0; j1 < f.cols; ++j1) {
            uint32_t v = f.at(i1, j1);
            if (!v) continue;
            for (uint32_t i2 = 0; i2 < g.rows; ++i2)
                for (uint32_t j2 = 0; j2 < g.cols; ++j2)
                    m.at(i1 * g.rows + i2, j1 * g.cols + j2) =
                        uint8_t((v * g.at(i2, j2)) % q);
        }
    return m;
}

inline Mat mat_transpose(const Mat& f) {
    Mat m = mat_zero(f.cols, f.rows);
    for (uint32_t i = 0; i < f.rows; ++i)
        for (uint32_t j = 0; j < f.cols; ++j) m.at(j, i) = f.at(i, j);
    return m;
}

struct FinVectModel {
    using LObj = uint32_t; // dimension
    using LMor = Mat;
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

    uint32_t q;
    uint32_t limit; // largest dimension / carrier we agree to build

    explicit FinVectModel(uint32_t q_ = 2, uint32_t limit_ = 4096)
        : q(q_), limit(limit_) {
        if (q < 2 || q > 7 || (q != 2 && q != 3 && q != 5 && q != 7))
            throw std::invalid_argument("finvect: q must be a prime <= 7");
    }

    std::string name() const { return "finvect(q=" + std::to_string(q) + ")"; }

    uint32_t guard(uint64_t n, const char* what) const {
        if (n > limit)
            throw domain_too_large(std::string(what) + " of size " +
                                   std::to_string(n) + " exceeds limit " +
                                   std::to_string(limit));
        return uint32_t(n);
    }

    // --- L: vector spaces ---------------------------------------------
    LMor l_id(LObj n) const { return mat_id(n); }
    LMor l_comp(const LMor& g, const LMor& f) const { return mat_mul(g, f, q); }
    bool l_eq(const LMor& a, const LMor& b) const { return a == b; }
    LObj l_dom(const LMor& f) const { return f.cols; }
    LObj l_cod(const LMor& f) const { return f.rows; }

    LObj lt(LObj a, LObj b) const { return guard(uint64_t(a) * b, "tensor"); }
    LObj lt_unit() const { return 1; }
    LMor lt_mor(const LMor& f, const LMor& g) const { return mat_kron(f, g, q); }
    LMor lt_alpha(LObj a, LObj b, LObj c) const { return mat_id(a * b * c); }
    LMor lt_alpha_inv(LObj a, LObj b, LObj c) const { return mat_id(a * b * c); }
    LMor lt_lambda(LObj a) const { return mat_id(a); }
    LMor lt_lambda_inv(LObj a) const { return mat_id(a); }
    LMor lt_rho(LObj a) const { return mat_id(a); }
    LMor lt_rho_inv(LObj a) const { return mat_id(a); }
    LMor lt_sigma(LObj a, LObj b) const {
        Mat m = mat_zero(a * b, a * b);
        for (uint32_t x = 0; x < a; ++x)
            for (uint32_t y = 0; y < b; ++y) m.at(y * a + x, x * b + y) = 1;
        return m;
    }

    // par is tensor on the nose in this model
    LObj lp(LObj a, LObj b) const { return lt(a, b); }
    LObj lp_unit() const { return 1; }
    LMor lp_mor(const LMor& f, const LMor& g) const { return lt_mor(f, g); }
    LMor lp_alpha(LObj a, LObj b, LObj c) const { return lt_alpha(a, b, c); }
    LMor lp_alpha_inv(LObj a, LObj b, LObj c) const { return lt_alpha(a, b, c); }
    LMor lp_lambda(LObj a) const { return mat_id(a); }
    LMor lp_lambda_inv(LObj a) const { return mat_id(a); }
    LMor lp_rho(LObj a) const { return mat_id(a); }
    LMor lp_rho_inv(LObj a) const { return mat_id(a); }
    LMor lp_sigma(LObj a, LObj b) const { return lt_sigma(a, b); }

    // linear distribution a (x) (b par c) -> (a (x) b) par c
    LMor delta(LObj a, LObj b, LObj c) const { return mat_id(a * b * c); }

    // negation: the dual space, identified with the primal basis-wise
    LObj l_neg(LObj a) const { return a; }
    // neg(a) (x) a -> bot,  (u~ (x) v) |-> u~(v)
    LMor gamma_bot(LObj a) const {
        Mat m = mat_zero(1, a * a);
        for (uint32_t v = 0; v < a; ++v) m.at(0, v * a + v) = 1;
        return m;
    }
    // one -> a par neg(a),  1 |-> sum_v v (x) v~
    LMor gamma_one(LObj a) const {
        Mat m = mat_zero(a * a, 1);
        for (uint32_t v = 0; v < a; ++v) m.at(v * a + v, 0) = 1;
        return m;
    }

    // additive structure: direct sum is a biproduct and both units are the
    // zero space
    LObj l_add(LObj a, LObj b) const { return guard(uint64_t(a) + b, "sum"); }
    LObj l_zero() const { return 0; }
    LMor l_zero_mor(LObj a, LObj b) const { return mat_zero(b, a); }
    LMor l_inj1(LObj a, LObj b) const {
        Mat m = mat_zero(a + b, a);
        for (uint32_t i = 0; i < a; ++i) m.at(i, i) = 1;
        return m;
    }
    LMor l_inj2(LObj a, LObj b) const {
        Mat m = mat_zero(a + b, b);
        for (uint32_t i = 0; i < b; ++i) m.at(a + i, i) = 1;
        return m;
    }
    LMor l_proj1(LObj a, LObj b) const { return mat_transpose(l_inj1(a, b)); }
    LMor l_proj2(LObj a, LObj b) const { return mat_transpose(l_inj2(a, b)); }
    LMor l_pair(const LMor& f, const LMor& g) const {
        if (f.cols != g.cols) throw std::logic_error("pair: domain mismatch");
        Mat m = mat_zero(f.rows + g.rows, f.cols);
        for (uint32_t i = 0; i < f.rows; ++i)
            for (uint32_t j = 0; j < f.cols; ++j) m.at(i, j) = f.at(i, j);
        for (uint32_t i = 0; i < g.rows; ++i)
            for (uint32_t j = 0; j < g.cols; ++j) m.at(f.rows + i, j) = g.at(i, j);
        return m;
    }
    LMor l_copair(const LMor& f, const LMor& g) const {
        if (f.rows != g.rows) throw std::logic_error("copair: codomain mismatch");
        Mat m = mat_zero(f.rows, f.cols + g.cols);
        for (uint32_t i = 0; i < f.rows; ++i) {
            for (uint32_t j = 0; j < f.cols; ++j) m.at(i, j) = f.at(i, j);
            for (uint32_t j = 0; j < g.cols; ++j) m.at(i, f.cols + j) = g.at(i, j);
        }
        return m;
    }

    // --- P and C: finite sets and their opposite -----------------------
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

    // --- duality between P and C ---------------------------------------
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

    // --- vector enumeration for the forgetful functor -------------------
    // A vector of dimension n is indexed little-endian by its coordinates:
    // index = sum_i coord(i) * q^i, so the basis vector e_x has index q^x.
    uint32_t carrier(LObj n) const {
        uint64_t c = 1;
        for (uint32_t i = 0; i < n; ++i) {
            c *= q;
            if (c > limit)
                throw domain_too_large("vector carrier q^" + std::to_string(n) +
                                       " exceeds limit " + std::to_string(limit));
        }
        return uint32_t(c);
    }
    uint8_t coord(uint32_t idx, uint32_t i) const {
        uint32_t p = 1;
        for (uint32_t k = 0; k < i; ++k) p *= q;
        return uint8_t((idx / p) % q);
    }
    uint32_t apply_to_vector(const LMor& f, uint32_t idx) const {
        uint32_t out = 0, p = 1;
        for (uint32_t r = 0; r < f.rows; ++r) {
            uint32_t acc = 0;
            for (uint32_t c = 0; c < f.cols; ++c)
                acc += f.at(r, c) * coord(idx, c);
            out += (acc % q) * p;
            p *= q;
        }
        return out;
    }

    // --- functors -------------------------------------------------------
    // G! forgets a space down to its set of vectors.
    PObj gbang_obj(LObj a) const { return carrier(a); }
    PMor gbang_mor(const LMor& f) const {
        Fn t{carrier(f.cols), carrier(f.rows), {}};
        t.tab.reserve(t.dom);
        for (uint32_t v = 0; v < t.dom; ++v) t.tab.push_back(apply_to_vector(f, v));
        return t;
    }
    PMor gbang_m(LObj a, LObj b) const {
        // (u, w) |-> u (x) w
        uint32_t ca = carrier(a), cb = carrier(b);
        Fn t{ca * cb, carrier(lt(a, b)), {}};
        t.tab.resize(t.dom);
        for (uint32_t u = 0; u < ca; ++u)
            for (uint32_t w = 0; w < cb; ++w) {
                // basis (i, j) of the tensor sits at i*b + j; walking in
                // that order lets p track q^(i*b+j)
                uint32_t idx = 0, p = 1;
                for (uint32_t i = 0; i < a; ++i)
                    for (uint32_t j = 0; j < b; ++j) {
                        idx += (coord(u, i) * coord(w, j) % q) * p;
                        p *= q;
                    }
                t.tab[u * cb + w] = idx;
            }
        return t;
    }
    PMor gbang_m1() const {
        Fn t{1, carrier(1), {}};
        t.tab = {1}; // the unit vector of the one-dimensional space
        return t;
    }

    // F! builds the free space on a set; functions become 0/1 matrices.
    LObj fbang_obj(PObj p) const { return guard(p, "free space"); }
    LMor fbang_mor(const PMor& f) const {
        Mat m = mat_zero(f.cod, f.dom);
        for (uint32_t x = 0; x < f.dom; ++x) m.at(f.tab[x], x) = 1;
        return m;
    }
    LMor fbang_m(PObj p, PObj r) const { return mat_id(p * r); }
    LMor fbang_m_inv(PObj p, PObj r) const { return mat_id(p * r); }
    LMor fbang_m1() const { return mat_id(1); }
    LMor fbang_m1_inv() const { return mat_id(1); }

    // G? is the dual forgetful functor: a space goes to the vector set of
    // its dual, and a map acts by precomposition (transpose).
    CObj gwhy_obj(LObj a) const { return carrier(a); }
    CMor gwhy_mor(const LMor& f) const {
        Mat ft = mat_transpose(f);
        Fn back{carrier(f.rows), carrier(f.cols), {}};
        back.tab.reserve(back.dom);
        for (uint32_t w = 0; w < back.dom; ++w)
            back.tab.push_back(apply_to_vector(ft, w));
        return op_of(carrier(f.cols), carrier(f.rows), std::move(back));
    }
    CMor gwhy_n(LObj a, LObj b) const {
        // G?(a par b) -> G?a par G?b; its carrier function pairs dual
        // vectors exactly the way gbang_m pairs vectors
        PMor m = gbang_m(a, b);
        return op_of(m.cod, m.dom, m);
    }
    CMor gwhy_n1() const {
        PMor m = gbang_m1();
        return op_of(m.cod, m.dom, m);
    }

    // F? builds the free space on a consumer carrier; an opposite function
    // becomes the transpose of the corresponding free map.
    LObj fwhy_obj(CObj c) const { return guard(c, "cofree space"); }
    LMor fwhy_mor(const CMor& g) const { return mat_transpose(fbang_mor(g.back)); }
    LMor fwhy_n(CObj c, CObj d) const { return mat_id(c * d); }
    LMor fwhy_n_inv(CObj c, CObj d) const { return mat_id(c * d); }
    LMor fwhy_n1() const { return mat_id(1); }
    LMor fwhy_n1_inv() const { return mat_id(1); }

    // --- adjunction components ------------------------------------------
    // F! -| G!  with counit eps(delta_v) = v and unit eta(x) = delta_x.
    LMor eps_bang(LObj a) const {
        uint32_t c = carrier(a);
        Mat m = mat_zero(a, c);
        for (uint32_t v = 0; v < c; ++v)
            for (uint32_t i = 0; i < a; ++i) m.at(i, v) = coord(v, i);
        return m;
    }
    PMor eta_bang(PObj p) const {
        Fn t{p, carrier(fbang_obj(p)), {}};
        t.tab.resize(p);
        uint32_t pw = 1;
        for (uint32_t x = 0; x < p; ++x) { t.tab[x] = pw; pw *= q; }
        return t;
    }

    // G? -| F?  with unit A -> F?G?A the transpose of eps at the dual.
    LMor unit_why(LObj a) const { return mat_transpose(eps_bang(a)); }
    CMor counit_why(CObj c) const {
        Fn back{c, carrier(fwhy_obj(c)), {}};
        back.tab.resize(c);
        uint32_t pw = 1;
        for (uint32_t x = 0; x < c; ++x) { back.tab[x] = pw; pw *= q; }
        return op_of(carrier(fwhy_obj(c)), c, std::move(back));
    }

    // --- duality-respect isomorphisms ------------------------------------
    // neg(F! P) = F?(P*) and star(G! A) = G?(neg A) hold on the nose.
    LMor dual_f(PObj p) const { return mat_id(p); }
    LMor dual_f_inv(PObj p) const { return mat_id(p); }
    // neg(F? C) = F!(lower C) likewise.
    LMor dual_f2(CObj c) const { return mat_id(c); }
    LMor dual_f2_inv(CObj c) const { return mat_id(c); }
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
        Mat m = mat_zero(b, a);
        for (uint32_t i = 0; i < b; ++i)
            for (uint32_t j = 0; j < a; ++j)
                m.at(i, j) = uint8_t(mix64(key ^ (uint64_t(i) * 0x10001ULL + j)) % q);
        return m;
    }
    PMor p_sample(PObj a, PObj b, uint64_t key) const { return fn_sample(a, b, key); }
    CMor c_sample(CObj a, CObj b, uint64_t key) const {
        return op_of(a, b, fn_sample(b, a, key));
    }
};

} // namespace lpc::models
