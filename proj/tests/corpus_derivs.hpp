#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lpc/build.hpp"
#include "lpc/dual_axioms.hpp"
#include "lpc/replicate.hpp"

// A named collection of valid derivations that together exercise every rule
// of the calculus. The same builders back the checker unit tests and the
// generator for the on-disk script corpus.

namespace lpc::corpus {

inline std::vector<std::pair<std::string, Deriv>> all_rule_derivations() {
    using namespace lpc::build;
    std::vector<std::pair<std::string, Deriv>> out;
    auto add = [&](std::string n, Deriv d) { out.emplace_back(std::move(n), std::move(d)); };

    Prop T = top(), Z = zero(), I = one_l(), B = bot_l();
    Prop Ip = one_p(), Bc = bot_c();

    // -- leaves ------------------------------------------------------------
    add("ax_linear", ax(T));
    add("ax_producer_formula", ax(Ip));           // generic axiom on a producer
    add("ax_consumer_formula", ax(Bc));
    add("ax_p", ax_p(Ip));
    add("ax_p_compound", ax_p(tensor(Ip, Ip)));
    add("ax_c", ax_c(Bc));
    add("ax_c_compound", ax_c(par(Bc, Bc)));
    add("top_r", top_r({I, B}, {T}));
    add("top_r_crowded", top_r({Z}, {T, T, I}));
    add("zero_l", zero_l({Z}, {B}));
    add("zero_l_crowded", zero_l({Z, Z, T}, {}));
    add("one_r", one_r(I));
    add("bot_l", bot_l(B));
    add("one_p_r", one_p_r());
    add("bot_c_l", bot_c_l());

    // -- additives -----------------------------------------------------------
    add("with_l1", with_l(1, with(I, Z), ax(I)));
    add("with_l2", with_l(2, with(Z, I), ax(I)));
    add("with_r", with_r(with(I, I), one_r(I), one_r(I)));
    add("plus_r1", plus_r(1, plus(I, Z), one_r(I)));
    add("plus_r2", plus_r(2, plus(Z, I), one_r(I)));
    add("plus_l", plus_l(plus(I, Z), ax(I), zero_l({Z}, {I})));
    add("additive_unit_iso",  // T & 1 |- 1 and back: the retract half
        with_l(2, with(T, I), ax(I)));

    // -- linear multiplicatives ----------------------------------------------
    add("tensor_l", tensor_l(tensor(I, I), one_l(I, ax(I))));
    add("tensor_r", tensor_r(tensor(I, I), one_r(I), one_r(I)));
    add("tensor_comm",  // 1 (x) T |- T (x) 1
        tensor_l(tensor(I, T), tensor_r(tensor(T, I), ax(T), one_l(I, one_r(I)))));
    add("one_l", one_l(I, ax(T)));
    add("par_r", par_r(par(B, B), bot_r(B, ax(B))));
    add("par_l", par_l(par(B, B), bot_l(B), bot_l(B)));
    add("bot_r", bot_r(B, one_r(I)));
    add("par_assoc",  // B par (B par B) |- B, B, B
        par_l(par(B, par(B, B)), bot_l(B), par_l(par(B, B), bot_l(B), bot_l(B))));

    // -- persistent multiplicatives -------------------------------------------
    add("tensor_p_r", tensor_r(tensor(Ip, Ip), ax_p(Ip), ax_p(Ip)));
    add("tensor_p_l",
        tensor_l(tensor(Ip, Ip), tensor_r(tensor(Ip, Ip), ax_p(Ip), ax_p(Ip))));
    add("one_p_l", one_l(Ip, ax_p(Ip)));
    add("par_c_r", par_r(par(Bc, Bc), bot_r(Bc, ax_c(Bc))));
    add("par_c_l", par_l(par(Bc, Bc), ax_c(Bc), ax_c(Bc)));
    add("bot_c_r", bot_r(Bc, ax_c(Bc)));

    // -- adjunction rules ------------------------------------------------------
    add("fbang_l", fbang_l(fbang(Ip), ax(Ip)));
    add("fbang_r", fbang_r(fbang(Ip), one_p_r()));
    add("fwhy_l", fwhy_l(fwhy(Bc), bot_c_l()));
    add("fwhy_r", fwhy_r(fwhy(Bc), ax(Bc)));
    add("gbang_l", gbang_l(gbang(T), ax(T)));
    add("gbang_r", gbang_r(gbang(T), top_r({}, {T})));
    add("gbang_promote_ctx",  // promotion under a producer context
        gbang_r(gbang(T), top_r({Ip}, {T})));
    add("gwhy_l", gwhy_l(gwhy(B), bot_l(B)));
    add("gwhy_r", gwhy_r(gwhy(T), top_r({}, {T})));
    add("bang_counit",  // F! ! 1 |- 1 : the counit of the composite comonad
        fbang_l(fbang(gbang(I)), gbang_l(gbang(I), ax(I))));
    add("why_unit",  // B |- F? ? B
        fwhy_r(fwhy(gwhy(B)), gwhy_r(gwhy(B), ax(B))));

    // -- structural rules -------------------------------------------------------
    add("weak_l", weak_l(Ip, one_r(I)));
    add("weak_r", weak_r(Bc, one_r(I)));
    add("contr_l", contr_l(Ip, weak_l(Ip, weak_l(Ip, one_r(I)))));
    add("contr_r", contr_r(Bc, weak_r(Bc, weak_r(Bc, one_r(I)))));
    add("weak_p_l", weak_l(Ip, one_p_r()));
    add("weak_p_r", weak_r(Bc, one_p_r()));
    add("contr_p_l", contr_l(Ip, tensor_r(tensor(Ip, Ip), ax_p(Ip), ax_p(Ip))));
    add("contr_p_r", contr_r(Bc, par_l(par(Bc, Bc), ax_c(Bc), ax_c(Bc))));
    add("replicate_three",  // three copies contracted back to one
        replicate(weak_l(Ip, weak_l(Ip, weak_l(Ip, one_r(I)))), Side::Left, Ip, 3));

    // -- cuts ----------------------------------------------------------------------
    add("cut_l", make_cut(I, one_r(I), ax(I)));
    add("cut_l_tensor",
        make_cut(tensor(I, I), tensor_r(tensor(I, I), one_r(I), one_r(I)),
                 tensor_l(tensor(I, I), one_l(I, ax(I)))));
    add("cut_p", make_cut(Ip, one_p_r(), weak_l(Ip, one_r(I))));
    add("cut_p_pers", make_cut(Ip, one_p_r(), weak_l(Ip, one_p_r())));
    add("cut_c", make_cut(Bc, weak_r(Bc, one_r(I)), bot_c_l()));
    add("cut_c_pers", make_cut(Bc, weak_r(Bc, one_p_r()), bot_c_l()));

    // -- closed duality witnesses ---------------------------------------------------
    add("dual_witness_tensor", lin_dual_left(tensor(I, B)));
    add("dual_witness_with", lin_dual_right(with(T, I)));
    add("dual_witness_fbang", lin_dual_left(fbang(Ip)));
    add("dual_witness_producer", prod_dual_right(tensor(Ip, Ip)));
    add("dual_witness_gbang", prod_dual_left(gbang(I)));

    return out;
}

} // namespace lpc::corpus
