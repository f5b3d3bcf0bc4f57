#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "lpc/sequent.hpp"

namespace lpc {

// Every inference rule of the calculus. The tensor/par/one/bot linear rules
// are mode-generic: they accept the producer (resp. consumer) unit and
// binary forms alongside the linear ones, which is what makes persistent
// material movable through linear derivations.
enum class RuleId : uint8_t {
    // linear identity and logical rules
    Ax,        // X |- X, any mode
    TopR,      // Γ |- Δ, T
    ZeroL,     // Γ, 0 |- Δ
    WithL1,    // Γ, A1 |- Δ  =>  Γ, A1 & A2 |- Δ
    WithL2,
    WithR,     // additive: shared contexts
    PlusR1,
    PlusR2,
    PlusL,     // additive
    TensorL,   // Γ, X1, X2 |- Δ  =>  Γ, X1 (x) X2 |- Δ      (modes L and P)
    TensorR,   // multiplicative split                        (modes L and P)
    OneL,      // modes L and P
    OneR,      // exactly  |- 1                               (modes L and P)
    ParL,      // multiplicative split                        (modes L and C)
    ParR,      // modes L and C
    BotL,      // exactly  B |-                               (modes L and C)
    BotR,      // modes L and C
    // persistent rules
    AxP,       // P ||- P
    AxC,       // C ||- C
    TensorPL,  // Γ, P1, P2 ||- Δ  =>  Γ, P1 (x) P2 ||- Δ
    TensorPR,  // split; premises are producer-left / consumer-right + P_i
    OnePL,
    OnePR,     // exactly  ||- 1p
    ParCL,     // split; premises are producer-left + C_i / consumer-right
    ParCR,
    BotCL,     // exactly  Bc ||-
    BotCR,
    // adjunction rules
    FBangL,    // Γ, P |- Δ        =>  Γ, F! P |- Δ
    FBangR,    // Γp ||- Δc, P     =>  Γp |- Δc, F! P
    FWhyL,     // Γp, C ||- Δc     =>  Γp, F? C |- Δc
    FWhyR,     // Γ |- Δ, C        =>  Γ |- Δ, F? C
    GBangL,    // Γ, A |- Δ        =>  Γ, ! A |- Δ
    GBangR,    // Γp |- Δc, A      =>  Γp ||- Δc, ! A
    GWhyL,     // Γp, A |- Δc      =>  Γp, ? A ||- Δc
    GWhyR,     // Γ |- Δ, A        =>  Γ |- Δ, ? A
    // structural rules (producers on the left, consumers on the right)
    WeakL,
    WeakR,
    ContrL,
    ContrR,
    WeakPL,
    WeakPR,
    ContrPL,
    ContrPR,
    // cuts
    CutL,      // linear cut formula, both premises |-
    CutP,      // producer cut: persistent premise on the left of the cut
    CutPPers,  // producer cut with persistent right premise and conclusion
    CutC,      // consumer cut: persistent premise on the right of the cut
    CutCPers,  // consumer cut with persistent left premise and conclusion
};

constexpr int kRuleCount = static_cast<int>(RuleId::CutCPers) + 1;

inline const char* rule_name(RuleId r) {
    switch (r) {
        case RuleId::Ax: return "ax";
        case RuleId::TopR: return "top-r";
        case RuleId::ZeroL: return "zero-l";
        case RuleId::WithL1: return "with-l1";
        case RuleId::WithL2: return "with-l2";
        case RuleId::WithR: return "with-r";
        case RuleId::PlusR1: return "plus-r1";
        case RuleId::PlusR2: return "plus-r2";
        case RuleId::PlusL: return "plus-l";
        case RuleId::TensorL: return "tensor-l";
        case RuleId::TensorR: return "tensor-r";
        case RuleId::OneL: return "one-l";
        case RuleId::OneR: return "one-r";
        case RuleId::ParL: return "par-l";
        case RuleId::ParR: return "par-r";
        case RuleId::BotL: return "bot-l";
        case RuleId::BotR: return "bot-r";
        case RuleId::AxP: return "ax-p";
        case RuleId::AxC: return "ax-c";
        case RuleId::TensorPL: return "tensor-p-l";
        case RuleId::TensorPR: return "tensor-p-r";
        case RuleId::OnePL: return "one-p-l";
        case RuleId::OnePR: return "one-p-r";
        case RuleId::ParCL: return "par-c-l";
        case RuleId::ParCR: return "par-c-r";
        case RuleId::BotCL: return "bot-c-l";
        case RuleId::BotCR: return "bot-c-r";
        case RuleId::FBangL: return "fbang-l";
        case RuleId::FBangR: return "fbang-r";
        case RuleId::FWhyL: return "fwhy-l";
        case RuleId::FWhyR: return "fwhy-r";
        case RuleId::GBangL: return "gbang-l";
        case RuleId::GBangR: return "gbang-r";
        case RuleId::GWhyL: return "gwhy-l";
        case RuleId::GWhyR: return "gwhy-r";
        case RuleId::WeakL: return "weak-l";
        case RuleId::WeakR: return "weak-r";
        case RuleId::ContrL: return "contr-l";
        case RuleId::ContrR: return "contr-r";
        case RuleId::WeakPL: return "weak-p-l";
        case RuleId::WeakPR: return "weak-p-r";
        case RuleId::ContrPL: return "contr-p-l";
        case RuleId::ContrPR: return "contr-p-r";
        case RuleId::CutL: return "cut-l";
        case RuleId::CutP: return "cut-p";
        case RuleId::CutPPers: return "cut-p-pers";
        case RuleId::CutC: return "cut-c";
        case RuleId::CutCPers: return "cut-c-pers";
    }
    return "?";
}

inline std::optional<RuleId> rule_from_name(const std::string& s) {
    for (int i = 0; i < kRuleCount; ++i) {
        RuleId r = static_cast<RuleId>(i);
        if (s == rule_name(r)) return r;
    }
    return std::nullopt;
}

inline bool is_cut(RuleId r) {
    switch (r) {
        case RuleId::CutL:
        case RuleId::CutP:
        case RuleId::CutPPers:
        case RuleId::CutC:
        case RuleId::CutCPers:
            return true;
        default:
            return false;
    }
}

inline size_t rule_arity(RuleId r) {
    switch (r) {
        case RuleId::Ax:
        case RuleId::TopR:
        case RuleId::ZeroL:
        case RuleId::OneR:
        case RuleId::BotL:
        case RuleId::AxP:
        case RuleId::AxC:
        case RuleId::OnePR:
        case RuleId::BotCL:
            return 0;
        case RuleId::WithR:
        case RuleId::PlusL:
        case RuleId::TensorR:
        case RuleId::ParL:
        case RuleId::TensorPR:
        case RuleId::ParCL:
        case RuleId::CutL:
        case RuleId::CutP:
        case RuleId::CutPPers:
        case RuleId::CutC:
        case RuleId::CutCPers:
            return 2;
        default:
            return 1;
    }
}

inline Judgment rule_conclusion_kind(RuleId r) {
    switch (r) {
        case RuleId::AxP:
        case RuleId::AxC:
        case RuleId::TensorPL:
        case RuleId::TensorPR:
        case RuleId::OnePL:
        case RuleId::OnePR:
        case RuleId::ParCL:
        case RuleId::ParCR:
        case RuleId::BotCL:
        case RuleId::BotCR:
        case RuleId::GBangR:
        case RuleId::GWhyL:
        case RuleId::WeakPL:
        case RuleId::WeakPR:
        case RuleId::ContrPL:
        case RuleId::ContrPR:
        case RuleId::CutPPers:
        case RuleId::CutCPers:
            return Judgment::Persistent;
        default:
            return Judgment::Linear;
    }
}

// Number of principal occurrence references a rule instance records.
// Leaf rules with fully pinned shapes take none; top-r/zero-l point at the
// constant; every other logical/structural rule points at its principal.
inline size_t rule_principal_count(RuleId r) {
    switch (r) {
        case RuleId::Ax:
        case RuleId::AxP:
        case RuleId::AxC:
        case RuleId::OneR:
        case RuleId::BotL:
        case RuleId::OnePR:
        case RuleId::BotCL:
        case RuleId::CutL:
        case RuleId::CutP:
        case RuleId::CutPPers:
        case RuleId::CutC:
        case RuleId::CutCPers:
            return 0;
        default:
            return 1;
    }
}

} // namespace lpc
