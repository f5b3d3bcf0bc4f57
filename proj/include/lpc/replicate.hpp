#pragma once

#include "lpc/build.hpp"

namespace lpc {

// Given d proving a sequent with n copies of x on the given side, produce a
// derivation of the sequent with exactly one copy: weaken when n = 0, return d
// unchanged when n = 1, contract n-1 times otherwise. Works for both
// judgments; x must be a producer on the left or a consumer on the right,
// since those are the only positions with structural rules.
inline Deriv replicate(Deriv d, Side side, const Prop& x, size_t n) {
    if (n == 0)
        return side == Side::Left ? build::weak_l(x, std::move(d))
                                  : build::weak_r(x, std::move(d));
    for (; n > 1; --n)
        d = side == Side::Left ? build::contr_l(x, std::move(d))
                               : build::contr_r(x, std::move(d));
    return d;
}

} // namespace lpc
