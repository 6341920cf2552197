#pragma once

namespace simplexeig {

// Integer power by squaring; keeps rounding growth at O(log e) instead of
// O(e) for the inner-product powers that appear in every contraction.
template <typename Real>
constexpr Real powi(Real base, int e)
{
    if (e < 0) {
        base = Real(1) / base;
        e = -e;
    }
    Real result = Real(1);
    Real acc = base;
    while (e > 0) {
        if (e & 1) result *= acc;
        acc *= acc;
        e >>= 1;
    }
    return result;
}

// (-1)^e without calling powi.
constexpr double alt_sign(int e) { return (e & 1) ? -1.0 : 1.0; }

} // namespace simplexeig
