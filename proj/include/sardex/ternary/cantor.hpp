#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sardex/error.hpp"
#include "sardex/numerics/rational.hpp"
#include "sardex/ternary/expansion.hpp"

namespace sardex {

/// Left/right choices from the root of a binary construction tree; `true` is right.
using Path = std::vector<bool>;

/// Address (n, k) of the k-th gap removed at level n, 1 <= k <= 2^(n-1).
/// k - 1 written in n - 1 binary digits, most significant first, is the path
/// to the component the gap is removed from, so k grows left to right.
struct GapAddress {
    int level = 1;
    Integer index = 1;

    GapAddress() = default;
    GapAddress(int n, Integer k) : level(n), index(std::move(k))
    {
        if (level < 1) {
            throw AddressError("gap level must be >= 1");
        }
        if (index < 1 || index > (Integer(1) << static_cast<mp_bitcnt_t>(level - 1))) {
            throw AddressError("gap index " + index.get_str() + " out of range for level " + std::to_string(level));
        }
    }

    static GapAddress from_path(const Path& parent)
    {
        Integer k = 0;
        for (bool right : parent) {
            k = 2 * k + (right ? 1 : 0);
        }
        return {static_cast<int>(parent.size()) + 1, k + 1};
    }

    /// Path to the component at depth level - 1 that contains the gap.
    Path path() const
    {
        Path bits(static_cast<std::size_t>(level - 1));
        Integer k = index - 1;
        for (std::size_t i = bits.size(); i-- > 0;) {
            bits[i] = mpz_odd_p(k.get_mpz_t()) != 0;
            k >>= 1;
        }
        return bits;
    }

    friend bool operator==(const GapAddress& x, const GapAddress& y) { return x.level == y.level && x.index == y.index; }
};

/// Left end of the depth-d component of the middle-thirds construction
/// reached by `path`: sum of 2 b_i / 3^i.
inline Rational cantor_component_lo(const Path& path)
{
    Integer num = 0;
    for (bool right : path) {
        num = 3 * num + (right ? 2 : 0);
    }
    return make_rational(num, pow_int(3, path.size()));
}

/// Open middle-third gap I_n^k as (lo, hi); its length is 3^-n.
inline std::pair<Rational, Rational> cantor_gap_interval(const GapAddress& addr)
{
    const Rational c = cantor_component_lo(addr.path());
    const Rational len = pow3(-addr.level);
    return {c + len, c + 2 * len};
}

inline void require_cantor_digits(const TernaryExpansion& x)
{
    if (x.has_digit_one()) {
        throw NotInCantorSet("expansion " + x.to_string() + " contains the digit 1");
    }
}

/// Sum of the lengths of all gaps I_n^k with n <= depth and sup I_n^k <= x,
/// for x given by a digit sequence over {0, 2}.
///
/// With b_i = d_i / 2, the number of such gaps at level n is the binary number
/// b_1 ... b_{n-1} (components strictly left of x at depth n-1) plus b_n
/// (the gap of x's own component when x lies in its right child).
inline Rational cantor_partial_gap_sum(const TernaryExpansion& x, int depth)
{
    require_cantor_digits(x);
    if (depth < 1) {
        throw RangeError("partial gap sum depth must be >= 1");
    }
    Integer left_components = 0;
    Integer num = 0; // sum scaled by 3^depth
    for (int n = 1; n <= depth; ++n) {
        const int bit = x.digit(static_cast<std::size_t>(n)) == 2 ? 1 : 0;
        const Integer count = left_components + bit;
        num += count * pow_int(3, static_cast<unsigned long>(depth - n));
        left_components = 2 * left_components + bit;
    }
    return make_rational(num, pow_int(3, static_cast<unsigned long>(depth)));
}

struct InCantor {
    TernaryExpansion digits; // all digits in {0, 2}
};

struct InCantorGap {
    GapAddress address;
    Rational offset; // from the left end of the gap, strictly inside (0, 3^-n)
};

using CantorLocate = std::variant<InCantor, InCantorGap>;

/// Decides membership of a rational in the Cantor set exactly.
inline CantorLocate cantor_locate(const Rational& r)
{
    const TernaryExpansion e = ternary_expand(r);
    if (!e.has_digit_one()) {
        return InCantor{e};
    }
    // A terminating expansion whose only 1 is the final digit has the
    // alternative ...0(2), which avoids the digit 1.
    if (e.terminating()) {
        const Digits& pre = e.preperiod();
        const auto first_one = std::find(pre.begin(), pre.end(), 1);
        if (first_one + 1 == pre.end()) {
            Digits alt(pre.begin(), pre.end() - 1);
            alt.push_back(0);
            return InCantor{TernaryExpansion(alt, {2})};
        }
    }
    Path path;
    std::size_t n = 1;
    for (;; ++n) {
        const auto d = e.digit(n);
        if (d == 1) {
            break;
        }
        path.push_back(d == 2);
    }
    const GapAddress addr = GapAddress::from_path(path);
    const auto [lo, hi] = cantor_gap_interval(addr);
    return InCantorGap{addr, r - lo};
}

/// Writes u in [0, 2] as x + y with x, y in the Cantor set, digit by digit
/// from the expansion of u / 2: 0 -> (0, 0), 1 -> (2, 0), 2 -> (2, 2).
inline std::pair<TernaryExpansion, TernaryExpansion> steinhaus_decompose(const Rational& u)
{
    if (u < 0 || u > 2) {
        throw RangeError("steinhaus_decompose requires 0 <= u <= 2, got " + to_string(u));
    }
    const TernaryExpansion eps = ternary_expand(u / 2);
    auto split = [](const Digits& ds, Digits& xs, Digits& ys) {
        for (auto d : ds) {
            xs.push_back(d == 0 ? 0 : 2);
            ys.push_back(d == 2 ? 2 : 0);
        }
    };
    Digits x_pre, y_pre, x_per, y_per;
    split(eps.preperiod(), x_pre, y_pre);
    split(eps.period(), x_per, y_per);
    return {TernaryExpansion(x_pre, x_per), TernaryExpansion(y_pre, y_per)};
}

} // namespace sardex
