#pragma once

// Independent reference computations used only by the tests.

#include <array>
#include <vector>

#include "sardex/numerics/rational.hpp"

namespace oracle {

using sardex::Rational;
using Poly = std::vector<Rational>; // coefficient i multiplies x^i

inline void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

/// Schoolbook product of a + b x + c x^2 factors, reduced with x^3 = 3.
inline std::array<Rational, 3> mul_mod(const std::array<Rational, 3>& x, const std::array<Rational, 3>& y)
{
    std::array<Rational, 5> full{};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            full[i + j] += x[i] * y[j];
        }
    }
    return {full[0] + 3 * full[3], full[1] + 3 * full[4], full[2]};
}

/// Quotient and remainder of polynomial division over Q.
inline std::pair<Poly, Poly> divmod(Poly num, const Poly& den)
{
    Poly q(num.size() > den.size() ? num.size() - den.size() + 1 : 1, Rational(0));
    trim(num);
    while (num.size() >= den.size() && !num.empty()) {
        const std::size_t shift = num.size() - den.size();
        const Rational factor = num.back() / den.back();
        q[shift] += factor;
        for (std::size_t i = 0; i < den.size(); ++i) {
            num[i + shift] -= factor * den[i];
        }
        trim(num);
    }
    return {q, num};
}

inline Poly sub(const Poly& a, const Poly& b)
{
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        r[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        r[i] -= b[i];
    }
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

/// Inverse of a + b x + c x^2 modulo x^3 - 3 by the extended Euclidean
/// algorithm; x^3 - 3 is irreducible, so the gcd is a nonzero constant.
inline std::array<Rational, 3> inverse_mod(const std::array<Rational, 3>& x)
{
    Poly r0{-3, 0, 0, 1};
    Poly r1{x[0], x[1], x[2]};
    trim(r1);
    Poly s0{};
    Poly s1{1};
    while (r1.size() > 1) {
        auto [q, r] = divmod(r0, r1);
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r1 is a nonzero constant c with s1 * x = c (mod x^3 - 3).
    std::array<Rational, 3> out{};
    for (std::size_t i = 0; i < s1.size() && i < 3; ++i) {
        out[i] = s1[i] / r1[0];
    }
    return out;
}

/// Sign of a + b t + c t^2 from its field norm: the two complex conjugates
/// have a positive product, so the norm carries the sign of the real element.
inline int sign_by_norm(const Rational& a, const Rational& b, const Rational& c)
{
    const Rational n = a * a * a + 3 * b * b * b + 9 * c * c * c - 9 * a * b * c;
    return sgn(n);
}

/// Sum of the lengths of all middle-thirds gaps of level <= depth lying
/// entirely to the left of x, by enumerating every gap.
inline Rational brute_force_gap_sum(const Rational& x, int depth)
{
    Rational total = 0;
    std::vector<std::pair<Rational, Rational>> components{{Rational(0), Rational(1)}};
    for (int n = 1; n <= depth; ++n) {
        std::vector<std::pair<Rational, Rational>> next;
        for (const auto& [lo, hi] : components) {
            const Rational third = (hi - lo) / 3;
            const Rational gap_lo = lo + third;
            const Rational gap_hi = hi - third;
            if (gap_hi <= x) {
                total += third;
            }
            next.emplace_back(lo, gap_lo);
            next.emplace_back(gap_hi, hi);
        }
        components = std::move(next);
    }
    return total;
}

} // namespace oracle
