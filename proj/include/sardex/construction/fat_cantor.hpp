#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "sardex/construction/params.hpp"
#include "sardex/error.hpp"
#include "sardex/numerics/field.hpp"
#include "sardex/ternary/cantor.hpp"
#include "sardex/ternary/expansion.hpp"

namespace sardex {

/// Surviving component of A at depth |path| (root [0, M] at depth 0).
struct ComponentAddress {
    Path path;

    int depth() const { return static_cast<int>(path.size()); }

    friend bool operator==(const ComponentAddress&, const ComponentAddress&) = default;
};

/// Open gap J_n^k together with its end points and length l_n.
template <class T>
struct FatGap {
    GapAddress address;
    T lo;
    T hi;
    T length;
};

enum class Endpoint { none, lower, upper };

/// x lies in the open gap, `position` from its left end.
template <class T>
struct GapHit {
    FatGap<T> gap;
    T position;
};

/// x lies in the closed depth-D component [lo, hi]. When x is certified to be
/// one of its end points, x is a point of A.
template <class T>
struct Undecided {
    ComponentAddress component;
    T lo;
    T hi;
    Endpoint endpoint = Endpoint::none;
};

template <class T>
using LocateResult = std::variant<GapHit<T>, Undecided<T>>;

template <class T>
std::pair<T, T> component_interval(const Params<T>& params, const ComponentAddress& addr)
{
    T lo = params.from_rational(0);
    for (std::size_t i = 0; i < addr.path.size(); ++i) {
        if (addr.path[i]) {
            const int d = static_cast<int>(i) + 1;
            lo = lo + params.component_length(d) + params.gap_length(d);
        }
    }
    T hi = lo + params.component_length(addr.depth());
    return {std::move(lo), std::move(hi)};
}

template <class T>
FatGap<T> gap_interval(const Params<T>& params, const GapAddress& addr)
{
    const auto [parent_lo, parent_hi] = component_interval(params, ComponentAddress{addr.path()});
    T length = params.gap_length(addr.level);
    T lo = parent_lo + params.component_length(addr.level);
    T hi = lo + length;
    return {addr, std::move(lo), std::move(hi), std::move(length)};
}

namespace detail {

template <class T>
int certified_sign(const Params<T>& params, const T& v, int level, const Path& path)
{
    const auto s = params.ops().sign(v);
    if (!s) {
        throw BoundaryAmbiguity(level, GapAddress::from_path(path).index.get_str());
    }
    return *s;
}

} // namespace detail

/// Walks the component tree at most `max_depth` levels. Gaps are open, so a
/// gap end point belongs to the adjacent component.
template <class T>
LocateResult<T> locate(const Params<T>& params, const T& x, int max_depth)
{
    if (max_depth < 0) {
        throw RangeError("locate depth must be >= 0");
    }
    const auto& ops = params.ops();
    if (const auto s = ops.sign(x); s && *s < 0) {
        throw RangeError("x is below 0");
    }
    if (const auto s = ops.sign(params.M() - x); s && *s < 0) {
        throw RangeError("x is above M");
    }
    T offset = x; // x minus the left end of the current component
    T lo = params.from_rational(0);
    Path path;
    path.reserve(static_cast<std::size_t>(max_depth));
    for (int d = 1; d <= max_depth; ++d) {
        const T L = params.component_length(d);
        const T gap = params.gap_length(d);
        const T past_left = offset - L;
        if (detail::certified_sign(params, past_left, d, path) <= 0) {
            path.push_back(false);
            continue;
        }
        if (detail::certified_sign(params, past_left - gap, d, path) < 0) {
            T gap_lo = lo + L;
            T gap_hi = gap_lo + gap;
            return GapHit<T>{FatGap<T>{GapAddress::from_path(path), std::move(gap_lo), std::move(gap_hi), gap},
                             past_left};
        }
        offset = past_left - gap;
        lo = lo + L + gap;
        path.push_back(true);
    }
    const T L = params.component_length(max_depth);
    Endpoint endpoint = Endpoint::none;
    if (ops.sign(offset) == std::optional<int>(0)) {
        endpoint = Endpoint::lower;
    } else if (ops.sign(offset - L) == std::optional<int>(0)) {
        endpoint = Endpoint::upper;
    }
    T hi = lo + L;
    return Undecided<T>{ComponentAddress{std::move(path)}, std::move(lo), std::move(hi), endpoint};
}

/// g(x) = c / l_n^(1-alpha) * dist(x, boundary of J_n^k) on gaps, 0 on A.
/// Undecided points get [0, peak of the next level], the largest value g
/// takes anywhere in the surviving component.
template <class T>
Enclosure<T> g_eval(const Params<T>& params, const T& x, int max_depth)
{
    const auto located = locate(params, x, max_depth);
    if (const auto* hit = std::get_if<GapHit<T>>(&located)) {
        const T dist = params.ops().min(hit->position, hit->gap.length - hit->position);
        return Enclosure<T>::point(params.tent_slope(hit->gap.address.level) * dist);
    }
    const auto& und = std::get<Undecided<T>>(located);
    const T zero = params.from_rational(0);
    if (und.endpoint != Endpoint::none) {
        return Enclosure<T>::point(zero);
    }
    return {zero, params.peak(max_depth + 1)};
}

/// Integral of g over [gap.lo, gap.lo + position] for a point inside a gap.
template <class T>
T partial_tent_integral(const Params<T>& params, int level, const T& length, const T& position)
{
    const T half_slope = params.tent_slope(level) * Rational(1, 2);
    auto rising = [&] { return half_slope * position * position; };
    auto falling = [&] {
        const T rest = length - position;
        return params.from_rational(params.gap_integral(level)) - half_slope * rest * rest;
    };
    const auto side = params.ops().sign(position - length * Rational(1, 2));
    if (side) {
        return *side <= 0 ? rising() : falling();
    }
    if constexpr (FieldOps<T>::mode == Mode::floating) {
        // Both branches agree at the peak; the true value lies in their hull.
        return hull(rising(), falling());
    } else {
        return rising();
    }
}

/// f(x) = integral of g over [0, x], by descent: each depth contributes one
/// ternary digit of f(x) (digit 2 when x enters a right child), and a point
/// inside a gap adds the exact partial tent integral.
template <class T>
Enclosure<T> f_eval(const Params<T>& params, const T& x, int max_depth)
{
    const auto located = locate(params, x, max_depth);
    const Rational unit = params.f_unit();
    if (const auto* hit = std::get_if<GapHit<T>>(&located)) {
        const int n = hit->gap.address.level;
        const Rational base = unit * cantor_gap_interval(hit->gap.address).first;
        return Enclosure<T>::point(params.from_rational(base) +
                                   partial_tent_integral(params, n, hit->gap.length, hit->position));
    }
    const auto& und = std::get<Undecided<T>>(located);
    const Rational acc = unit * cantor_component_lo(und.component.path);
    const Rational top = acc + unit * pow3(-max_depth);
    switch (und.endpoint) {
    case Endpoint::lower:
        return Enclosure<T>::point(params.from_rational(acc));
    case Endpoint::upper:
        return Enclosure<T>::point(params.from_rational(top));
    default:
        return {params.from_rational(acc), params.from_rational(top)};
    }
}

/// F(x, y) = f(x) + f(y).
template <class T>
Enclosure<T> F_eval(const Params<T>& params, const T& x, const T& y, int max_depth)
{
    return f_eval(params, x, max_depth) + f_eval(params, y, max_depth);
}

/// grad F(x, y) = (g(x), g(y)) since f' = g.
template <class T>
std::pair<Enclosure<T>, Enclosure<T>> grad_F(const Params<T>& params, const T& x, const T& y, int max_depth)
{
    return {g_eval(params, x, max_depth), g_eval(params, y, max_depth)};
}

/// Exact image f(K) of a component: the middle-thirds component with the same
/// path, scaled by the f unit.
template <class T>
std::pair<Rational, Rational> component_f_image(const Params<T>& params, const ComponentAddress& addr)
{
    const Rational lo = params.f_unit() * cantor_component_lo(addr.path);
    return {lo, lo + params.f_unit() * pow3(-addr.depth())};
}

/// Enclosure of the point a of A with f(a) = value(digits), together with the
/// component that certifies it.
template <class T>
struct CantorPoint {
    Enclosure<T> enclosure;
    ComponentAddress component;
    Endpoint endpoint = Endpoint::none; // set when the point is a component end point

    bool exact() const { return endpoint != Endpoint::none; }
};

/// Digit 0 descends left, digit 2 right. Eventually constant digit strings
/// name a component end point, which is returned exactly; otherwise the
/// depth-D component (width L_D) is returned.
template <class T>
CantorPoint<T> point_from_cantor_digits(const Params<T>& params, const TernaryExpansion& digits, int depth)
{
    require_cantor_digits(digits);
    if (depth < 0) {
        throw RangeError("descent depth must be >= 0");
    }
    int walk = depth;
    Endpoint endpoint = Endpoint::none;
    if (digits.eventually_constant()) {
        walk = std::max(depth, static_cast<int>(digits.preperiod().size()));
        endpoint = digits.terminating() ? Endpoint::lower : Endpoint::upper;
    }
    T lo = params.from_rational(0);
    Path path;
    path.reserve(static_cast<std::size_t>(walk));
    for (int d = 1; d <= walk; ++d) {
        const bool right = digits.digit(static_cast<std::size_t>(d)) == 2;
        if (right) {
            lo = lo + params.component_length(d) + params.gap_length(d);
        }
        path.push_back(right);
    }
    T hi = lo + params.component_length(walk);
    CantorPoint<T> out{{lo, hi}, ComponentAddress{std::move(path)}, endpoint};
    if (endpoint == Endpoint::lower) {
        out.enclosure.hi = out.enclosure.lo;
    } else if (endpoint == Endpoint::upper) {
        out.enclosure.lo = out.enclosure.hi;
    }
    return out;
}

/// A point of A x A with F = value, i.e. a critical point witnessing that
/// value is a critical value of F.
template <class T>
struct CriticalPoint {
    CantorPoint<T> x;
    CantorPoint<T> y;
    Rational value;
    TernaryExpansion x_digits; // f(x) in base 3
    TernaryExpansion y_digits; // f(y) in base 3
};

template <class T>
CriticalPoint<T> critical_preimage(const Params<T>& params, const Rational& u, int depth)
{
    if (params.f_unit() != 1) {
        throw ModeError("critical preimages need the standard tent coefficient 4 (f(A) = C)");
    }
    auto [cx, cy] = steinhaus_decompose(u);
    auto px = point_from_cantor_digits(params, cx, depth);
    auto py = point_from_cantor_digits(params, cy, depth);
    return {std::move(px), std::move(py), u, std::move(cx), std::move(cy)};
}

/// Certified enclosure of f over the enclosure of a Cantor point. Exact mode
/// evaluates f at the enclosure ends (which are component end points, so the
/// values are exact); float mode cannot certify that an end point equals a gap
/// boundary and uses the exact component image instead.
template <class T>
Enclosure<T> f_over_point(const Params<T>& params, const CantorPoint<T>& p)
{
    if constexpr (FieldOps<T>::mode == Mode::exact) {
        const int d = p.component.depth();
        return {f_eval(params, p.enclosure.lo, d).lo, f_eval(params, p.enclosure.hi, d).hi};
    } else {
        const auto [lo, hi] = component_f_image(params, p.component);
        switch (p.endpoint) {
        case Endpoint::lower:
            return Enclosure<T>::point(params.from_rational(lo));
        case Endpoint::upper:
            return Enclosure<T>::point(params.from_rational(hi));
        default:
            return {params.from_rational(lo), params.from_rational(hi)};
        }
    }
}

/// Certified enclosure of g over the enclosure of a Cantor point: exactly 0 at
/// a component end point, otherwise [0, peak at depth + 1].
template <class T>
Enclosure<T> g_over_point(const Params<T>& params, const CantorPoint<T>& p)
{
    const int d = p.component.depth();
    if constexpr (FieldOps<T>::mode == Mode::exact) {
        if (p.exact()) {
            return g_eval(params, p.enclosure.lo, d);
        }
        const auto at_lo = g_eval(params, p.enclosure.lo, d);
        const auto at_hi = g_eval(params, p.enclosure.hi, d);
        const T zero = params.from_rational(0);
        if (!(at_lo.lo == zero && at_hi.lo == zero)) {
            throw std::logic_error("component end points must be zeros of g");
        }
        return {zero, params.peak(d + 1)};
    } else {
        const T zero = params.from_rational(0);
        if (p.exact()) {
            return Enclosure<T>::point(zero);
        }
        return {zero, params.peak(d + 1)};
    }
}

} // namespace sardex
