#pragma once

#include <optional>
#include <string>
#include <variant>

#include "sardex/error.hpp"
#include "sardex/numerics/cubic.hpp"
#include "sardex/numerics/interval.hpp"
#include "sardex/numerics/rational.hpp"

namespace sardex {

enum class Mode { exact, floating };

inline std::string to_string(Mode m) { return m == Mode::exact ? "exact" : "float"; }

/// Number-type specific operations used by the generic construction. The
/// construction only ever needs: rationals, integer-free powers of 3, certified
/// signs and a way to render values as rational bounds.
template <class T>
struct FieldOps;

template <>
struct FieldOps<CubicNumber> {
    static constexpr Mode mode = Mode::exact;

    /// Precision used when rendering exact values as decimals.
    mpfr_prec_t precision = MpfrInterval::default_precision;

    CubicNumber from_rational(const Rational& q) const { return CubicNumber(q); }

    std::optional<int> sign(const CubicNumber& x) const { return x.sign(); }

    bool certainly_equal(const CubicNumber& x, const CubicNumber& y) const { return x == y; }

    /// 3^e; only exponents with 3e integral stay inside Q(3^(1/3)).
    CubicNumber pow3(const Rational& e) const
    {
        const Rational thirds = 3 * e;
        if (thirds.get_den() != 1) {
            throw ModeError("3^(" + to_string(e) + ") is not an element of Q(3^(1/3))");
        }
        return CubicNumber::t_power(thirds.get_num().get_si());
    }

    CubicNumber abs(const CubicNumber& x) const { return x.sign() < 0 ? -x : x; }

    CubicNumber min(const CubicNumber& x, const CubicNumber& y) const { return compare(x, y) <= 0 ? x : y; }

    /// Enclosure of the real value, from an outward-rounded enclosure of t.
    MpfrInterval to_interval(const CubicNumber& x) const
    {
        const mpfr_prec_t prec = precision + 32;
        const MpfrInterval t = MpfrInterval::pow3(Rational(1, 3), prec);
        return MpfrInterval(x.a(), prec) + x.b() * t + x.c() * (t * t);
    }

    /// Certified test v <= coeff * w^e for v, w >= 0 and rational e > 0, by
    /// raising both sides to the power den(e).
    bool le_scaled_power(const CubicNumber& v, const Rational& coeff, const CubicNumber& w, const Rational& e) const
    {
        const unsigned long p = e.get_num().get_ui();
        const unsigned long q = e.get_den().get_ui();
        return compare(power(v, q), power(CubicNumber(coeff), q) * power(w, p)) <= 0;
    }

    static CubicNumber power(const CubicNumber& x, unsigned long n)
    {
        CubicNumber r(1);
        CubicNumber base = x;
        while (n > 0) {
            if (n & 1U) {
                r *= base;
            }
            base *= base;
            n >>= 1U;
        }
        return r;
    }
};

template <>
struct FieldOps<MpfrInterval> {
    static constexpr Mode mode = Mode::floating;

    mpfr_prec_t precision = MpfrInterval::default_precision;

    MpfrInterval from_rational(const Rational& q) const { return MpfrInterval(q, precision); }

    std::optional<int> sign(const MpfrInterval& x) const { return x.sign(); }

    /// Only point intervals can be certified equal.
    bool certainly_equal(const MpfrInterval& x, const MpfrInterval& y) const
    {
        return x.is_point() && y.is_point() && mpfr_equal_p(x.lower(), y.lower());
    }

    MpfrInterval pow3(const Rational& e) const { return MpfrInterval::pow3(e, precision); }

    MpfrInterval abs(const MpfrInterval& x) const { return x.abs(); }

    MpfrInterval min(const MpfrInterval& x, const MpfrInterval& y) const { return sardex::min(x, y); }

    MpfrInterval to_interval(const MpfrInterval& x) const { return x; }

    bool le_scaled_power(const MpfrInterval& v, const Rational& coeff, const MpfrInterval& w, const Rational& e) const
    {
        const MpfrInterval rhs = coeff * w.abs().pow(e);
        return mpfr_lessequal_p(v.upper(), rhs.lower());
    }
};

/// [lo, hi] certified to contain an exact real value. In exact mode lo and hi
/// are exact field elements; in float mode each end is itself an interval and
/// the certified bounds are lo.lower() and hi.upper().
template <class T>
struct Enclosure {
    T lo;
    T hi;

    static Enclosure point(const T& v) { return {v, v}; }

    friend Enclosure operator+(const Enclosure& x, const Enclosure& y) { return {x.lo + y.lo, x.hi + y.hi}; }
};

/// Certified lower / upper bound of an enclosure as exact rationals.
template <class T>
Rational lower_bound(const FieldOps<T>& ops, const Enclosure<T>& e)
{
    if constexpr (std::is_same_v<T, CubicNumber>) {
        if (e.lo.is_rational()) {
            return e.lo.a();
        }
    }
    return ops.to_interval(e.lo).lower_rational();
}

template <class T>
Rational upper_bound(const FieldOps<T>& ops, const Enclosure<T>& e)
{
    if constexpr (std::is_same_v<T, CubicNumber>) {
        if (e.hi.is_rational()) {
            return e.hi.a();
        }
    }
    return ops.to_interval(e.hi).upper_rational();
}

/// Certified containment of a rational value.
template <class T>
bool contains(const FieldOps<T>& ops, const Enclosure<T>& e, const Rational& q)
{
    if constexpr (std::is_same_v<T, CubicNumber>) {
        (void)ops;
        return compare(e.lo, CubicNumber(q)) <= 0 && compare(CubicNumber(q), e.hi) <= 0;
    } else {
        return mpfr_cmp_q(e.lo.lower(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(e.hi.upper(), q.get_mpq_t()) >= 0;
    }
}

/// Upper bound on hi - lo, as a field element (exact mode) or interval.
template <class T>
T width(const Enclosure<T>& e)
{
    if constexpr (std::is_same_v<T, CubicNumber>) {
        return e.hi - e.lo;
    } else {
        const Rational w = e.hi.upper_rational() - e.lo.lower_rational();
        return MpfrInterval(w, e.hi.precision());
    }
}

/// A number in whichever mode the active parameters use.
using Scalar = std::variant<CubicNumber, MpfrInterval>;

template <class T>
const T& scalar_as(const Scalar& s)
{
    if (const T* v = std::get_if<T>(&s)) {
        return *v;
    }
    throw ModeError("scalar mode does not match the parameter mode");
}

inline Mode scalar_mode(const Scalar& s) { return std::holds_alternative<CubicNumber>(s) ? Mode::exact : Mode::floating; }

} // namespace sardex
