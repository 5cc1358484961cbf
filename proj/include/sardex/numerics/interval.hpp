#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <optional>
#include <ostream>
#include <utility>

#include "sardex/error.hpp"
#include "sardex/numerics/rational.hpp"

namespace sardex {

/// Closed interval [lo, hi] with MPFR endpoints. Every operation rounds the
/// lower end down and the upper end up, so the result contains the exact image
/// of every pair of points drawn from the operands.
class MpfrInterval {
public:
    static constexpr mpfr_prec_t default_precision = 256;

    explicit MpfrInterval(mpfr_prec_t precision = default_precision)
    {
        init(precision);
        mpfr_set_zero(lo_, 1);
        mpfr_set_zero(hi_, 1);
    }

    MpfrInterval(const Rational& q, mpfr_prec_t precision)
    {
        init(precision);
        mpfr_set_q(lo_, q.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, q.get_mpq_t(), MPFR_RNDU);
    }

    /// Hull of two rationals; requires lo <= hi.
    MpfrInterval(const Rational& lo, const Rational& hi, mpfr_prec_t precision)
    {
        if (lo > hi) {
            throw RangeError("interval with lo > hi");
        }
        init(precision);
        mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
    }

    MpfrInterval(const MpfrInterval& other)
    {
        init(other.precision());
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }

    MpfrInterval(MpfrInterval&& other) noexcept
    {
        init(other.precision());
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
    }

    MpfrInterval& operator=(const MpfrInterval& other)
    {
        if (this != &other) {
            mpfr_set_prec(lo_, other.precision());
            mpfr_set_prec(hi_, other.precision());
            mpfr_set(lo_, other.lo_, MPFR_RNDD);
            mpfr_set(hi_, other.hi_, MPFR_RNDU);
        }
        return *this;
    }

    MpfrInterval& operator=(MpfrInterval&& other) noexcept
    {
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
        return *this;
    }

    ~MpfrInterval()
    {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
    mpfr_srcptr lower() const { return lo_; }
    mpfr_srcptr upper() const { return hi_; }

    Rational lower_rational() const { return to_rational(lo_); }
    Rational upper_rational() const { return to_rational(hi_); }

    bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }

    bool contains(const Rational& q) const
    {
        return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
    }

    bool contains(const MpfrInterval& other) const
    {
        return mpfr_lessequal_p(lo_, other.lo_) && mpfr_greaterequal_p(hi_, other.hi_);
    }

    /// Upper bound on hi - lo.
    Rational width() const
    {
        MpfrInterval w(precision());
        mpfr_sub(w.hi_, hi_, lo_, MPFR_RNDU);
        return w.upper_rational();
    }

    /// +1 / -1 when the whole interval lies strictly on one side of zero,
    /// 0 when it is the point zero, nothing when it straddles zero.
    std::optional<int> sign() const
    {
        if (mpfr_sgn(lo_) > 0) {
            return 1;
        }
        if (mpfr_sgn(hi_) < 0) {
            return -1;
        }
        if (mpfr_zero_p(lo_) && mpfr_zero_p(hi_)) {
            return 0;
        }
        return std::nullopt;
    }

    MpfrInterval operator-() const
    {
        MpfrInterval r(precision());
        mpfr_neg(r.lo_, hi_, MPFR_RNDD);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        return r;
    }

    friend MpfrInterval operator+(const MpfrInterval& x, const MpfrInterval& y)
    {
        MpfrInterval r(std::max(x.precision(), y.precision()));
        mpfr_add(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
        return r;
    }

    friend MpfrInterval operator-(const MpfrInterval& x, const MpfrInterval& y)
    {
        MpfrInterval r(std::max(x.precision(), y.precision()));
        mpfr_sub(r.lo_, x.lo_, y.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, x.hi_, y.lo_, MPFR_RNDU);
        return r;
    }

    friend MpfrInterval operator*(const MpfrInterval& x, const MpfrInterval& y)
    {
        const mpfr_prec_t prec = std::max(x.precision(), y.precision());
        MpfrInterval r(prec);
        mpfr_t down, up;
        mpfr_init2(down, prec);
        mpfr_init2(up, prec);
        bool first = true;
        for (mpfr_srcptr u : {x.lower(), x.upper()}) {
            for (mpfr_srcptr v : {y.lower(), y.upper()}) {
                mpfr_mul(down, u, v, MPFR_RNDD);
                mpfr_mul(up, u, v, MPFR_RNDU);
                if (first || mpfr_less_p(down, r.lo_)) {
                    mpfr_set(r.lo_, down, MPFR_RNDD);
                }
                if (first || mpfr_greater_p(up, r.hi_)) {
                    mpfr_set(r.hi_, up, MPFR_RNDU);
                }
                first = false;
            }
        }
        mpfr_clear(down);
        mpfr_clear(up);
        return r;
    }

    friend MpfrInterval operator/(const MpfrInterval& x, const MpfrInterval& y)
    {
        if (!y.sign().has_value() || *y.sign() == 0) {
            throw DivisionByZero("interval divisor contains zero");
        }
        MpfrInterval recip(y.precision());
        mpfr_ui_div(recip.lo_, 1, y.hi_, MPFR_RNDD);
        mpfr_ui_div(recip.hi_, 1, y.lo_, MPFR_RNDU);
        return x * recip;
    }

    friend MpfrInterval operator*(const MpfrInterval& x, const Rational& q) { return x * MpfrInterval(q, x.precision()); }
    friend MpfrInterval operator*(const Rational& q, const MpfrInterval& x) { return x * q; }
    friend MpfrInterval operator+(const MpfrInterval& x, const Rational& q) { return x + MpfrInterval(q, x.precision()); }
    friend MpfrInterval operator-(const MpfrInterval& x, const Rational& q) { return x - MpfrInterval(q, x.precision()); }

    MpfrInterval& operator+=(const MpfrInterval& y) { return *this = *this + y; }
    MpfrInterval& operator-=(const MpfrInterval& y) { return *this = *this - y; }
    MpfrInterval& operator*=(const MpfrInterval& y) { return *this = *this * y; }
    MpfrInterval& operator/=(const MpfrInterval& y) { return *this = *this / y; }

    /// Interval extension of min(x, y).
    friend MpfrInterval min(const MpfrInterval& x, const MpfrInterval& y)
    {
        MpfrInterval r(std::max(x.precision(), y.precision()));
        mpfr_min(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
        mpfr_min(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
        return r;
    }

    /// Smallest interval containing both operands.
    friend MpfrInterval hull(const MpfrInterval& x, const MpfrInterval& y)
    {
        MpfrInterval r(std::max(x.precision(), y.precision()));
        mpfr_min(r.lo_, x.lo_, y.lo_, MPFR_RNDD);
        mpfr_max(r.hi_, x.hi_, y.hi_, MPFR_RNDU);
        return r;
    }

    /// 3^e for a rational exponent e, via 3^|p| and a q-th root.
    static MpfrInterval pow3(const Rational& e, mpfr_prec_t precision)
    {
        Integer p = e.get_num();
        if (p < 0) {
            p = -p;
        }
        const unsigned long q = e.get_den().get_ui();
        const Integer power = pow_int(3, p.get_ui());
        MpfrInterval r(precision);
        mpfr_set_z(r.lo_, power.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(r.hi_, power.get_mpz_t(), MPFR_RNDU);
        mpfr_rootn_ui(r.lo_, r.lo_, q, MPFR_RNDD);
        mpfr_rootn_ui(r.hi_, r.hi_, q, MPFR_RNDU);
        if (e < 0) {
            return MpfrInterval(Rational(1), precision) / r;
        }
        return r;
    }

    /// x^e for x >= 0 and rational e > 0 (monotone increasing).
    MpfrInterval pow(const Rational& e) const
    {
        if (mpfr_sgn(lo_) < 0 || e <= 0) {
            throw RangeError("interval power requires x >= 0 and a positive exponent");
        }
        const unsigned long p = e.get_num().get_ui();
        const unsigned long q = e.get_den().get_ui();
        MpfrInterval r(precision());
        mpfr_pow_ui(r.lo_, lo_, p, MPFR_RNDD);
        mpfr_pow_ui(r.hi_, hi_, p, MPFR_RNDU);
        mpfr_rootn_ui(r.lo_, r.lo_, q, MPFR_RNDD);
        mpfr_rootn_ui(r.hi_, r.hi_, q, MPFR_RNDU);
        return r;
    }

    MpfrInterval abs() const
    {
        if (mpfr_sgn(lo_) >= 0) {
            return *this;
        }
        if (mpfr_sgn(hi_) <= 0) {
            return -*this;
        }
        MpfrInterval r(precision());
        mpfr_set_zero(r.lo_, 1);
        mpfr_neg(r.hi_, lo_, MPFR_RNDU);
        mpfr_max(r.hi_, r.hi_, hi_, MPFR_RNDU);
        return r;
    }

    friend std::ostream& operator<<(std::ostream& os, const MpfrInterval& x)
    {
        return os << '[' << to_fixed(x.lower_rational(), 20, Rounding::down) << ", "
                  << to_fixed(x.upper_rational(), 20, Rounding::up) << ']';
    }

    /// Exact value of a finite MPFR number.
    static Rational to_rational(mpfr_srcptr v)
    {
        if (!mpfr_number_p(v)) {
            throw RangeError("non-finite MPFR value");
        }
        if (mpfr_zero_p(v)) {
            return 0;
        }
        Integer mantissa;
        const mpfr_exp_t e = mpfr_get_z_2exp(mantissa.get_mpz_t(), v);
        if (e >= 0) {
            return Rational(mantissa << static_cast<mp_bitcnt_t>(e));
        }
        return make_rational(mantissa, Integer(1) << static_cast<mp_bitcnt_t>(-e));
    }

private:
    void init(mpfr_prec_t precision)
    {
        mpfr_init2(lo_, precision);
        mpfr_init2(hi_, precision);
    }

    mpfr_t lo_;
    mpfr_t hi_;
};

MpfrInterval min(const MpfrInterval& x, const MpfrInterval& y);
MpfrInterval hull(const MpfrInterval& x, const MpfrInterval& y);

} // namespace sardex
