#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "sardex/error.hpp"
#include "sardex/numerics/field.hpp"
#include "sardex/numerics/rational.hpp"

namespace sardex {

/// Largest accepted denominator of alpha; powers of 3 are formed exactly
/// before root extraction, so the exponent size is bounded.
inline constexpr unsigned long max_alpha_denominator = 1000;

/// Exact test of the family constraint alpha < log(3/2) / log 2, in the
/// equivalent form 2^(p+q) < 3^q for alpha = p/q.
inline bool satisfies_constraint(const Rational& alpha)
{
    if (alpha <= 0) {
        return false;
    }
    const unsigned long p = alpha.get_num().get_ui();
    const unsigned long q = alpha.get_den().get_ui();
    return pow_int(2, p + q) < pow_int(3, q);
}

/// Enclosure of log(3/2) / log 2.
inline MpfrInterval constraint_bound(mpfr_prec_t precision)
{
    MpfrInterval three_halves(Rational(3, 2), precision + 16);
    MpfrInterval two(Rational(2), precision + 16);
    auto log_enclosure = [&](const MpfrInterval& x) {
        mpfr_t lo, hi;
        mpfr_init2(lo, precision + 16);
        mpfr_init2(hi, precision + 16);
        mpfr_log(lo, x.lower(), MPFR_RNDD);
        mpfr_log(hi, x.upper(), MPFR_RNDU);
        MpfrInterval r(MpfrInterval::to_rational(lo), MpfrInterval::to_rational(hi), precision + 16);
        mpfr_clear(lo);
        mpfr_clear(hi);
        return r;
    };
    return log_enclosure(three_halves) / log_enclosure(two);
}

/// The family parameter alpha with everything derived from it.
///
/// Gap lengths are l_n = s^-n with s = 3^(1/(1+alpha)), so every power of a
/// gap length that the construction needs is a power of 3 with a rational
/// exponent: l_n^(1+alpha) = 3^-n exactly. Components at depth d have length
/// L_d = (L_{d-1} - l_d) / 2, L_0 = M = 1 / (s - 2).
template <class T>
class Params {
public:
    static constexpr std::size_t table_depth = 128;

    Params(Rational alpha, FieldOps<T> ops, Rational tent_coefficient = 4)
        : alpha_(std::move(alpha)), ops_(ops), tent_(std::move(tent_coefficient))
    {
        if (alpha_ <= 0) {
            throw ConstraintError("alpha must be positive, got " + to_string(alpha_));
        }
        if (alpha_.get_den() > max_alpha_denominator) {
            throw ConstraintError("alpha denominator exceeds " + std::to_string(max_alpha_denominator));
        }
        if (!satisfies_constraint(alpha_)) {
            throw ConstraintError("alpha = " + to_string(alpha_) +
                                  " violates alpha < log(3/2)/log 2 ~ 0.5849625007 (need 2 < 3^(1/(1+alpha)))");
        }
        if (FieldOps<T>::mode == Mode::exact && alpha_ != Rational(1, 2)) {
            throw ModeError("exact mode requires alpha = 1/2, got " + to_string(alpha_));
        }
        if (tent_ <= 0) {
            throw ConstraintError("tent coefficient must be positive");
        }
        s_ = ops_.pow3(1 / (1 + alpha_));
        M_ = ops_.from_rational(1) / (s_ - ops_.from_rational(2));
        const T zero = ops_.from_rational(0);
        gap_.reserve(table_depth + 1);
        gap_alpha_.reserve(table_depth + 1);
        slope_.reserve(table_depth + 1);
        component_.reserve(table_depth + 1);
        // Index 0 is a placeholder so that tables are indexed by level.
        gap_.push_back(zero);
        gap_alpha_.push_back(zero);
        slope_.push_back(zero);
        component_.push_back(M_);
        for (std::size_t n = 1; n <= table_depth; ++n) {
            gap_.push_back(compute_gap_length(static_cast<int>(n)));
            gap_alpha_.push_back(compute_gap_pow(static_cast<int>(n), alpha_));
            slope_.push_back(ops_.from_rational(tent_) / compute_gap_pow(static_cast<int>(n), 1 - alpha_));
            component_.push_back((component_.back() - gap_.back()) * Rational(1, 2));
        }
    }

    const Rational& alpha() const { return alpha_; }
    const Rational& tent_coefficient() const { return tent_; }
    const FieldOps<T>& ops() const { return ops_; }
    static constexpr Mode mode() { return FieldOps<T>::mode; }
    mpfr_prec_t precision() const { return ops_.precision; }

    /// s = 3^(1/(1+alpha)).
    const T& s() const { return s_; }
    /// M = 1/(s - 2), total length of [0, M].
    const T& M() const { return M_; }

    /// l_n = s^-n.
    T gap_length(int n) const
    {
        check_level(n);
        return in_table(n) ? gap_[static_cast<std::size_t>(n)] : compute_gap_length(n);
    }

    /// l_n^alpha.
    T gap_length_pow_alpha(int n) const
    {
        check_level(n);
        return in_table(n) ? gap_alpha_[static_cast<std::size_t>(n)] : compute_gap_pow(n, alpha_);
    }

    /// Slope c / l_n^(1-alpha) of the tent on a level-n gap (c = tent coefficient).
    T tent_slope(int n) const
    {
        check_level(n);
        return in_table(n) ? slope_[static_cast<std::size_t>(n)]
                           : ops_.from_rational(tent_) / compute_gap_pow(n, 1 - alpha_);
    }

    /// Tent peak (c/2) l_n^alpha, the maximum of g on a level-n gap.
    T peak(int n) const { return gap_length_pow_alpha(n) * Rational(tent_ / 2); }

    /// L_d, the common length of the 2^d components at depth d.
    T component_length(int d) const
    {
        if (d < 0) {
            throw AddressError("component depth must be >= 0");
        }
        if (static_cast<std::size_t>(d) < component_.size()) {
            return component_[static_cast<std::size_t>(d)];
        }
        T L = component_.back();
        for (int k = static_cast<int>(component_.size()); k <= d; ++k) {
            L = (L - compute_gap_length(k)) * Rational(1, 2);
        }
        return L;
    }

    /// c/4: integral of g over the whole of [0, M] (1 for the standard tent).
    Rational f_unit() const { return tent_ / 4; }

    /// Integral of g over one level-n gap, c/4 * l_n^(1+alpha) = c/4 * 3^-n.
    Rational gap_integral(int n) const { return f_unit() * pow3(-n); }

    T from_rational(const Rational& q) const { return ops_.from_rational(q); }

private:
    static void check_level(int n)
    {
        if (n < 1) {
            throw AddressError("gap level must be >= 1");
        }
    }

    static bool in_table(int n) { return static_cast<std::size_t>(n) <= table_depth; }

    T compute_gap_length(int n) const { return ops_.pow3(Rational(-n) / (1 + alpha_)); }

    // l_n^e = 3^(-n e / (1 + alpha)).
    T compute_gap_pow(int n, const Rational& e) const { return ops_.pow3(Rational(-n) * e / (1 + alpha_)); }

    Rational alpha_;
    FieldOps<T> ops_;
    Rational tent_;
    T s_;
    T M_;
    std::vector<T> gap_;
    std::vector<T> gap_alpha_;
    std::vector<T> slope_;
    std::vector<T> component_;
};

using ExactParams = Params<CubicNumber>;
using FloatParams = Params<MpfrInterval>;
using AnyParams = std::variant<ExactParams, FloatParams>;

/// Builds parameters in the requested mode. Exact mode lives in Q(3^(1/3)) and
/// therefore only exists for alpha = 1/2.
inline AnyParams params_new(const Rational& alpha, Mode mode, mpfr_prec_t precision = MpfrInterval::default_precision,
                            const Rational& tent_coefficient = 4)
{
    if (precision < 64) {
        throw RangeError("precision must be at least 64 bits");
    }
    if (mode == Mode::exact) {
        if (alpha > 0 && alpha.get_den() <= max_alpha_denominator && !satisfies_constraint(alpha)) {
            throw ConstraintError("alpha = " + to_string(alpha) +
                                  " violates alpha < log(3/2)/log 2 ~ 0.5849625007 (need 2 < 3^(1/(1+alpha)))");
        }
        return ExactParams(alpha, FieldOps<CubicNumber>{precision}, tent_coefficient);
    }
    return FloatParams(alpha, FieldOps<MpfrInterval>{precision}, tent_coefficient);
}

} // namespace sardex
