#pragma once

#include <cctype>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "sardex/error.hpp"
#include "sardex/numerics/rational.hpp"

namespace sardex {

namespace detail {

/// Nested rational enclosures of t = 3^(1/3). Level k is
/// [p_k, p_k + 1] / (1000 * 2^k), obtained by k bisections of [1.442, 1.443].
class CubeRootBisection {
public:
    static constexpr std::size_t cached_levels = 1024;

    static const CubeRootBisection& instance()
    {
        static const CubeRootBisection table;
        return table;
    }

    /// Numerator of the lower end at level k. Levels beyond the cache are
    /// bisected on the fly from the deepest cached level.
    Integer lower_numerator(std::size_t k) const
    {
        if (k < numerators_.size()) {
            return numerators_[k];
        }
        Integer p = numerators_.back();
        for (std::size_t level = numerators_.size() - 1; level < k; ++level) {
            p = step(p, level);
        }
        return p;
    }

    static Integer denominator(std::size_t k) { return Integer(1000) << static_cast<mp_bitcnt_t>(k); }

private:
    CubeRootBisection()
    {
        numerators_.reserve(cached_levels);
        numerators_.emplace_back(1442);
        for (std::size_t k = 0; k + 1 < cached_levels; ++k) {
            numerators_.push_back(step(numerators_.back(), k));
        }
    }

    // Midpoint (2p+1) / (1000 * 2^(k+1)); keep the half whose ends bracket t.
    static Integer step(const Integer& p, std::size_t k)
    {
        const Integer mid = 2 * p + 1;
        const Integer den = denominator(k + 1);
        const Integer mid_cubed = mid * mid * mid;
        const Integer three_den_cubed = 3 * den * den * den;
        return mid_cubed < three_den_cubed ? mid : Integer(2 * p);
    }

    std::vector<Integer> numerators_;
};

} // namespace detail

/// Element a + b t + c t^2 of the cubic field Q(t), t = 3^(1/3).
///
/// The representation over the basis {1, t, t^2} is unique because t has
/// degree 3 over Q, so equality is coefficient-wise.
class CubicNumber {
public:
    CubicNumber() = default;
    CubicNumber(Rational a, Rational b = 0, Rational c = 0) // NOLINT(google-explicit-constructor)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c))
    {
    }
    CubicNumber(long a) : a_(a) {} // NOLINT(google-explicit-constructor)

    static CubicNumber t() { return {0, 1, 0}; }

    /// t^e for any integer e, reduced with t^3 = 3.
    static CubicNumber t_power(long e)
    {
        long q = e / 3;
        long r = e % 3;
        if (r < 0) {
            r += 3;
            q -= 1;
        }
        const Rational scale = pow3(q);
        switch (r) {
        case 0:
            return {scale, 0, 0};
        case 1:
            return {0, scale, 0};
        default:
            return {0, 0, scale};
        }
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }

    bool is_zero() const { return a_ == 0 && b_ == 0 && c_ == 0; }
    bool is_rational() const { return b_ == 0 && c_ == 0; }

    /// Field norm a^3 + 3 b^3 + 9 c^3 - 9abc, the product of the three
    /// conjugates. Used for inversion.
    Rational norm() const { return a_ * a_ * a_ + 3 * b_ * b_ * b_ + 9 * c_ * c_ * c_ - 9 * a_ * b_ * c_; }

    CubicNumber inverse() const
    {
        if (is_zero()) {
            throw DivisionByZero("inverse of zero in Q(3^(1/3))");
        }
        const Rational n = norm();
        return {(a_ * a_ - 3 * b_ * c_) / n, (3 * c_ * c_ - a_ * b_) / n, (b_ * b_ - a_ * c_) / n};
    }

    /// Exact sign, decided by evaluating on nested rational enclosures of t
    /// until the result excludes zero.
    int sign() const
    {
        if (is_zero()) {
            return 0;
        }
        if (is_rational()) {
            return sgn(a_);
        }
        // Scale to integer coefficients A + B t + C t^2 (positive scale).
        Integer den;
        mpz_lcm(den.get_mpz_t(), a_.get_den_mpz_t(), b_.get_den_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c_.get_den_mpz_t());
        const Integer A = a_.get_num() * (den / a_.get_den());
        const Integer B = b_.get_num() * (den / b_.get_den());
        const Integer C = c_.get_num() * (den / c_.get_den());

        const auto& table = detail::CubeRootBisection::instance();
        auto decide = [&](std::size_t level) -> int {
            const Integer Q = detail::CubeRootBisection::denominator(level);
            const Integer P = table.lower_numerator(level);
            const Integer P1 = P + 1;
            // value * den * Q^2 = A Q^2 + B (tQ) Q + C (tQ)^2 with tQ in [P, P+1].
            const Integer base = A * Q * Q;
            Integer b_lo = B * Q * P;
            Integer b_hi = B * Q * P1;
            if (b_lo > b_hi) {
                b_lo.swap(b_hi);
            }
            Integer c_lo = C * P * P;
            Integer c_hi = C * P1 * P1;
            if (c_lo > c_hi) {
                c_lo.swap(c_hi);
            }
            if (base + b_lo + c_lo > 0) {
                return 1;
            }
            if (base + b_hi + c_hi < 0) {
                return -1;
            }
            return 0;
        };
        std::size_t level = 0;
        for (;;) {
            if (const int s = decide(level); s != 0) {
                return s;
            }
            level = level == 0 ? 8 : 2 * level;
        }
    }

    CubicNumber operator-() const { return {-a_, -b_, -c_}; }

    friend CubicNumber operator+(const CubicNumber& x, const CubicNumber& y)
    {
        return {x.a_ + y.a_, x.b_ + y.b_, x.c_ + y.c_};
    }
    friend CubicNumber operator-(const CubicNumber& x, const CubicNumber& y)
    {
        return {x.a_ - y.a_, x.b_ - y.b_, x.c_ - y.c_};
    }
    friend CubicNumber operator*(const CubicNumber& x, const CubicNumber& y)
    {
        // t^3 = 3, t^4 = 3t.
        return {x.a_ * y.a_ + 3 * (x.b_ * y.c_ + x.c_ * y.b_),
                x.a_ * y.b_ + x.b_ * y.a_ + 3 * x.c_ * y.c_,
                x.a_ * y.c_ + x.b_ * y.b_ + x.c_ * y.a_};
    }
    friend CubicNumber operator/(const CubicNumber& x, const CubicNumber& y)
    {
        if (y.is_zero()) {
            throw DivisionByZero("division by zero in Q(3^(1/3))");
        }
        if (y.is_rational()) {
            return {x.a_ / y.a_, x.b_ / y.a_, x.c_ / y.a_};
        }
        return x * y.inverse();
    }
    friend CubicNumber operator*(const CubicNumber& x, const Rational& q) { return {x.a_ * q, x.b_ * q, x.c_ * q}; }
    friend CubicNumber operator*(const Rational& q, const CubicNumber& x) { return x * q; }

    CubicNumber& operator+=(const CubicNumber& y) { return *this = *this + y; }
    CubicNumber& operator-=(const CubicNumber& y) { return *this = *this - y; }
    CubicNumber& operator*=(const CubicNumber& y) { return *this = *this * y; }
    CubicNumber& operator/=(const CubicNumber& y) { return *this = *this / y; }

    friend bool operator==(const CubicNumber& x, const CubicNumber& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

    friend int compare(const CubicNumber& x, const CubicNumber& y) { return (x - y).sign(); }
    friend bool operator<(const CubicNumber& x, const CubicNumber& y) { return compare(x, y) < 0; }
    friend bool operator<=(const CubicNumber& x, const CubicNumber& y) { return compare(x, y) <= 0; }
    friend bool operator>(const CubicNumber& x, const CubicNumber& y) { return compare(x, y) > 0; }
    friend bool operator>=(const CubicNumber& x, const CubicNumber& y) { return compare(x, y) >= 0; }

    /// "a + b*t + c*t^2" with zero terms omitted; t = 3^(1/3).
    std::string to_string() const
    {
        std::string out;
        auto term = [&](const Rational& q, const char* unit) {
            if (q == 0) {
                return;
            }
            std::string body = sardex::to_string(abs(q));
            if (*unit != '\0') {
                body = (abs(q) == 1 ? std::string() : body + "*") + unit;
            }
            if (out.empty()) {
                out = (q < 0 ? "-" : "") + body;
            } else {
                out += (q < 0 ? " - " : " + ") + body;
            }
        };
        term(a_, "");
        term(b_, "t");
        term(c_, "t^2");
        return out.empty() ? "0" : out;
    }

    friend std::ostream& operator<<(std::ostream& os, const CubicNumber& x) { return os << x.to_string(); }

private:
    Rational a_, b_, c_;
};

enum class CubicOp { add, sub, mul, div };

inline CubicNumber cubic_arith(const CubicNumber& x, const CubicNumber& y, CubicOp op)
{
    switch (op) {
    case CubicOp::add:
        return x + y;
    case CubicOp::sub:
        return x - y;
    case CubicOp::mul:
        return x * y;
    case CubicOp::div:
        return x / y;
    }
    return {};
}

inline int cubic_sign(const CubicNumber& x) { return x.sign(); }

/// Parses "a + b*t + c*t^2" (any order, repeated terms summed; coefficients
/// as in parse_rational).
inline CubicNumber parse_cubic(std::string_view text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s += ch;
        }
    }
    if (s.empty()) {
        throw ParseError("empty number");
    }
    Rational coeff[3];
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = i + 1;
        while (j < s.size() && s[j] != '+' && s[j] != '-') {
            ++j;
        }
        std::string term = s.substr(i, j - i);
        i = j;
        bool negative = false;
        if (term[0] == '+' || term[0] == '-') {
            negative = term[0] == '-';
            term.erase(0, 1);
        }
        int power = 0;
        std::string number = term;
        if (const auto tpos = term.find('t'); tpos != std::string::npos) {
            const std::string unit = term.substr(tpos);
            if (unit == "t" || unit == "t^1") {
                power = 1;
            } else if (unit == "t^2") {
                power = 2;
            } else {
                throw ParseError("not a number in Q(3^(1/3)): '" + std::string(text) + "'");
            }
            number = term.substr(0, tpos);
            if (number.empty()) {
                number = "1";
            } else if (number.back() == '*') {
                number.pop_back();
            } else {
                throw ParseError("not a number in Q(3^(1/3)): '" + std::string(text) + "'");
            }
        }
        const Rational q = parse_rational(number);
        coeff[power] += negative ? Rational(-q) : q;
    }
    return CubicNumber(coeff[0], coeff[1], coeff[2]);
}

} // namespace sardex
