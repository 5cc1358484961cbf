#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "sardex/error.hpp"

namespace sardex {

using Integer = mpz_class;
using Rational = mpq_class;

enum class Rounding { down, up, nearest };

inline Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer pow_int(unsigned long base, unsigned long exp)
{
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

/// 3^e for any integer e, as a reduced rational.
inline Rational pow3(long e)
{
    if (e >= 0) {
        return Rational(pow_int(3, static_cast<unsigned long>(e)));
    }
    return make_rational(1, pow_int(3, static_cast<unsigned long>(-e)));
}

inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Integer ceil_div(const Integer& a, const Integer& b)
{
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Rational floor(const Rational& q) { return Rational(floor_div(q.get_num(), q.get_den())); }

inline Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// "p" or "p/q".
inline std::string to_string(const Rational& q) { return q.get_str(10); }

/// Parses "p", "p/q" or a decimal "[-]d*.d*" as an exact rational. A decimal
/// with k fraction digits becomes a fraction over 10^k; no binary rounding is
/// involved anywhere.
inline Rational parse_rational(std::string_view text)
{
    auto fail = [&]() -> Rational {
        throw ParseError("not a rational or decimal number: '" + std::string(text) + "'");
    };
    if (text.empty()) {
        return fail();
    }
    std::string s(text);
    const auto slash = s.find('/');
    auto is_int = [](std::string_view v, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !v.empty() && (v[0] == '-' || v[0] == '+')) {
            i = 1;
        }
        if (i == v.size()) {
            return false;
        }
        for (; i < v.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(v[i]))) {
                return false;
            }
        }
        return true;
    };
    if (slash != std::string::npos) {
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (!is_int(num, true) || !is_int(den, false)) {
            return fail();
        }
        Integer n(num[0] == '+' ? num.substr(1) : num, 10);
        Integer d(den, 10);
        if (d == 0) {
            throw ParseError("zero denominator in '" + s + "'");
        }
        return make_rational(n, d);
    }
    bool negative = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        negative = s[0] == '-';
        i = 1;
    }
    const auto dot = s.find('.', i);
    std::string whole = s.substr(i, dot == std::string::npos ? std::string::npos : dot - i);
    std::string frac = dot == std::string::npos ? std::string() : s.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
        return fail();
    }
    if ((!whole.empty() && !is_int(whole, false)) || (!frac.empty() && !is_int(frac, false))) {
        return fail();
    }
    Integer n(whole.empty() ? std::string("0") : whole + frac, 10);
    if (whole.empty()) {
        n = Integer(frac, 10);
    }
    Rational q = make_rational(n, pow_int(10, frac.size()));
    return negative ? Rational(-q) : q;
}

/// Fixed-point decimal with exactly `digits` fraction digits, rounded in the
/// requested direction. Values already representable with that many digits
/// are rendered exactly, so parse_rational(to_fixed(q, d, r)) == q for them.
inline std::string to_fixed(const Rational& q, std::size_t digits, Rounding mode)
{
    const Integer scale = pow_int(10, digits);
    const Integer scaled_num = q.get_num() * scale;
    Integer n;
    switch (mode) {
    case Rounding::down:
        n = floor_div(scaled_num, q.get_den());
        break;
    case Rounding::up:
        n = ceil_div(scaled_num, q.get_den());
        break;
    case Rounding::nearest:
        n = floor_div(2 * scaled_num + q.get_den(), 2 * q.get_den());
        break;
    }
    const bool negative = n < 0;
    if (negative) {
        n = -n;
    }
    std::string body = n.get_str(10);
    if (body.size() <= digits) {
        body.insert(0, digits + 1 - body.size(), '0');
    }
    std::string out = negative ? "-" : "";
    out += body.substr(0, body.size() - digits);
    if (digits > 0) {
        out += '.';
        out += body.substr(body.size() - digits);
    }
    return out;
}

} // namespace sardex
