#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "sardex/error.hpp"
#include "sardex/numerics/rational.hpp"

namespace sardex {

using Digits = std::vector<std::uint8_t>;

/// Eventually periodic base-3 digit sequence 0.d1 d2 d3 ... of a value in [0, 1].
///
/// Any digit sequence is accepted; the stored form is structurally normalized
/// (shortest period, shortest preperiod, period "0" folded into termination),
/// so two expansions compare equal iff they are the same digit sequence.
/// ternary_expand() additionally picks the terminating sequence whenever a
/// value has two expansions, except for 1 = 0.(2).
class TernaryExpansion {
public:
    TernaryExpansion() = default;

    TernaryExpansion(Digits preperiod, Digits period) : pre_(std::move(preperiod)), per_(std::move(period))
    {
        for (auto d : pre_) {
            check_digit(d);
        }
        for (auto d : per_) {
            check_digit(d);
        }
        normalize();
    }

    /// Parses "0.<digits>(<period>)", "0.<digits>", "<digits>|<period>" or "<digits>|".
    static TernaryExpansion parse(std::string_view text)
    {
        std::string s(text);
        Digits pre, per;
        auto take = [&](std::string_view part, Digits& out) {
            for (char ch : part) {
                if (ch < '0' || ch > '2') {
                    throw ParseError("bad ternary digit string: '" + s + "'");
                }
                out.push_back(static_cast<std::uint8_t>(ch - '0'));
            }
        };
        if (const auto bar = s.find('|'); bar != std::string::npos) {
            take(std::string_view(s).substr(0, bar), pre);
            take(std::string_view(s).substr(bar + 1), per);
            return {pre, per};
        }
        if (s.rfind("0.", 0) != 0) {
            throw ParseError("ternary expansion must start with '0.' or use 'pre|period': '" + s + "'");
        }
        std::string_view body = std::string_view(s).substr(2);
        const auto open = body.find('(');
        if (open == std::string_view::npos) {
            take(body, pre);
            return {pre, per};
        }
        if (body.back() != ')') {
            throw ParseError("unterminated period in '" + s + "'");
        }
        take(body.substr(0, open), pre);
        take(body.substr(open + 1, body.size() - open - 2), per);
        if (per.empty()) {
            throw ParseError("empty period in '" + s + "'");
        }
        return {pre, per};
    }

    const Digits& preperiod() const { return pre_; }
    const Digits& period() const { return per_; }
    bool terminating() const { return per_.empty(); }

    /// Digit at 1-based position i.
    std::uint8_t digit(std::size_t i) const
    {
        if (i == 0) {
            throw RangeError("ternary digit positions start at 1");
        }
        if (i <= pre_.size()) {
            return pre_[i - 1];
        }
        if (per_.empty()) {
            return 0;
        }
        return per_[(i - 1 - pre_.size()) % per_.size()];
    }

    bool has_digit_one() const
    {
        return std::find(pre_.begin(), pre_.end(), 1) != pre_.end() || std::find(per_.begin(), per_.end(), 1) != per_.end();
    }

    /// True when all digits past the preperiod are equal (terminating or 0.x(2)).
    bool eventually_constant() const { return per_.size() <= 1; }

    Rational value() const
    {
        Integer pre_val = 0;
        for (auto d : pre_) {
            pre_val = 3 * pre_val + d;
        }
        Rational v(pre_val);
        if (!per_.empty()) {
            Integer per_val = 0;
            for (auto d : per_) {
                per_val = 3 * per_val + d;
            }
            v += make_rational(per_val, pow_int(3, per_.size()) - 1);
        }
        return v / Rational(pow_int(3, pre_.size()));
    }

    /// "0.0(2)" style.
    std::string to_string() const
    {
        std::string out = "0.";
        for (auto d : pre_) {
            out += static_cast<char>('0' + d);
        }
        if (!per_.empty()) {
            out += '(';
            for (auto d : per_) {
                out += static_cast<char>('0' + d);
            }
            out += ')';
        }
        if (out == "0.") {
            out = "0.0";
        }
        return out;
    }

    /// "<preperiod>|<period>" style.
    std::string notation() const
    {
        std::string out;
        for (auto d : pre_) {
            out += static_cast<char>('0' + d);
        }
        out += '|';
        for (auto d : per_) {
            out += static_cast<char>('0' + d);
        }
        return out;
    }

    friend bool operator==(const TernaryExpansion&, const TernaryExpansion&) = default;

private:
    static void check_digit(std::uint8_t d)
    {
        if (d > 2) {
            throw ParseError("ternary digit out of range: " + std::to_string(d));
        }
    }

    void normalize()
    {
        // Shortest repeating unit.
        for (std::size_t len = 1; len < per_.size(); ++len) {
            if (per_.size() % len != 0) {
                continue;
            }
            bool repeats = true;
            for (std::size_t i = len; i < per_.size() && repeats; ++i) {
                repeats = per_[i] == per_[i - len];
            }
            if (repeats) {
                per_.resize(len);
                break;
            }
        }
        if (per_.size() == 1 && per_[0] == 0) {
            per_.clear();
        }
        // Fold the tail of the preperiod into the period.
        while (!pre_.empty() && !per_.empty() && pre_.back() == per_.back()) {
            pre_.pop_back();
            std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
        }
        if (per_.empty()) {
            while (!pre_.empty() && pre_.back() == 0) {
                pre_.pop_back();
            }
        }
    }

    Digits pre_;
    Digits per_;
};

/// Exact base-3 expansion of r in [0, 1] by long division with remainder
/// cycle detection.
inline TernaryExpansion ternary_expand(const Rational& r)
{
    if (r < 0 || r > 1) {
        throw RangeError("ternary_expand requires 0 <= r <= 1, got " + to_string(r));
    }
    if (r == 1) {
        return {{}, {2}};
    }
    const Integer& den = r.get_den();
    Integer rem = r.get_num();
    Digits digits;
    std::map<Integer, std::size_t> seen;
    while (rem != 0) {
        if (auto it = seen.find(rem); it != seen.end()) {
            Digits pre(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
            Digits per(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
            return {pre, per};
        }
        seen.emplace(rem, digits.size());
        rem *= 3;
        const Integer d = rem / den;
        digits.push_back(static_cast<std::uint8_t>(d.get_ui()));
        rem -= d * den;
    }
    return {digits, {}};
}

} // namespace sardex
