#include <random>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sardex/ternary/cantor.hpp"
#include "sardex/ternary/expansion.hpp"

using namespace sardex;

namespace {

Rational random_unit_rational(std::mt19937_64& rng)
{
    const long den = 1 + static_cast<long>(rng() % 500);
    return make_rational(static_cast<long>(rng() % static_cast<unsigned long>(den + 1)), den);
}

/// Value of a digit string read as a plain finite sum, independent of the
/// class: sum of d_i 3^-i over pre, then the period as a geometric series.
Rational series_value(const Digits& pre, const Digits& per)
{
    Rational v = 0;
    Rational scale = make_rational(1, 3);
    for (auto d : pre) {
        v += d * scale;
        scale /= 3;
    }
    if (per.empty()) {
        return v;
    }
    Rational block = 0;
    Rational inner = scale;
    for (auto d : per) {
        block += d * inner;
        inner /= 3;
    }
    // block * (1 + 3^-p + 3^-2p + ...)
    return v + block / (1 - pow3(-static_cast<long>(per.size())));
}

} // namespace

TEST_CASE("ternary expansion examples", "[ternary]")
{
    const TernaryExpansion zero = ternary_expand(0);
    CHECK(zero.preperiod().empty());
    CHECK(zero.period().empty());
    const TernaryExpansion quarter = ternary_expand(make_rational(1, 4));
    CHECK(quarter.preperiod().empty());
    CHECK(quarter.period() == Digits{0, 2});
    CHECK(quarter.to_string() == "0.(02)");
    const TernaryExpansion one = ternary_expand(1);
    CHECK(one.preperiod().empty());
    CHECK(one.period() == Digits{2});
    CHECK(ternary_expand(make_rational(1, 3)).to_string() == "0.1");
    CHECK(ternary_expand(make_rational(3, 8)).to_string() == "0.(10)");
    CHECK_THROWS_AS(ternary_expand(make_rational(-1, 3)), RangeError);
    CHECK_THROWS_AS(ternary_expand(make_rational(4, 3)), RangeError);
}

TEST_CASE("ternary expansions normalize", "[ternary]")
{
    CHECK(TernaryExpansion({0, 2, 0, 2}, {0, 2}) == TernaryExpansion({}, {0, 2}));
    CHECK(TernaryExpansion({1}, {0}) == TernaryExpansion({1}, {}));
    CHECK(TernaryExpansion({1, 0, 0}, {}) == TernaryExpansion({1}, {}));
    CHECK(TernaryExpansion({}, {2, 2}) == TernaryExpansion({}, {2}));
    CHECK(TernaryExpansion::parse("0.0(2)") == TernaryExpansion({0}, {2}));
    CHECK(TernaryExpansion::parse("1|02").value() == make_rational(1, 3) + make_rational(1, 12));
    CHECK_THROWS_AS(TernaryExpansion::parse("0.3"), ParseError);
    CHECK_THROWS_AS(TernaryExpansion({3}, {}), ParseError);
}

TEST_CASE("expansion round trip and series value", "[ternary][property]")
{
    std::mt19937_64 rng(21);
    for (int i = 0; i < 1000; ++i) {
        const Rational r = random_unit_rational(rng);
        const TernaryExpansion e = ternary_expand(r);
        CHECK(e.value() == r);
        CHECK(series_value(e.preperiod(), e.period()) == r);
        CHECK(ternary_expand(e.value()) == e);
        CHECK(TernaryExpansion::parse(e.notation()) == e);
        if (r != 1) {
            CHECK(e.period() != Digits{2});
        }
    }
}

TEST_CASE("gap addresses", "[ternary]")
{
    CHECK(cantor_gap_interval(GapAddress(1, 1)) == std::pair{make_rational(1, 3), make_rational(2, 3)});
    CHECK(cantor_gap_interval(GapAddress(2, 1)) == std::pair{make_rational(1, 9), make_rational(2, 9)});
    CHECK(cantor_gap_interval(GapAddress(2, 2)) == std::pair{make_rational(7, 9), make_rational(8, 9)});
    CHECK_THROWS_AS(GapAddress(2, 3), AddressError);
    CHECK_THROWS_AS(GapAddress(0, 1), AddressError);
    for (int n = 1; n <= 6; ++n) {
        for (long k = 1; k <= (1L << (n - 1)); ++k) {
            const GapAddress a(n, Integer(k));
            CHECK(GapAddress::from_path(a.path()) == a);
        }
    }
}

TEST_CASE("gap intervals tile the complement of C", "[ternary][property]")
{
    // Total length of gaps at levels <= 8 is 1 - (2/3)^8, and they are disjoint.
    std::vector<std::pair<Rational, Rational>> gaps;
    Rational total = 0;
    for (int n = 1; n <= 8; ++n) {
        for (long k = 1; k <= (1L << (n - 1)); ++k) {
            gaps.push_back(cantor_gap_interval(GapAddress(n, Integer(k))));
            total += gaps.back().second - gaps.back().first;
        }
    }
    CHECK(total == 1 - make_rational(256, 6561));
    std::sort(gaps.begin(), gaps.end());
    for (std::size_t i = 1; i < gaps.size(); ++i) {
        CHECK(gaps[i - 1].second < gaps[i].first);
    }
}

TEST_CASE("partial gap sums", "[ternary]")
{
    CHECK(cantor_partial_gap_sum(ternary_expand(0), 5) == 0);
    CHECK(cantor_partial_gap_sum(ternary_expand(1), 1) == make_rational(1, 3));
    CHECK(cantor_partial_gap_sum(ternary_expand(make_rational(2, 3)), 3) == make_rational(14, 27));
    CHECK_THROWS_AS(cantor_partial_gap_sum(ternary_expand(make_rational(1, 2)), 3), NotInCantorSet);
}

TEST_CASE("partial gap sums match gap enumeration", "[ternary][property]")
{
    std::mt19937_64 rng(4);
    for (int i = 0; i < 300; ++i) {
        Digits pre(rng() % 7), per(rng() % 5);
        for (auto& d : pre) {
            d = (rng() & 1U) ? 2 : 0;
        }
        for (auto& d : per) {
            d = (rng() & 1U) ? 2 : 0;
        }
        const TernaryExpansion x(pre, per);
        const Rational v = x.value();
        Rational previous = 0;
        for (int depth = 1; depth <= 9; ++depth) {
            const Rational s = cantor_partial_gap_sum(x, depth);
            CHECK(s == oracle::brute_force_gap_sum(v, depth));
            CHECK(s >= previous);
            CHECK(v - s <= make_rational(pow_int(2, depth), pow_int(3, depth)));
            previous = s;
        }
    }
}

TEST_CASE("cantor membership", "[ternary]")
{
    CHECK(std::holds_alternative<InCantor>(cantor_locate(make_rational(1, 4))));
    const auto third = cantor_locate(make_rational(1, 3));
    REQUIRE(std::holds_alternative<InCantor>(third));
    CHECK(std::get<InCantor>(third).digits == TernaryExpansion({0}, {2}));
    const auto half = cantor_locate(make_rational(1, 2));
    REQUIRE(std::holds_alternative<InCantorGap>(half));
    CHECK(std::get<InCantorGap>(half).address == GapAddress(1, 1));
    CHECK(std::get<InCantorGap>(half).offset == make_rational(1, 6));
    CHECK(std::holds_alternative<InCantor>(cantor_locate(make_rational(2, 3))));
    CHECK_THROWS_AS(cantor_locate(make_rational(3, 2)), RangeError);
}

TEST_CASE("membership agrees with the gap enumeration", "[ternary][property]")
{
    std::mt19937_64 rng(8);
    for (int i = 0; i < 500; ++i) {
        const long den = pow_int(3, rng() % 6).get_si() * static_cast<long>(1 + rng() % 4);
        const Rational r = make_rational(static_cast<long>(rng() % static_cast<unsigned long>(den + 1)), den);
        const auto loc = cantor_locate(r);
        if (const auto* g = std::get_if<InCantorGap>(&loc)) {
            const auto [lo, hi] = cantor_gap_interval(g->address);
            CHECK(lo < r);
            CHECK(r < hi);
            CHECK(g->offset == r - lo);
        } else {
            const auto& c = std::get<InCantor>(loc);
            CHECK_FALSE(c.digits.has_digit_one());
            CHECK(c.digits.value() == r);
        }
    }
}

TEST_CASE("steinhaus decomposition examples", "[ternary]")
{
    const auto [x2, y2] = steinhaus_decompose(2);
    CHECK(x2.value() == 1);
    CHECK(y2.value() == 1);
    const auto [x1, y1] = steinhaus_decompose(1);
    CHECK(x1 == TernaryExpansion({}, {2}));
    CHECK(y1.value() == 0);
    const auto [xh, yh] = steinhaus_decompose(make_rational(1, 2));
    CHECK(xh.to_string() == "0.(02)");
    CHECK(yh.to_string() == "0.(02)");
    const auto [xq, yq] = steinhaus_decompose(make_rational(3, 4));
    CHECK(xq.to_string() == "0.(20)");
    CHECK(xq.value() == make_rational(3, 4));
    CHECK(yq.value() == 0);
    CHECK_THROWS_AS(steinhaus_decompose(make_rational(-1, 5)), RangeError);
    CHECK_THROWS_AS(steinhaus_decompose(make_rational(21, 10)), RangeError);
}

TEST_CASE("steinhaus decomposition is exact", "[ternary][property]")
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        const Rational u = 2 * random_unit_rational(rng);
        const auto [x, y] = steinhaus_decompose(u);
        CHECK_FALSE(x.has_digit_one());
        CHECK_FALSE(y.has_digit_one());
        CHECK(x.value() + y.value() == u);
    }
}
