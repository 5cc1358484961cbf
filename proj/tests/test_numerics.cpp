#include <array>
#include <random>

#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "sardex/numerics/cubic.hpp"
#include "sardex/numerics/field.hpp"
#include "sardex/numerics/interval.hpp"
#include "sardex/numerics/rational.hpp"

using namespace sardex;

namespace {

/// |iv - ref| below 10^-digits and the interval is tight.
bool near_reference(const MpfrInterval& iv, const char* ref, int digits = 19)
{
    const Rational r = parse_rational(ref);
    const Rational tol = make_rational(1, pow_int(10, static_cast<unsigned long>(digits)));
    return abs(iv.lower_rational() - r) < tol && abs(iv.upper_rational() - r) < tol && iv.width() < tol;
}

/// Two enclosures of the same real number must intersect.
bool overlaps(const MpfrInterval& a, const MpfrInterval& b)
{
    return a.lower_rational() <= b.upper_rational() && b.lower_rational() <= a.upper_rational();
}

std::array<Rational, 3> coeffs(const CubicNumber& x) { return {x.a(), x.b(), x.c()}; }

CubicNumber random_cubic(std::mt19937_64& rng, int range)
{
    std::uniform_int_distribution<int> num(-range, range);
    std::uniform_int_distribution<int> den(1, 7);
    return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

} // namespace

TEST_CASE("rational parsing is exact", "[rational]")
{
    CHECK(parse_rational("1.37") == make_rational(137, 100));
    CHECK(parse_rational("-3/6") == make_rational(-1, 2));
    CHECK(parse_rational("0.55") == make_rational(11, 20));
    CHECK(parse_rational("42") == Rational(42));
    CHECK(parse_rational(".5") == make_rational(1, 2));
    for (const char* bad : {"", "abc", "1/", "/2", "1/0", "1.2.3", "1/-2", "--1"}) {
        INFO(bad);
        CHECK_THROWS_AS(parse_rational(bad), ParseError);
    }
    CHECK(make_rational(6, 4).get_den() == 2);
}

TEST_CASE("fixed-point rendering rounds in the requested direction", "[rational]")
{
    CHECK(to_fixed(make_rational(1, 3), 5, Rounding::down) == "0.33333");
    CHECK(to_fixed(make_rational(1, 3), 5, Rounding::up) == "0.33334");
    CHECK(to_fixed(make_rational(-1, 3), 5, Rounding::down) == "-0.33334");
    CHECK(to_fixed(make_rational(2, 3), 3, Rounding::nearest) == "0.667");
    CHECK(to_fixed(Rational(0), 2, Rounding::up) == "0.00");
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const Rational q = make_rational(static_cast<long>(rng() % 2000001) - 1000000, pow_int(10, rng() % 9));
        CHECK(parse_rational(to_fixed(q, 10, Rounding::nearest)) == q);
    }
}

TEST_CASE("powers of three", "[rational]")
{
    CHECK(pow3(0) == 1);
    CHECK(pow3(4) == 81);
    CHECK(pow3(-3) == make_rational(1, 27));
    CHECK(floor(make_rational(-7, 2)) == -4);
}

TEST_CASE("cubic field examples", "[cubic]")
{
    const CubicNumber t = CubicNumber::t();
    CHECK(t * t * t == CubicNumber(3));
    CHECK((CubicNumber(1) + t) + (CubicNumber(2) - t) == CubicNumber(3));
    const CubicNumber d(-2, 0, 1);
    const CubicNumber m = d.inverse();
    CHECK(d * m == CubicNumber(1));
    CHECK(m == CubicNumber(4, 3, 2));
    CHECK(cubic_arith(d, m, CubicOp::mul) == CubicNumber(1));
    CHECK(cubic_arith(CubicNumber(1), d, CubicOp::div) == m);
    CHECK_THROWS_AS(CubicNumber(0).inverse(), DivisionByZero);
    CHECK_THROWS_AS(cubic_arith(t, CubicNumber(0), CubicOp::div), DivisionByZero);
    CHECK(CubicNumber::t_power(-6) == CubicNumber(make_rational(1, 9)));
    CHECK(CubicNumber::t_power(4) == CubicNumber(0, 3, 0));
}

TEST_CASE("cubic signs", "[cubic]")
{
    CHECK(cubic_sign(CubicNumber(0)) == 0);
    CHECK(cubic_sign(CubicNumber(-2, 0, 1)) == 1);
    CHECK(cubic_sign(CubicNumber(3, -2, 0)) == 1);
    CHECK(cubic_sign(CubicNumber(-3, 2, 0)) == -1);
}

TEST_CASE("cubic multiplication and inverse agree with polynomial arithmetic mod x^3 - 3", "[cubic][property]")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const CubicNumber x = random_cubic(rng, 20);
        const CubicNumber y = random_cubic(rng, 20);
        CHECK(coeffs(x * y) == oracle::mul_mod(coeffs(x), coeffs(y)));
        if (!x.is_zero()) {
            CHECK(coeffs(x.inverse()) == oracle::inverse_mod(coeffs(x)));
        }
    }
}

TEST_CASE("bisection sign agrees with the norm sign", "[cubic][property]")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 2000; ++i) {
        const CubicNumber x = random_cubic(rng, 9);
        CHECK(x.sign() == oracle::sign_by_norm(x.a(), x.b(), x.c()));
    }
    // Continued-fraction convergents p/q of t make p - q t tiny.
    const std::array<std::pair<long, long>, 8> convergents{
        {{3, 2}, {13, 9}, {75, 52}, {88, 61}, {163, 113}, {414, 287}, {5545, 3845}, {14707, 10197}}};
    for (const auto& [p, q] : convergents) {
        const CubicNumber x(p, -q, 0);
        CHECK(x.sign() == oracle::sign_by_norm(x.a(), x.b(), x.c()));
        const CubicNumber y(0, p * p, -q * q); // p^2 t - q^2 t^2 = t (p^2 - q^2 t)
        CHECK(y.sign() == oracle::sign_by_norm(y.a(), y.b(), y.c()));
    }
    // Sign is multiplicative.
    for (int i = 0; i < 300; ++i) {
        const CubicNumber x = random_cubic(rng, 9);
        const CubicNumber y = random_cubic(rng, 9);
        CHECK((x * y).sign() == x.sign() * y.sign());
    }
}

TEST_CASE("cubic parsing round-trips rendering", "[cubic]")
{
    CHECK(parse_cubic("4 + 3*t + 2*t^2") == CubicNumber(4, 3, 2));
    CHECK(parse_cubic("t^2") == CubicNumber(0, 0, 1));
    CHECK(parse_cubic("-1/3*t + 0.5") == CubicNumber(make_rational(1, 2), make_rational(-1, 3), 0));
    CHECK_THROWS_AS(parse_cubic("2*x"), ParseError);
    CHECK_THROWS_AS(parse_cubic("2 +"), ParseError);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; ++i) {
        const CubicNumber x = random_cubic(rng, 50);
        CHECK(parse_cubic(x.to_string()) == x);
    }
}

TEST_CASE("interval enclosures of reference constants", "[interval]")
{
    const FieldOps<CubicNumber> exact{};
    CHECK(near_reference(exact.to_interval(CubicNumber::t()), "1.44224957030740838232"));
    CHECK(near_reference(exact.to_interval(CubicNumber(0, 0, 1)), "2.08008382305190411453"));
    CHECK(near_reference(exact.to_interval(CubicNumber(4, 3, 2)), "12.486916357026033376", 17));
    CHECK(near_reference(MpfrInterval::pow3(make_rational(-4, 5), 256), "0.41524364653850577532"));
    CHECK(near_reference(MpfrInterval::pow3(make_rational(-4, 3), 256), "0.2311204247835449016", 18));
    CHECK(near_reference(MpfrInterval::pow3(make_rational(4, 5), 256), "2.40822468528069204629"));
}

TEST_CASE("interval arithmetic contains exact results", "[interval][property]")
{
    std::mt19937_64 rng(9);
    const FieldOps<CubicNumber> exact{};
    for (int i = 0; i < 300; ++i) {
        const CubicNumber x = random_cubic(rng, 9);
        const CubicNumber y = random_cubic(rng, 9);
        const MpfrInterval ix = exact.to_interval(x);
        const MpfrInterval iy = exact.to_interval(y);
        CHECK(overlaps(ix + iy, exact.to_interval(x + y)));
        CHECK(overlaps(ix - iy, exact.to_interval(x - y)));
        CHECK(overlaps(ix * iy, exact.to_interval(x * y)));
        CHECK((ix * iy).width() < make_rational(1, Integer(1) << 200));
        if (!iy.contains(Rational(0))) {
            CHECK(overlaps(ix / iy, exact.to_interval(x / y)));
        }
    }
    const MpfrInterval third(make_rational(1, 3), 64);
    CHECK(third.contains(make_rational(1, 3)));
    CHECK_FALSE(third.is_point());
    CHECK(MpfrInterval(make_rational(3, 8), 64).is_point());
    CHECK_THROWS_AS(third / MpfrInterval(make_rational(-1, 2), make_rational(1, 2), 64), DivisionByZero);
    CHECK(MpfrInterval(make_rational(-1, 2), make_rational(1, 2), 64).sign() == std::nullopt);
    CHECK(MpfrInterval(make_rational(1, 3), 64).sign() == std::optional<int>(1));
}

TEST_CASE("gap lengths multiply consistently in exact mode", "[cubic][property]")
{
    const CubicNumber s_inv = CubicNumber(0, 0, 1).inverse();
    for (int n = 1; n <= 6; ++n) {
        for (int m = 1; m <= 6; ++m) {
            CubicNumber ln = 1, lm = 1, lnm = 1;
            for (int k = 0; k < n; ++k) {
                ln = ln * s_inv;
            }
            for (int k = 0; k < m; ++k) {
                lm = lm * s_inv;
            }
            for (int k = 0; k < n + m; ++k) {
                lnm = lnm * s_inv;
            }
            CHECK(ln * lm == lnm);
            CHECK(ln == CubicNumber::t_power(-2 * n));
            const CubicNumber root = CubicNumber::t_power(-n);
            CHECK(root * root == ln);
        }
    }
}
