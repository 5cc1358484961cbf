#pragma once

#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "sardex/construction/fat_cantor.hpp"
#include "sardex/construction/json.hpp"
#include "sardex/construction/params.hpp"
#include "sardex/ternary/cantor.hpp"
#include "sardex/verify/report.hpp"
#include "sardex/verify/sampling.hpp"

namespace sardex::verify {

struct VerifyConfig {
    int levels = 8;       // gap levels for gap_integral and image_gaps
    int depth = 12;       // descent depth for total_integral, coverage, measure
    std::size_t samples = 10000; // holder, c1 and steinhaus
    int coverage_grid = 1000;
    std::size_t partial_sum_samples = 100;
    std::vector<int> partial_sum_depths{5, 10, 15};
    int holder_depth = 40;
    int c1_depth = 48;
    Rational holder_constant = 4;
    std::uint64_t seed = 42;
};

inline constexpr int quadrature_panels = 4096;
inline constexpr double quadrature_tolerance = 1e-6;

namespace detail {

template <class T>
double to_double(const FieldOps<T>& ops, const T& v)
{
    const MpfrInterval iv = ops.to_interval(v);
    return mpfr_get_d(iv.lower(), MPFR_RNDN);
}

template <class T>
Rational upper_of(const FieldOps<T>& ops, const T& v)
{
    if constexpr (std::is_same_v<T, CubicNumber>) {
        if (v.is_rational()) {
            return v.a();
        }
    }
    return ops.to_interval(v).upper_rational();
}

template <class T>
Rational lower_of(const FieldOps<T>& ops, const T& v)
{
    if constexpr (std::is_same_v<T, CubicNumber>) {
        if (v.is_rational()) {
            return v.a();
        }
    }
    return ops.to_interval(v).lower_rational();
}

/// Slack for float-mode widths: outward rounding of rational end points.
inline Rational rounding_slack(mpfr_prec_t precision)
{
    return make_rational(1, Integer(1) << static_cast<mp_bitcnt_t>(precision - 8));
}

/// v <= bound, exactly in exact mode; in float mode the two enclosures must
/// not certify v > bound.
template <class T>
bool not_above(const FieldOps<T>& ops, const T& v, const T& bound)
{
    if constexpr (FieldOps<T>::mode == Mode::exact) {
        (void)ops;
        return compare(v, bound) <= 0;
    } else {
        return mpfr_lessequal_p(v.lower(), bound.upper());
    }
}

/// Upper bound on |a - b| over a in ea, b in eb.
template <class T>
T max_abs_difference(const FieldOps<T>& ops, const Enclosure<T>& ea, const Enclosure<T>& eb)
{
    if constexpr (FieldOps<T>::mode == Mode::exact) {
        (void)ops;
        const T up = ea.hi - eb.lo;
        const T down = eb.hi - ea.lo;
        return compare(up, down) >= 0 ? up : down;
    } else {
        const Rational up = ea.hi.upper_rational() - eb.lo.lower_rational();
        const Rational down = eb.hi.upper_rational() - ea.lo.lower_rational();
        return MpfrInterval(up > down ? up : down, ea.lo.precision());
    }
}

template <class T>
nlohmann::json point_json(const Params<T>& params, const T& v)
{
    return bounds_json(params.ops(), v);
}

} // namespace detail

/// Closed-form tent integral l_n * peak / 2 against 3^-n for every gap with
/// n <= max_level, plus a 4096-panel midpoint quadrature of g over each gap.
template <class T>
CheckResult check_gap_integral(const Params<T>& params, int max_level)
{
    CheckResult r;
    r.name = "gap_integral";
    r.metric = "max relative defect of midpoint quadrature against 3^-n";
    r.tolerance = Params<T>::mode() == Mode::exact ? "closed form exact; quadrature 1e-6 relative"
                                                  : "closed form contains 3^-n; quadrature 1e-6 relative";
    const auto& ops = params.ops();
    const double alpha = params.alpha().get_d();
    const double coefficient = params.tent_coefficient().get_d();
    for (int n = 1; n <= max_level; ++n) {
        const std::uint64_t count = 1ULL << static_cast<unsigned>(n - 1);
        const Rational target = pow3(-n);
        for (std::uint64_t k = 1; k <= count; ++k) {
            const GapAddress addr(n, Integer(static_cast<unsigned long>(k)));
            const FatGap<T> gap = gap_interval(params, addr);
            const T mid = gap.lo + gap.length * Rational(1, 2);
            const Enclosure<T> peak = g_eval(params, mid, n);
            const T closed = gap.length * peak.hi * Rational(1, 2);
            bool ok = false;
            if constexpr (FieldOps<T>::mode == Mode::exact) {
                ok = closed == CubicNumber(target);
            } else {
                ok = closed.contains(target);
            }
            if (!ok) {
                r.fail({{"gap", to_json(addr)}, {"closedForm", detail::point_json(params, closed)}, {"expected", to_string(target)}});
            }

            // Oracle: composite midpoint rule applied to the defining formula
            // c / l^(1-alpha) * dist(x, boundary) in double precision.
            const double len = detail::to_double(ops, gap.length);
            const double slope = coefficient / std::pow(len, 1.0 - alpha);
            const double h = len / quadrature_panels;
            double sum = 0;
            for (int j = 0; j < quadrature_panels; ++j) {
                const double u = (j + 0.5) * h;
                sum += slope * std::min(u, len - u);
            }
            const double quad = sum * h;
            const double rel = std::abs(quad - target.get_d()) / target.get_d();
            r.observe(Rational(rel));
            if (!(rel <= quadrature_tolerance)) {
                r.fail({{"gap", to_json(addr)}, {"quadrature", quad}, {"expected", to_string(target)}, {"relativeDefect", rel}});
            }

            // The implementation agrees with the formula at quadrature nodes.
            for (int j : {0, 1000, 2047, 2048, 4095}) {
                const T x = gap.lo + gap.length * make_rational(2 * j + 1, 2 * quadrature_panels);
                const double g = detail::to_double(ops, g_eval(params, x, n).lo);
                const double u = (j + 0.5) * h;
                const double want = slope * std::min(u, len - u);
                if (std::abs(g - want) > 1e-9 * std::max(1.0, std::abs(want))) {
                    r.fail({{"gap", to_json(addr)}, {"node", j}, {"g", g}, {"formula", want}});
                }
            }
            ++r.samples;
        }
    }
    return r;
}

/// Sum of all gap integrals up to depth D and f(M) = 1.
template <class T>
CheckResult check_total_integral(const Params<T>& params, int depth)
{
    CheckResult r;
    r.name = "total_integral";
    r.metric = "width of the f(M) enclosure";
    r.tolerance = "<= 3^-D";
    Rational partial = 0;
    for (int n = 1; n <= depth; ++n) {
        partial += Rational(pow_int(2, static_cast<unsigned long>(n - 1))) * pow3(-n);
    }
    const Rational expected = 1 - make_rational(pow_int(2, static_cast<unsigned long>(depth)), pow_int(3, static_cast<unsigned long>(depth)));
    if (partial != expected) {
        r.fail({{"partialSum", to_string(partial)}, {"expected", to_string(expected)}});
    }
    const Enclosure<T> f = f_eval(params, params.M(), depth);
    const auto& ops = params.ops();
    if (!contains(ops, f, Rational(1))) {
        r.fail({{"fM", enclosure_json(ops, f)}, {"expected", "1"}});
    }
    const Rational w = upper_bound(ops, f) - lower_bound(ops, f);
    r.observe(w);
    Rational allowed = pow3(-depth);
    if constexpr (FieldOps<T>::mode == Mode::exact) {
        if (!(f.lo == f.hi && f.lo == CubicNumber(1))) {
            r.fail({{"fM", enclosure_json(ops, f)}, {"expected", "exactly 1"}});
        }
    } else {
        allowed += detail::rounding_slack(params.precision());
    }
    if (w > allowed) {
        r.fail({{"width", metric_string(w)}, {"allowed", metric_string(allowed)}});
    }
    r.samples = 1;
    return r;
}

/// |g(x) - g(y)| <= C |x - y|^alpha on stratified pairs: both points in one
/// gap, points in two gaps (including tent peak against gap end), and a gap
/// point against a point deep inside a component.
template <class T>
CheckResult check_holder(const Params<T>& params, std::size_t samples, std::uint64_t seed, const VerifyConfig& config = {})
{
    CheckResult r;
    r.name = "holder";
    r.metric = "max |g(x)-g(y)| / |x-y|^alpha";
    r.tolerance = "<= " + to_string(config.holder_constant);
    const auto& ops = params.ops();
    const int depth = config.holder_depth;
    constexpr int max_level = 12;
    constexpr std::size_t peak_pairs = 64;
    for (std::size_t i = 0; i < samples; ++i) {
        SampleRng rng(seed, r.name, i);
        const std::size_t stratum = i % 3;
        T x = params.from_rational(0);
        T y = params.from_rational(0);
        if (stratum == 0) {
            const FatGap<T> gap = gap_interval(params, random_gap(rng, max_level));
            x = gap.lo + gap.length * rng.unit_fraction();
            y = gap.lo + gap.length * rng.unit_fraction();
        } else if (stratum == 1 && i / 3 < peak_pairs) {
            const FatGap<T> gap = gap_interval(params, random_gap(rng, max_level));
            x = gap.lo + gap.length * Rational(1, 2);
            const bool left = rng.coin();
            if constexpr (FieldOps<T>::mode == Mode::exact) {
                y = left ? gap.lo : gap.hi;
            } else {
                // End points cannot be located in float mode; stay 2^-40 l inside.
                const T inset = gap.length * make_rational(1, Integer(1) << 40);
                y = left ? gap.lo + inset : gap.hi - inset;
            }
        } else if (stratum == 1) {
            x = gap_point(params, rng, max_level);
            y = gap_point(params, rng, max_level);
        } else {
            x = gap_point(params, rng, max_level);
            if (FieldOps<T>::mode == Mode::exact && rng.coin()) {
                y = component_endpoint(params, rng, 20);
            } else {
                y = deep_point(params, rng, 4, 24);
            }
        }
        ++r.samples;
        const Enclosure<T> gx = g_eval(params, x, depth);
        const Enclosure<T> gy = g_eval(params, y, depth);
        const T dg = detail::max_abs_difference(ops, gx, gy);
        const T dx = ops.abs(x - y);
        if (ops.sign(dx) == std::optional<int>(0)) {
            continue;
        }
        const bool ok = ops.le_scaled_power(dg, config.holder_constant, dx, params.alpha());
        const MpfrInterval ratio = ops.to_interval(dg) / ops.to_interval(dx).abs().pow(params.alpha());
        r.observe(ratio.upper_rational());
        if (!ok) {
            r.fail({{"sample", i},
                    {"x", detail::point_json(params, x)},
                    {"y", detail::point_json(params, y)},
                    {"gx", enclosure_json(ops, gx)},
                    {"gy", enclosure_json(ops, gy)},
                    {"ratio", metric_string(ratio.upper_rational())}});
        }
    }
    // The sharp constant for the tent construction is 2^(1+alpha).
    const MpfrInterval sharp = MpfrInterval(Rational(2), params.precision()).pow(1 + params.alpha());
    if (r.worst > sharp.upper_rational() + make_rational(1, Integer(1) << 40)) {
        r.notes.push_back("observed constant exceeds 2^(1+alpha)");
    }
    return r;
}

/// First-order remainder |f(x+h) - f(x) - g(x) h| <= C/(1+alpha) h^(1+alpha)
/// for h = +-3^-j, j = 2..20, measured from enclosure bounds.
template <class T>
CheckResult check_c1(const Params<T>& params, std::size_t samples, std::uint64_t seed, const VerifyConfig& config = {})
{
    CheckResult r;
    r.name = "c1";
    const Rational constant = config.holder_constant / (1 + params.alpha());
    r.metric = "max |f(x+h)-f(x)-g(x)h| / |h|^(1+alpha)";
    r.tolerance = "<= " + to_string(constant);
    const auto& ops = params.ops();
    const int depth = config.c1_depth;
    for (std::size_t i = 0; i < samples; ++i) {
        SampleRng rng(seed, r.name, i);
        const std::size_t stratum = i % 3;
        T x = params.from_rational(0);
        if (stratum == 0) {
            x = gap_point(params, rng, 12);
        } else if (stratum == 1 && FieldOps<T>::mode == Mode::exact) {
            x = component_endpoint(params, rng, 20);
        } else {
            x = deep_point(params, rng, 4, 24);
        }
        const long j = rng.between(2, 20);
        const Rational step = pow3(-j);
        const T h = params.from_rational(step);
        bool forward = true;
        if (const auto s = ops.sign(params.M() - x - h); !s || *s < 0) {
            forward = false;
        }
        const T x2 = forward ? x + h : x - h;
        ++r.samples;
        const Enclosure<T> f0 = f_eval(params, x, depth);
        const Enclosure<T> f1 = f_eval(params, x2, depth);
        const Enclosure<T> g0 = g_eval(params, x, depth);
        // remainder = f1 - f0 -+ g0 h
        Enclosure<T> rem{f1.lo - f0.hi, f1.hi - f0.lo};
        if (forward) {
            rem = {rem.lo - g0.hi * h, rem.hi - g0.lo * h};
        } else {
            rem = {rem.lo + g0.lo * h, rem.hi + g0.hi * h};
        }
        const Enclosure<T> zero = Enclosure<T>::point(params.from_rational(0));
        const T defect = detail::max_abs_difference(ops, rem, zero);
        const bool ok = ops.le_scaled_power(defect, constant, h, 1 + params.alpha());
        const MpfrInterval normalized = ops.to_interval(defect) / MpfrInterval::pow3(-j * (1 + params.alpha()), params.precision());
        r.observe(normalized.upper_rational());
        if (!ok) {
            r.fail({{"sample", i},
                    {"x", detail::point_json(params, x)},
                    {"h", (forward ? "" : "-") + to_string(step)},
                    {"remainder", enclosure_json(ops, rem)},
                    {"normalized", metric_string(normalized.upper_rational())}});
        }
    }
    return r;
}

/// f maps the ends of J_n^k onto the ends of the middle-thirds gap I_n^k.
template <class T>
CheckResult check_image_gaps(const Params<T>& params, int max_level)
{
    CheckResult r;
    r.name = "image_gaps";
    r.metric = "max distance between f at gap ends and the triadic ends of I_n^k";
    r.tolerance = Params<T>::mode() == Mode::exact ? "0 (exact)" : "containment";
    const auto& ops = params.ops();
    for (int n = 1; n <= max_level; ++n) {
        const std::uint64_t count = 1ULL << static_cast<unsigned>(n - 1);
        for (std::uint64_t k = 1; k <= count; ++k) {
            const GapAddress addr(n, Integer(static_cast<unsigned long>(k)));
            const FatGap<T> gap = gap_interval(params, addr);
            const auto [want_lo, want_hi] = cantor_gap_interval(addr);
            ++r.samples;
            if constexpr (FieldOps<T>::mode == Mode::exact) {
                const auto f_lo = f_eval(params, gap.lo, n);
                const auto f_hi = f_eval(params, gap.hi, n);
                const auto g_lo = g_eval(params, gap.lo, n);
                const auto g_hi = g_eval(params, gap.hi, n);
                const bool ok = f_lo.lo == f_lo.hi && f_lo.lo == CubicNumber(want_lo) && f_hi.lo == f_hi.hi &&
                                f_hi.lo == CubicNumber(want_hi) && g_lo.hi.is_zero() && g_hi.hi.is_zero();
                if (f_lo.lo.is_rational() && f_hi.lo.is_rational()) {
                    r.observe(abs(f_lo.lo.a() - want_lo));
                    r.observe(abs(f_hi.lo.a() - want_hi));
                }
                if (!ok) {
                    r.fail({{"gap", to_json(addr)},
                            {"fLo", enclosure_json(ops, f_lo)},
                            {"fHi", enclosure_json(ops, f_hi)},
                            {"expected", {to_string(want_lo), to_string(want_hi)}}});
                }
            } else {
                const T inset = gap.length * make_rational(1, 1024);
                const T partial = params.tent_slope(n) * Rational(1, 2) * inset * inset;
                const T lo_image = f_eval(params, gap.lo + inset, n).lo - partial;
                const T hi_image = f_eval(params, gap.hi - inset, n).hi + partial;
                const bool ok = lo_image.contains(want_lo) && hi_image.contains(want_hi);
                r.observe(lo_image.width());
                r.observe(hi_image.width());
                if (!ok) {
                    r.fail({{"gap", to_json(addr)},
                            {"fLo", detail::point_json(params, lo_image)},
                            {"fHi", detail::point_json(params, hi_image)},
                            {"expected", {to_string(want_lo), to_string(want_hi)}}});
                }
            }
        }
    }
    return r;
}

/// Every u = 2i/N has a critical point with F = u: exact value, gradient
/// enclosures containing 0 below 2 l_{D+1}^alpha, F enclosure of width
/// <= 2 * 3^-D containing u.
template <class T>
CheckResult check_coverage(const Params<T>& params, int grid, int depth)
{
    CheckResult r;
    r.name = "coverage";
    r.metric = "max width of the F enclosure at the critical point";
    r.tolerance = "<= 2 * 3^-D";
    const auto& ops = params.ops();
    const T grad_bound = params.gap_length_pow_alpha(depth + 1) * Rational(2);
    Rational width_bound = 2 * pow3(-depth);
    if (FieldOps<T>::mode == Mode::floating) {
        width_bound += detail::rounding_slack(params.precision());
    }
    for (int i = 0; i <= grid; ++i) {
        const Rational u = make_rational(2 * i, grid);
        ++r.samples;
        const CriticalPoint<T> cp = critical_preimage(params, u, depth);
        nlohmann::json problems = nlohmann::json::array();
        if (cp.value != u || cp.x_digits.value() + cp.y_digits.value() != u) {
            problems.push_back("value mismatch");
        }
        if (cp.x_digits.has_digit_one() || cp.y_digits.has_digit_one()) {
            problems.push_back("digit 1 in a Cantor coordinate");
        }
        for (const auto* p : {&cp.x, &cp.y}) {
            const Enclosure<T> g = g_over_point(params, *p);
            if (!contains(ops, g, Rational(0)) || !detail::not_above(ops, g.hi, grad_bound)) {
                problems.push_back({{"gradient", enclosure_json(ops, g)}});
            }
        }
        const Enclosure<T> F = f_over_point(params, cp.x) + f_over_point(params, cp.y);
        const Rational w = upper_bound(ops, F) - lower_bound(ops, F);
        r.observe(w);
        if (!contains(ops, F, u) || w > width_bound) {
            problems.push_back({{"F", enclosure_json(ops, F)}});
        }
        if (!problems.empty()) {
            r.fail({{"u", to_string(u)}, {"problems", problems}, {"point", critical_point_json(params, cp)}});
        }
    }
    return r;
}

/// M - sum_{n<=d} 2^(n-1) l_n = 2^d L_d for d <= D, and 2^D L_D <= M (2/s)^D.
template <class T>
CheckResult check_measure(const Params<T>& params, int depth)
{
    CheckResult r;
    r.name = "measure";
    r.metric = "outer measure 2^D L_D of A at depth D";
    r.tolerance = "<= M (2/s)^D";
    const auto& ops = params.ops();
    T removed = params.from_rational(0);
    T bound = params.M();
    const T two_over_s = params.from_rational(2) / params.s();
    for (int d = 1; d <= depth; ++d) {
        ++r.samples;
        removed = removed + params.gap_length(d) * Rational(pow_int(2, static_cast<unsigned long>(d - 1)));
        bound = bound * two_over_s;
        const T surviving = params.component_length(d) * Rational(pow_int(2, static_cast<unsigned long>(d)));
        const T defect = params.M() - removed - surviving;
        bool ok = false;
        if constexpr (FieldOps<T>::mode == Mode::exact) {
            ok = defect.is_zero();
        } else {
            ok = !defect.sign().has_value() || *defect.sign() == 0;
        }
        if (!ok) {
            r.fail({{"depth", d}, {"defect", detail::point_json(params, defect)}});
        }
        if (!detail::not_above(ops, surviving, bound)) {
            r.fail({{"depth", d}, {"outerMeasure", detail::point_json(params, surviving)}, {"bound", detail::point_json(params, bound)}});
        }
        if (d == depth) {
            r.observe(detail::upper_of(ops, surviving));
        }
    }
    return r;
}

/// Random rationals u in [0, 2] split as x + y with x, y in the Cantor set;
/// sums of random Cantor points stay in [0, 2].
template <class T>
CheckResult check_steinhaus(const Params<T>& params, std::size_t samples, std::uint64_t seed)
{
    (void)params;
    CheckResult r;
    r.name = "steinhaus";
    r.metric = "max |x + y - u|";
    r.tolerance = "0 (exact)";
    for (std::size_t i = 0; i < samples; ++i) {
        SampleRng rng(seed, r.name, i);
        const Rational u = random_u(rng);
        const auto [x, y] = steinhaus_decompose(u);
        const Rational defect = abs(x.value() + y.value() - u);
        r.observe(defect);
        if (x.has_digit_one() || y.has_digit_one() || defect != 0) {
            r.fail({{"u", to_string(u)}, {"x", x.to_string()}, {"y", y.to_string()}});
        }
        const TernaryExpansion a = random_cantor_digits(rng, 8, 6);
        const TernaryExpansion b = random_cantor_digits(rng, 8, 6);
        const Rational sum = a.value() + b.value();
        if (sum < 0 || sum > 2) {
            r.fail({{"a", a.to_string()}, {"b", b.to_string()}, {"sum", to_string(sum)}});
        }
        ++r.samples;
    }
    return r;
}

/// Partial gap sums of random Cantor points increase with D and stay within
/// (2/3)^D of the point.
template <class T>
CheckResult check_partial_sums(const Params<T>& params, std::size_t samples, std::uint64_t seed, const std::vector<int>& depths)
{
    (void)params;
    CheckResult r;
    r.name = "partial_sums";
    r.metric = "max (x - partial sum at depth D) / (2/3)^D";
    r.tolerance = "<= 1";
    for (std::size_t i = 0; i < samples; ++i) {
        SampleRng rng(seed, r.name, i);
        const TernaryExpansion x = random_cantor_digits(rng, 10, 8);
        const Rational v = x.value();
        Rational previous = 0;
        ++r.samples;
        for (int d : depths) {
            const Rational s = cantor_partial_gap_sum(x, d);
            const Rational tail = make_rational(pow_int(2, static_cast<unsigned long>(d)), pow_int(3, static_cast<unsigned long>(d)));
            const Rational ratio = (v - s) / tail;
            r.observe(ratio);
            if (s < previous || s > v || ratio > 1) {
                r.fail({{"x", x.to_string()}, {"depth", d}, {"partialSum", to_string(s)}});
            }
            previous = s;
        }
    }
    return r;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"gap_integral", "total_integral", "holder", "c1",       "image_gaps",
                                                "coverage",     "measure",        "steinhaus", "partial_sums"};
    return names;
}

inline bool is_suite(const std::string& name)
{
    if (name == "all") {
        return true;
    }
    for (const auto& n : suite_names()) {
        if (n == name) {
            return true;
        }
    }
    return false;
}

/// Runs one named check; exceptions become failing results.
template <class T>
CheckResult run_check(const Params<T>& params, const VerifyConfig& config, const std::string& name)
{
    try {
        if (name == "gap_integral") {
            return check_gap_integral(params, config.levels);
        }
        if (name == "total_integral") {
            return check_total_integral(params, config.depth);
        }
        if (name == "holder") {
            return check_holder(params, config.samples, config.seed, config);
        }
        if (name == "c1") {
            return check_c1(params, config.samples, config.seed, config);
        }
        if (name == "image_gaps") {
            return check_image_gaps(params, config.levels);
        }
        if (name == "coverage") {
            return check_coverage(params, config.coverage_grid, config.depth);
        }
        if (name == "measure") {
            return check_measure(params, config.depth);
        }
        if (name == "steinhaus") {
            return check_steinhaus(params, config.samples, config.seed);
        }
        if (name == "partial_sums") {
            return check_partial_sums(params, config.partial_sum_samples, config.seed, config.partial_sum_depths);
        }
    } catch (const std::exception& e) {
        CheckResult r;
        r.name = name;
        r.fail({{"error", e.what()}});
        return r;
    }
    throw RangeError("unknown verification suite '" + name + "'");
}

/// Runs `suite` ("all" or a single check name) and aggregates the report.
template <class T>
VerificationReport run_all(const Params<T>& params, const VerifyConfig& config, const std::string& suite = "all")
{
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.params = params_json(params);
    report.seed = config.seed;
    for (const auto& name : suite_names()) {
        if (suite == "all" || suite == name) {
            report.checks.push_back(run_check(params, config, name));
        }
    }
    if (report.checks.empty()) {
        throw RangeError("unknown verification suite '" + suite + "'");
    }
    report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace sardex::verify
