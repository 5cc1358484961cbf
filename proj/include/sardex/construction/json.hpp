#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "sardex/construction/fat_cantor.hpp"
#include "sardex/construction/params.hpp"

namespace sardex {

/// Number of fraction digits that matches a binary precision.
inline std::size_t decimal_digits(mpfr_prec_t precision)
{
    return static_cast<std::size_t>(std::floor(static_cast<double>(precision) * 0.30102999566398119521));
}

/// Certified decimal bounds of a value: lo rounded down, hi rounded up.
template <class T>
nlohmann::json bounds_json(const FieldOps<T>& ops, const T& v)
{
    const std::size_t digits = decimal_digits(ops.precision);
    nlohmann::json j;
    if constexpr (std::is_same_v<T, CubicNumber>) {
        j["exact"] = v.to_string();
        if (v.is_rational()) {
            j["lo"] = to_fixed(v.a(), digits, Rounding::down);
            j["hi"] = to_fixed(v.a(), digits, Rounding::up);
            return j;
        }
    }
    const MpfrInterval iv = ops.to_interval(v);
    j["lo"] = to_fixed(iv.lower_rational(), digits, Rounding::down);
    j["hi"] = to_fixed(iv.upper_rational(), digits, Rounding::up);
    return j;
}

template <class T>
nlohmann::json enclosure_json(const FieldOps<T>& ops, const Enclosure<T>& e)
{
    const std::size_t digits = decimal_digits(ops.precision);
    nlohmann::json j;
    if constexpr (std::is_same_v<T, CubicNumber>) {
        if (e.lo == e.hi) {
            j["exact"] = e.lo.to_string();
        }
    }
    j["lo"] = to_fixed(lower_bound(ops, e), digits, Rounding::down);
    j["hi"] = to_fixed(upper_bound(ops, e), digits, Rounding::up);
    return j;
}

inline std::string path_string(const Path& path)
{
    std::string s;
    for (bool right : path) {
        s += right ? 'R' : 'L';
    }
    return s;
}

inline nlohmann::json to_json(const GapAddress& a) { return {{"level", a.level}, {"index", a.index.get_str()}}; }

inline nlohmann::json to_json(const ComponentAddress& a)
{
    return {{"depth", a.depth()}, {"path", path_string(a.path)}};
}

template <class T>
nlohmann::json params_json(const Params<T>& p)
{
    const MpfrInterval bound = constraint_bound(p.precision());
    const MpfrInterval margin = bound - MpfrInterval(p.alpha(), p.precision());
    const std::size_t digits = decimal_digits(p.precision());
    return {{"alpha", to_string(p.alpha())},
            {"mode", to_string(Params<T>::mode())},
            {"precision", p.precision()},
            {"tentCoefficient", to_string(p.tent_coefficient())},
            {"s", bounds_json(p.ops(), p.s())},
            {"M", bounds_json(p.ops(), p.M())},
            {"constraintMargin",
             {{"lo", to_fixed(margin.lower_rational(), digits, Rounding::down)},
              {"hi", to_fixed(margin.upper_rational(), digits, Rounding::up)}}}};
}

template <class T>
nlohmann::json locate_json(const Params<T>& p, const LocateResult<T>& r)
{
    if (const auto* hit = std::get_if<GapHit<T>>(&r)) {
        return {{"kind", "gap"},
                {"gap", to_json(hit->gap.address)},
                {"gapLo", bounds_json(p.ops(), hit->gap.lo)},
                {"gapHi", bounds_json(p.ops(), hit->gap.hi)},
                {"position", bounds_json(p.ops(), hit->position)}};
    }
    const auto& und = std::get<Undecided<T>>(r);
    const char* endpoint = und.endpoint == Endpoint::lower ? "lower" : und.endpoint == Endpoint::upper ? "upper" : "none";
    return {{"kind", "undecided"},
            {"component", to_json(und.component)},
            {"componentLo", bounds_json(p.ops(), und.lo)},
            {"componentHi", bounds_json(p.ops(), und.hi)},
            {"endpoint", endpoint}};
}

template <class T>
nlohmann::json critical_point_json(const Params<T>& p, const CriticalPoint<T>& cp)
{
    return {{"value", to_string(cp.value)},
            {"x", enclosure_json(p.ops(), cp.x.enclosure)},
            {"y", enclosure_json(p.ops(), cp.y.enclosure)},
            {"xComponent", to_json(cp.x.component)},
            {"yComponent", to_json(cp.y.component)},
            {"xDigits", cp.x_digits.to_string()},
            {"yDigits", cp.y_digits.to_string()},
            {"xDigitsValue", to_string(cp.x_digits.value())},
            {"yDigitsValue", to_string(cp.y_digits.value())}};
}

} // namespace sardex
