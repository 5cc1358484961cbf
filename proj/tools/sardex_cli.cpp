#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "sardex/sardex.hpp"

namespace {

using json = nlohmann::json;
using namespace sardex;

enum class Output { json, csv, text };

struct Options {
    std::string alpha = "1/2";
    std::string mode;
    long precision = 256;
    int depth = 30;
    std::uint64_t seed = 42;
    std::string output;

    std::string x;
    std::string y;
    std::string u;
    std::string suite = "all";
    std::string what = "both";
    long count = 100;
    long samples = 0;
    int levels = 0;
    int grid = 0;
};

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out)
{
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            flatten(value, prefix.empty() ? key : prefix + "." + key, out);
        }
    } else if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], prefix + "." + std::to_string(i), out);
        }
    } else if (j.is_string()) {
        out.emplace_back(prefix, j.get<std::string>());
    } else {
        out.emplace_back(prefix, j.dump());
    }
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c;
        if (c == '"') {
            q += '"';
        }
    }
    return q + "\"";
}

void emit(const json& record, Output output)
{
    if (output == Output::json) {
        std::cout << record.dump(2) << '\n';
        return;
    }
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(record, "", rows);
    if (output == Output::csv) {
        std::cout << "key,value\n";
    }
    for (const auto& [k, v] : rows) {
        if (output == Output::csv) {
            std::cout << csv_field(k) << ',' << csv_field(v) << '\n';
        } else {
            std::cout << k << '=' << v << '\n';
        }
    }
}

Output resolve_output(const std::string& requested, Output fallback)
{
    if (requested.empty()) {
        return fallback;
    }
    return requested == "json" ? Output::json : requested == "csv" ? Output::csv : Output::text;
}

/// Rationals and decimals in either mode; "a + b*t + c*t^2" names an element
/// of Q(3^(1/3)), exact in exact mode and enclosed in float mode.
template <class T>
T parse_point(const Params<T>& params, const std::string& text)
{
    if (text.find('t') == std::string::npos) {
        return params.from_rational(parse_rational(text));
    }
    const CubicNumber c = parse_cubic(text);
    if constexpr (std::is_same_v<T, CubicNumber>) {
        return c;
    } else {
        return FieldOps<CubicNumber>{params.precision()}.to_interval(c);
    }
}

template <class T>
int cmd_eval(const Params<T>& params, const Options& opt)
{
    const auto& ops = params.ops();
    const T x = parse_point(params, opt.x);
    json r;
    r["depth"] = opt.depth;
    r["x"] = bounds_json(ops, x);
    r["locateX"] = locate_json(params, locate(params, x, opt.depth));
    r["g"] = enclosure_json(ops, g_eval(params, x, opt.depth));
    r["f"] = enclosure_json(ops, f_eval(params, x, opt.depth));
    if (!opt.y.empty()) {
        const T y = parse_point(params, opt.y);
        r["y"] = bounds_json(ops, y);
        r["locateY"] = locate_json(params, locate(params, y, opt.depth));
        r["F"] = enclosure_json(ops, F_eval(params, x, y, opt.depth));
        const auto [gx, gy] = grad_F(params, x, y, opt.depth);
        r["gradF"] = {{"dx", enclosure_json(ops, gx)}, {"dy", enclosure_json(ops, gy)}};
    }
    emit(r, resolve_output(opt.output, Output::text));
    return 0;
}

int cmd_decompose(const Options& opt)
{
    const Rational u = parse_rational(opt.u);
    const auto [x, y] = steinhaus_decompose(u);
    json r;
    r["u"] = to_string(u);
    r["x"] = {{"digits", x.notation()}, {"expansion", x.to_string()}, {"value", to_string(x.value())}};
    r["y"] = {{"digits", y.notation()}, {"expansion", y.to_string()}, {"value", to_string(y.value())}};
    r["exactSum"] = x.value() + y.value() == u;
    emit(r, resolve_output(opt.output, Output::text));
    return 0;
}

template <class T>
int cmd_preimage(const Params<T>& params, const Options& opt)
{
    const auto& ops = params.ops();
    const Rational u = parse_rational(opt.u);
    const CriticalPoint<T> cp = critical_preimage(params, u, opt.depth);
    json r = critical_point_json(params, cp);
    r["depth"] = opt.depth;
    r["widthBound"] = bounds_json(ops, params.component_length(opt.depth));
    r["gradX"] = enclosure_json(ops, g_over_point(params, cp.x));
    r["gradY"] = enclosure_json(ops, g_over_point(params, cp.y));
    r["F"] = enclosure_json(ops, f_over_point(params, cp.x) + f_over_point(params, cp.y));
    emit(r, resolve_output(opt.output, Output::text));
    return 0;
}

template <class T>
int cmd_verify(const Params<T>& params, const Options& opt, bool depth_given)
{
    verify::VerifyConfig config;
    config.seed = opt.seed;
    if (depth_given) {
        config.depth = opt.depth;
    }
    if (opt.samples > 0) {
        config.samples = static_cast<std::size_t>(opt.samples);
    }
    if (opt.levels > 0) {
        config.levels = opt.levels;
    }
    if (opt.grid > 0) {
        config.coverage_grid = opt.grid;
    }
    const verify::VerificationReport report = verify::run_all(params, config, opt.suite);
    const Output output = resolve_output(opt.output, Output::json);
    if (output == Output::json) {
        std::cout << report.to_json().dump(2) << '\n';
    } else {
        const char sep = output == Output::csv ? ',' : ' ';
        if (output == Output::csv) {
            std::cout << "name,status,samples,worstMetric,tolerance\n";
        }
        for (const auto& c : report.checks) {
            const json j = c.to_json();
            std::cout << c.name << sep << j["status"].get<std::string>() << sep << c.samples << sep
                      << j["worstMetric"].get<std::string>() << sep << csv_field(c.tolerance) << '\n';
        }
        if (output == Output::text) {
            std::cout << "overall " << (report.overall() ? "pass" : "fail") << '\n';
        }
    }
    return report.overall() ? 0 : 1;
}

template <class T>
int cmd_sample(const Params<T>& params, const Options& opt)
{
    if (opt.count < 2) {
        throw RangeError("--count must be at least 2");
    }
    const auto& ops = params.ops();
    const bool want_g = opt.what != "f";
    const bool want_f = opt.what != "g";
    const std::size_t digits = decimal_digits(params.precision());
    std::vector<std::string> columns{"x"};
    if (want_g) {
        columns.insert(columns.end(), {"g_lo", "g_hi"});
    }
    if (want_f) {
        columns.insert(columns.end(), {"f_lo", "f_hi"});
    }
    std::vector<std::vector<std::string>> rows;
    for (long i = 0; i <= opt.count; ++i) {
        const T x = params.M() * make_rational(i, opt.count);
        const MpfrInterval xi = ops.to_interval(x);
        std::vector<std::string> row{to_fixed((xi.lower_rational() + xi.upper_rational()) / 2, digits, Rounding::nearest)};
        if (want_g) {
            const Enclosure<T> g = g_eval(params, x, opt.depth);
            row.push_back(to_fixed(lower_bound(ops, g), digits, Rounding::down));
            row.push_back(to_fixed(upper_bound(ops, g), digits, Rounding::up));
        }
        if (want_f) {
            const Enclosure<T> f = f_eval(params, x, opt.depth);
            row.push_back(to_fixed(lower_bound(ops, f), digits, Rounding::down));
            row.push_back(to_fixed(upper_bound(ops, f), digits, Rounding::up));
        }
        rows.push_back(std::move(row));
    }
    const Output output = resolve_output(opt.output, Output::csv);
    if (output == Output::json) {
        std::cout << json{{"columns", columns}, {"rows", rows}}.dump(2) << '\n';
        return 0;
    }
    const char sep = output == Output::csv ? ',' : ' ';
    auto line = [&](const std::vector<std::string>& fields) {
        for (std::size_t k = 0; k < fields.size(); ++k) {
            std::cout << (k ? std::string(1, sep) : std::string()) << fields[k];
        }
        std::cout << '\n';
    };
    line(columns);
    for (const auto& row : rows) {
        line(row);
    }
    return 0;
}

template <class T>
int cmd_info(const Params<T>& params, const Options& opt)
{
    const auto& ops = params.ops();
    const FatGap<T> gap = gap_interval(params, GapAddress(1, Integer(1)));
    json r = params_json(params);
    r["L1"] = bounds_json(ops, params.component_length(1));
    r["J11"] = {{"lo", bounds_json(ops, gap.lo)},
                {"hi", bounds_json(ops, gap.hi)},
                {"midpoint", bounds_json(ops, gap.lo + gap.length * Rational(1, 2))},
                {"length", bounds_json(ops, gap.length)}};
    r["peak1"] = bounds_json(ops, params.peak(1));
    emit(r, resolve_output(opt.output, Output::text));
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified evaluation of a C^(1,alpha) counterexample to Sard's theorem"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--alpha", opt.alpha, "Hoelder exponent as a rational or decimal")->capture_default_str();
    app.add_option("--mode", opt.mode, "exact (alpha = 1/2 only) or float; default exact when alpha = 1/2")
        ->check(CLI::IsMember({"exact", "float"}));
    app.add_option("--precision", opt.precision, "MPFR precision in bits (>= 64)")->capture_default_str();
    app.add_option("--depth", opt.depth, "descent depth D")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--seed", opt.seed, "verification seed")->capture_default_str();
    app.add_option("--output", opt.output, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));

    auto* eval = app.add_subcommand("eval", "evaluate g and f at x, and F, grad F at (x, y)");
    eval->add_option("--x", opt.x, "point in [0, M]")->required();
    eval->add_option("--y", opt.y, "second coordinate");
    auto* decompose = app.add_subcommand("decompose", "split u in [0, 2] as x + y with x, y in the Cantor set");
    decompose->add_option("--u", opt.u, "rational in [0, 2]")->required();
    auto* preimage = app.add_subcommand("preimage", "critical point of F with value u");
    preimage->add_option("--u", opt.u, "rational in [0, 2]")->required();
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites");
    verify_cmd->add_option("--suite", opt.suite, "all or one check name")->capture_default_str();
    verify_cmd->add_option("--samples", opt.samples, "samples for holder, c1 and steinhaus");
    verify_cmd->add_option("--levels", opt.levels, "gap levels for gap_integral and image_gaps");
    verify_cmd->add_option("--grid", opt.grid, "coverage grid size");
    auto* sample = app.add_subcommand("sample", "CSV samples of g and f on [0, M]");
    sample->add_option("--count", opt.count, "number of intervals N")->capture_default_str();
    sample->add_option("--what", opt.what, "g, f or both")->check(CLI::IsMember({"g", "f", "both"}))->capture_default_str();
    auto* info = app.add_subcommand("info", "construction parameters and first-level landmarks");
    for (auto* sub : {eval, decompose, preimage, verify_cmd, sample, info}) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (decompose->parsed()) {
            return cmd_decompose(opt);
        }
        if (verify_cmd->parsed() && !verify::is_suite(opt.suite)) {
            std::cerr << "error: unknown suite '" << opt.suite << "'; expected all";
            for (const auto& n : verify::suite_names()) {
                std::cerr << ", " << n;
            }
            std::cerr << '\n';
            return 2;
        }
        const Rational alpha = parse_rational(opt.alpha);
        Mode mode = alpha == Rational(1, 2) ? Mode::exact : Mode::floating;
        if (!opt.mode.empty()) {
            mode = opt.mode == "exact" ? Mode::exact : Mode::floating;
        }
        const AnyParams params = params_new(alpha, mode, static_cast<mpfr_prec_t>(opt.precision));
        const bool depth_given = app.get_option("--depth")->count() > 0;
        return std::visit(
            [&](const auto& p) -> int {
                if (eval->parsed()) {
                    return cmd_eval(p, opt);
                }
                if (preimage->parsed()) {
                    return cmd_preimage(p, opt);
                }
                if (verify_cmd->parsed()) {
                    return cmd_verify(p, opt, depth_given);
                }
                if (sample->parsed()) {
                    return cmd_sample(p, opt);
                }
                return cmd_info(p, opt);
            },
            params);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
